//! Seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use structio_core::{Cost, CostVector, StateDigraph};

use crate::instance::Instance;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenParams {
    pub n: usize,
    /// Probability of each ordered pair `(i, j)`, self-loops included.
    pub density: f64,
    pub seed: u64,
    /// Inclusive range of integer finite costs.
    pub cost_lo: u32,
    pub cost_hi: u32,
    /// Probability that a state is forbidden (infinite cost).
    pub inf_prob: f64,
}

impl GenParams {
    pub fn new(n: usize, density: f64, seed: u64) -> Self {
        Self {
            n,
            density,
            seed,
            cost_lo: 0,
            cost_hi: 20,
            inf_prob: 0.0,
        }
    }

    pub fn costs(mut self, lo: u32, hi: u32) -> Self {
        self.cost_lo = lo;
        self.cost_hi = hi;
        self
    }

    pub fn inf_prob(mut self, p: f64) -> Self {
        self.inf_prob = p;
        self
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GenError {
    #[error("n must be at least 1")]
    NoStates,
    #[error("{name} must lie in [0, 1], got {value}")]
    Probability { name: &'static str, value: f64 },
    #[error("empty cost range {lo}:{hi}")]
    CostRange { lo: u32, hi: u32 },
}

fn check_probability(name: &'static str, value: f64) -> Result<(), GenError> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(GenError::Probability { name, value })
    }
}

/// Draws edges row by row, then costs, from one ChaCha8 stream; the same
/// parameters always give the same instance.
pub fn generate(params: &GenParams) -> Result<Instance, GenError> {
    if params.n == 0 {
        return Err(GenError::NoStates);
    }
    check_probability("density", params.density)?;
    check_probability("inf-prob", params.inf_prob)?;
    if params.cost_lo > params.cost_hi {
        return Err(GenError::CostRange {
            lo: params.cost_lo,
            hi: params.cost_hi,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let n = params.n;
    let mut g = StateDigraph::new(n).expect("n checked");
    for i in 0..n {
        for j in 0..n {
            if rng.gen::<f64>() < params.density {
                g.add_edge(i, j).expect("in range");
            }
        }
    }
    let costs = (0..n)
        .map(|_| {
            if rng.gen::<f64>() < params.inf_prob {
                Cost::Infinite
            } else {
                Cost::from(rng.gen_range(params.cost_lo..=params.cost_hi))
            }
        })
        .collect::<Vec<_>>();
    Ok(Instance::new(g, CostVector::new(costs)).expect("lengths agree"))
}
