//! Extended nonnegative costs.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::iter::Sum;
use core::ops::Add;

use crate::Error;

/// A nonnegative cost that may be infinite.
///
/// `Infinite` marks a forbidden state (or edge). Addition absorbs infinity,
/// so a sum containing any infinite term is infinite.
#[derive(Debug, Clone, Copy)]
pub enum Cost {
    Finite(f64),
    Infinite,
}

impl Cost {
    pub const ZERO: Cost = Cost::Finite(0.0);

    /// Validates a raw value. `f64::INFINITY` maps to [`Cost::Infinite`];
    /// negative values and NaN are rejected.
    pub fn new(value: f64) -> Result<Self, Error> {
        if value.is_nan() || value < 0.0 {
            Err(Error::InvalidCost(value))
        } else if value == f64::INFINITY {
            Ok(Cost::Infinite)
        } else {
            Ok(Cost::Finite(value))
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Cost::Finite(_))
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            Cost::Finite(v) => Some(v),
            Cost::Infinite => None,
        }
    }

    /// The value as an `f64`, with `f64::INFINITY` for infinite costs.
    pub fn to_f64(self) -> f64 {
        self.finite().unwrap_or(f64::INFINITY)
    }
}

impl From<u32> for Cost {
    fn from(v: u32) -> Self {
        Cost::Finite(f64::from(v))
    }
}

impl PartialEq for Cost {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Cost {}

impl PartialOrd for Cost {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cost {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Cost::Finite(a), Cost::Finite(b)) => a.total_cmp(b),
            (Cost::Finite(_), Cost::Infinite) => Ordering::Less,
            (Cost::Infinite, Cost::Finite(_)) => Ordering::Greater,
            (Cost::Infinite, Cost::Infinite) => Ordering::Equal,
        }
    }
}

impl Add for Cost {
    type Output = Cost;

    fn add(self, rhs: Cost) -> Cost {
        match (self, rhs) {
            (Cost::Finite(a), Cost::Finite(b)) => Cost::Finite(a + b),
            _ => Cost::Infinite,
        }
    }
}

impl Sum for Cost {
    fn sum<I: Iterator<Item = Cost>>(iter: I) -> Cost {
        iter.fold(Cost::ZERO, Add::add)
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cost::Finite(v) => write!(f, "{v}"),
            Cost::Infinite => f.write_str("inf"),
        }
    }
}

/// Per-state actuation costs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostVector {
    costs: Vec<Cost>,
}

impl CostVector {
    pub fn new(costs: Vec<Cost>) -> Self {
        Self { costs }
    }

    /// Builds a cost vector from raw values, `f64::INFINITY` meaning forbidden.
    pub fn from_f64s(values: &[f64]) -> Result<Self, Error> {
        values
            .iter()
            .map(|&v| Cost::new(v))
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }

    pub fn uniform(n: usize, cost: Cost) -> Self {
        Self::new(alloc::vec![cost; n])
    }

    pub fn len(&self) -> usize {
        self.costs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.costs.is_empty()
    }

    pub fn get(&self, state: usize) -> Cost {
        self.costs[state]
    }

    pub fn as_slice(&self) -> &[Cost] {
        &self.costs
    }

    pub fn iter(&self) -> impl Iterator<Item = Cost> + '_ {
        self.costs.iter().copied()
    }

    /// Largest finite entry, or `None` if every entry is infinite.
    pub fn max_finite(&self) -> Option<f64> {
        self.costs
            .iter()
            .filter_map(|c| c.finite())
            .max_by(f64::total_cmp)
    }

    /// Total cost of actuating `states` (each counted once by the caller).
    pub fn total<I: IntoIterator<Item = usize>>(&self, states: I) -> Cost {
        states.into_iter().map(|s| self.costs[s]).sum()
    }

    /// Multiplies every finite entry by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self::new(
            self.costs
                .iter()
                .map(|c| match c {
                    Cost::Finite(v) => Cost::Finite(v * factor),
                    Cost::Infinite => Cost::Infinite,
                })
                .collect(),
        )
    }
}
