//! Exhaustive reference solvers for small instances.
//!
//! Nothing here shares code with the matching reductions in
//! [`crate::placement`]: feasibility of each subset is decided by the
//! controllability test, and the optimum by plain enumeration.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::analysis::is_feasible_dedicated_configuration;
use crate::digraph::{scc_decompose, SccDecomposition, StateDigraph};
use crate::{Cost, CostVector, Error};

/// Largest instance the exhaustive solvers accept.
pub const MAX_ORACLE_STATES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// Optimal cost; infinite when no finite-cost placement exists.
    pub best_cost: Cost,
    /// Size of the optimal placements (the smallest witness for P2), or 0
    /// when infeasible.
    pub best_cardinality: usize,
    /// Every optimal state set, each ascending, in lexicographic order.
    /// Empty when infeasible.
    pub witnesses: Vec<Vec<usize>>,
}

impl OracleResult {
    pub fn is_feasible(&self) -> bool {
        self.best_cost.is_finite()
    }
}

fn guard(g: &StateDigraph, c: &CostVector) -> Result<(), Error> {
    if g.n() > MAX_ORACLE_STATES {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: MAX_ORACLE_STATES,
        });
    }
    if c.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: c.len(),
        });
    }
    Ok(())
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask & (1 << i) != 0).collect()
}

/// Bitmask of each non-top-linked SCC.
fn source_masks(scc: &SccDecomposition) -> Vec<u32> {
    scc.non_top_linked()
        .iter()
        .map(|&k| scc.component(k).iter().fold(0, |acc, &x| acc | (1 << x)))
        .collect()
}

/// Feasible dedicated configurations as bitmasks, grouped by size.
fn feasible_by_size(g: &StateDigraph) -> Result<Vec<Vec<u32>>, Error> {
    let n = g.n();
    let sources = source_masks(&scc_decompose(g));
    let mut by_size = alloc::vec![Vec::new(); n + 1];
    for mask in 0u32..(1 << n) {
        // Missing a source SCC is fatal; skip the matching test.
        if sources.iter().any(|&s| s & mask == 0) {
            continue;
        }
        if is_feasible_dedicated_configuration(g, &members(mask, n))? {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    Ok(by_size)
}

fn optimum<'a, I: Iterator<Item = &'a u32>>(masks: I, n: usize, c: &CostVector) -> OracleResult {
    let mut best = Cost::Infinite;
    let mut witnesses: Vec<Vec<usize>> = Vec::new();
    for &mask in masks {
        let set = members(mask, n);
        let cost = c.total(set.iter().copied());
        if !cost.is_finite() {
            continue;
        }
        if cost < best {
            best = cost;
            witnesses.clear();
        }
        if cost == best {
            witnesses.push(set);
        }
    }
    witnesses.sort();
    let best_cardinality = witnesses.iter().map(Vec::len).min().unwrap_or(0);
    OracleResult {
        best_cost: best,
        best_cardinality,
        witnesses,
    }
}

/// Cheapest feasible dedicated configuration among those of minimum size.
pub fn brute_force_p1(g: &StateDigraph, c: &CostVector) -> Result<OracleResult, Error> {
    guard(g, c)?;
    let by_size = feasible_by_size(g)?;
    let smallest = by_size
        .iter()
        .find(|sets| !sets.is_empty())
        .expect("actuating every state is always feasible");
    Ok(optimum(smallest.iter(), g.n(), c))
}

/// Cheapest feasible dedicated configuration of any size.
pub fn brute_force_p2(g: &StateDigraph, c: &CostVector) -> Result<OracleResult, Error> {
    guard(g, c)?;
    let by_size = feasible_by_size(g)?;
    Ok(optimum(by_size.iter().flatten(), g.n(), c))
}

/// Right-unmatched sets of all maximum matchings of the state bipartite
/// graph, by dynamic programming over covered right-vertex sets.
pub fn maximum_matching_unmatched_sets(g: &StateDigraph) -> Result<Vec<Vec<usize>>, Error> {
    let n = g.n();
    if n > MAX_ORACLE_STATES {
        return Err(Error::TooLarge {
            n,
            limit: MAX_ORACLE_STATES,
        });
    }
    let mut covered: BTreeSet<u32> = BTreeSet::new();
    covered.insert(0);
    for l in 0..n {
        let mut next = covered.clone();
        for &set in &covered {
            for &r in g.successors(l) {
                if set & (1 << r) == 0 {
                    next.insert(set | (1 << r));
                }
            }
        }
        covered = next;
    }
    let best = covered.iter().map(|s| s.count_ones()).max().unwrap_or(0);
    let full = (1u32 << n) - 1;
    let mut sets: Vec<Vec<usize>> = covered
        .iter()
        .filter(|s| s.count_ones() == best)
        .map(|&s| members(full & !s, n))
        .collect();
    sets.sort();
    Ok(sets)
}

/// Feasibility in its combinatorial form: the set contains the right-unmatched
/// vertices of some maximum matching of `B(A)` and a state of every
/// non-top-linked SCC.
pub fn combinatorial_feasibility(g: &StateDigraph, states: &[usize]) -> Result<bool, Error> {
    let scc = scc_decompose(g);
    let covers_sources = scc
        .non_top_linked()
        .iter()
        .all(|&k| states.iter().any(|&s| scc.component_of(s) == k));
    if !covers_sources {
        return Ok(false);
    }
    Ok(maximum_matching_unmatched_sets(g)?
        .iter()
        .any(|u| u.iter().all(|x| states.contains(x))))
}

/// Seven-state example with actuation costs `[50, inf, 10, 10, 1, 10, 20]`.
///
/// The adjacency is a reconstruction consistent with the known properties of
/// the example: a single source SCC containing states 0, 1 and 2, `{1, 6}`
/// feasible, two dedicated inputs needed, minimum-size optimum 60 at `{0, 5}`
/// and unconstrained optimum 30 at `{2, 3, 5}`. The test suite certifies each
/// of these with the exhaustive solvers.
pub fn build_paper_fixture() -> (StateDigraph, CostVector) {
    const EDGES: [(usize, usize); 11] = [
        (0, 2),
        (1, 0),
        (1, 2),
        (1, 3),
        (2, 0),
        (2, 1),
        (2, 4),
        (3, 5),
        (3, 6),
        (5, 4),
        (6, 4),
    ];
    let g = StateDigraph::from_edges(7, EDGES).expect("fixture edges in range");
    let c = CostVector::new(alloc::vec![
        Cost::from(50),
        Cost::Infinite,
        Cost::from(10),
        Cost::from(10),
        Cost::from(1),
        Cost::from(10),
        Cost::from(20),
    ]);
    (g, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn path_needs_its_head() {
        let g = StateDigraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let r = brute_force_p1(&g, &CostVector::uniform(3, Cost::from(4))).unwrap();
        assert_eq!(r.best_cardinality, 1);
        assert_eq!(r.witnesses, vec![vec![0]]);
    }

    #[test]
    fn edgeless_pair() {
        let g = StateDigraph::new(2).unwrap();
        let r = brute_force_p1(&g, &CostVector::uniform(2, Cost::from(1))).unwrap();
        assert_eq!((r.best_cardinality, r.best_cost), (2, Cost::from(2)));
        assert_eq!(r.witnesses, vec![vec![0, 1]]);
    }

    #[test]
    fn cycle_p2_singleton() {
        let g = StateDigraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let c = CostVector::new(vec![Cost::from(4), Cost::from(2), Cost::from(9)]);
        let r = brute_force_p2(&g, &c).unwrap();
        assert_eq!(r.best_cost, Cost::from(2));
        assert_eq!(r.witnesses, vec![vec![1]]);
    }

    #[test]
    fn infeasible_reports_infinity() {
        let g = StateDigraph::new(1).unwrap();
        let r = brute_force_p1(&g, &CostVector::uniform(1, Cost::Infinite)).unwrap();
        assert!(!r.is_feasible());
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn guard_rejects_large_instances() {
        let g = StateDigraph::new(21).unwrap();
        let c = CostVector::uniform(21, Cost::from(1));
        assert!(matches!(
            brute_force_p1(&g, &c),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            brute_force_p2(&g, &c),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn unmatched_sets_of_star() {
        let g = StateDigraph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        assert_eq!(
            maximum_matching_unmatched_sets(&g).unwrap(),
            vec![vec![0, 1], vec![0, 2]]
        );
    }
}
