//! Structural controllability primitives.
//!
//! A pair (A, B) is structurally controllable iff every state is reachable
//! from some input in the system digraph and a maximum matching of the system
//! bipartite graph covers every state. With dedicated inputs the first
//! condition reduces to touching every non-top-linked SCC.

use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::{reachable_from, scc_decompose, SccDecomposition, StateDigraph};
use crate::matching::{maximum_matching, right_unmatched, BipartiteGraph};
use crate::Error;

/// Sparsity pattern of an input matrix, stored column by column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructuralInputMatrix {
    n: usize,
    columns: Vec<Vec<usize>>,
}

impl StructuralInputMatrix {
    /// Builds the pattern from per-column row lists (sorted and deduplicated here).
    pub fn new(n: usize, mut columns: Vec<Vec<usize>>) -> Result<Self, Error> {
        for col in &mut columns {
            col.sort_unstable();
            col.dedup();
            if let Some(&row) = col.iter().find(|&&r| r >= n) {
                return Err(Error::VertexOutOfRange {
                    index: row,
                    size: n,
                });
            }
        }
        Ok(Self { n, columns })
    }

    pub fn from_entries<I>(n: usize, p_cols: usize, entries: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut columns = vec![Vec::new(); p_cols];
        for (row, col) in entries {
            if col >= p_cols {
                return Err(Error::ColumnOutOfRange {
                    column: col,
                    columns: p_cols,
                });
            }
            columns[col].push(row);
        }
        Self::new(n, columns)
    }

    /// One dedicated input per listed state, in ascending state order.
    pub fn dedicated(n: usize, states: &[usize]) -> Result<Self, Error> {
        let mut states = states.to_vec();
        states.sort_unstable();
        states.dedup();
        Self::new(n, states.into_iter().map(|s| vec![s]).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n,
            columns: (0..n).map(|s| vec![s]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// Nonzero entries as `(row, column)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, rows)| rows.iter().map(move |&r| (r, c)))
    }

    pub fn nonzeros(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Whether every nonzero column has exactly one entry.
    pub fn is_dedicated(&self) -> bool {
        self.columns.iter().all(|c| c.len() <= 1)
    }

    /// States with at least one input, ascending.
    pub fn actuated_states(&self) -> Vec<usize> {
        let mut hit = vec![false; self.n];
        for (r, _) in self.entries() {
            hit[r] = true;
        }
        (0..self.n).filter(|&s| hit[s]).collect()
    }
}

/// Minimum dedicated input count and the quantities it is built from.
///
/// `p = m + beta - alpha`, where `m` counts right-unmatched vertices of a
/// maximum matching of the state bipartite graph, `beta` counts non-top-linked
/// SCCs, and `alpha` is the largest number of those SCCs that can each hold a
/// distinct right-unmatched vertex of one maximum matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DedicatedCount {
    pub p: usize,
    pub m: usize,
    pub beta: usize,
    pub alpha: usize,
}

/// `B(A)`: left and right are both state copies, edge `(i, j)` per `i -> j`.
pub fn state_bipartite(g: &StateDigraph) -> BipartiteGraph {
    let mut b = BipartiteGraph::new(g.n(), g.n());
    for (i, j) in g.edges() {
        b.add_edge(i, j).expect("digraph edge in range");
    }
    b
}

/// `B(A, B)`: left is states then inputs, right is states. Input `c` is left
/// vertex `n + c`.
pub fn system_bipartite(
    g: &StateDigraph,
    b: &StructuralInputMatrix,
) -> Result<BipartiteGraph, Error> {
    check_dims(g, b)?;
    let n = g.n();
    let mut bg = BipartiteGraph::new(n + b.p_cols(), n);
    for (i, j) in g.edges() {
        bg.add_edge(i, j)?;
    }
    for (row, col) in b.entries() {
        bg.add_edge(n + col, row)?;
    }
    Ok(bg)
}

fn check_dims(g: &StateDigraph, b: &StructuralInputMatrix) -> Result<(), Error> {
    if b.n() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: b.n(),
        });
    }
    Ok(())
}

/// Why a pair fails (or passes) the structural controllability test.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ControllabilityReport {
    /// States no input reaches through the digraph.
    pub unreachable: Vec<usize>,
    /// Right-unmatched states of one maximum matching of `B(A, B)`.
    pub unsaturated: Vec<usize>,
}

impl ControllabilityReport {
    pub fn is_controllable(&self) -> bool {
        self.unreachable.is_empty() && self.unsaturated.is_empty()
    }
}

pub fn controllability_report(
    g: &StateDigraph,
    b: &StructuralInputMatrix,
) -> Result<ControllabilityReport, Error> {
    let bg = system_bipartite(g, b)?;
    let reached = reachable_from(g, &b.actuated_states());
    let unreachable = (0..g.n()).filter(|s| !reached.contains(s)).collect();
    let unsaturated = right_unmatched(&bg, &maximum_matching(&bg));
    Ok(ControllabilityReport {
        unreachable,
        unsaturated,
    })
}

pub fn is_structurally_controllable(
    g: &StateDigraph,
    b: &StructuralInputMatrix,
) -> Result<bool, Error> {
    controllability_report(g, b).map(|r| r.is_controllable())
}

/// Outcome of checking a candidate dedicated input configuration.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DedicatedCheck {
    /// Non-top-linked SCCs that contain no selected state.
    pub uncovered_sccs: Vec<usize>,
    /// States left right-unmatched by a maximum matching of `B(A, B)`.
    pub unsaturated: Vec<usize>,
}

impl DedicatedCheck {
    pub fn is_feasible(&self) -> bool {
        self.uncovered_sccs.is_empty() && self.unsaturated.is_empty()
    }
}

fn check_states(g: &StateDigraph, states: &[usize]) -> Result<(), Error> {
    match states.iter().find(|&&s| s >= g.n()) {
        Some(&index) => Err(Error::VertexOutOfRange { index, size: g.n() }),
        None => Ok(()),
    }
}

pub fn check_dedicated_configuration(
    g: &StateDigraph,
    states: &[usize],
) -> Result<DedicatedCheck, Error> {
    check_states(g, states)?;
    let scc = scc_decompose(g);
    let uncovered_sccs = scc
        .non_top_linked()
        .iter()
        .copied()
        .filter(|&k| !states.iter().any(|&s| scc.component_of(s) == k))
        .collect();
    let b = StructuralInputMatrix::dedicated(g.n(), states)?;
    let bg = system_bipartite(g, &b)?;
    let unsaturated = right_unmatched(&bg, &maximum_matching(&bg));
    Ok(DedicatedCheck {
        uncovered_sccs,
        unsaturated,
    })
}

/// Whether one dedicated input on each state of `states` makes the system
/// structurally controllable.
pub fn is_feasible_dedicated_configuration(
    g: &StateDigraph,
    states: &[usize],
) -> Result<bool, Error> {
    check_states(g, states)?;
    let b = StructuralInputMatrix::dedicated(g.n(), states)?;
    is_structurally_controllable(g, &b)
}

pub fn minimum_dedicated_inputs(g: &StateDigraph) -> DedicatedCount {
    dedicated_count(g, &scc_decompose(g))
}

/// [`minimum_dedicated_inputs`] reusing a precomputed decomposition of `g`.
pub fn dedicated_count(g: &StateDigraph, scc: &SccDecomposition) -> DedicatedCount {
    let n = g.n();
    let state_part = state_bipartite(g);
    let matched = maximum_matching(&state_part).len();
    let m = n - matched;
    let beta = scc.beta();

    // One slack per source SCC, reaching only that SCC's states. Every extra
    // matched edge places a right-unmatched vertex in a distinct source SCC.
    let mut augmented = BipartiteGraph::new(n + beta, n);
    for (i, j) in g.edges() {
        augmented.add_edge(i, j).expect("in range");
    }
    for (k, &comp) in scc.non_top_linked().iter().enumerate() {
        for &x in scc.component(comp) {
            augmented.add_edge(n + k, x).expect("in range");
        }
    }
    let alpha = maximum_matching(&augmented).len() - matched;

    DedicatedCount {
        p: m + beta - alpha,
        m,
        beta,
        alpha,
    }
}
