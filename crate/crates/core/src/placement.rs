//! Minimum-cost dedicated input placement.
//!
//! Both solvers attach `p` slack vertices (`p` = minimum number of dedicated
//! inputs) to the state bipartite graph, weight the edges so that a
//! minimum-weight maximum matching routes slacks onto the cheapest states that
//! still form a feasible dedicated configuration, and read the placement off
//! the matched slack edges. Slack `k` is left vertex `n + k`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::analysis::{
    dedicated_count, is_feasible_dedicated_configuration, is_structurally_controllable,
    DedicatedCount, StructuralInputMatrix,
};
use crate::digraph::{scc_decompose, SccDecomposition, StateDigraph};
use crate::matching::{min_weight_maximum_matching, Matching, WeightedBipartiteGraph};
use crate::{Cost, CostVector, Error};

/// Which placement problem a solution answers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Problem {
    /// Cheapest placement among those with the fewest actuated states.
    P1,
    /// Cheapest placement of any size.
    P2,
}

/// A matched slack edge and the states it puts inputs on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SlackAssignment {
    pub slack: usize,
    pub state: usize,
    /// The matched state, plus the cheapest state of the slack's source SCC
    /// when the matched state lies outside it (P2 only).
    pub actuated: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlacementSolution {
    pub problem: Problem,
    /// Ascending ids of the states that get a dedicated input.
    pub selected_states: Vec<usize>,
    /// Identity columns on `selected_states`.
    pub input_matrix: StructuralInputMatrix,
    pub total_cost: Cost,
    pub counts: DedicatedCount,
    /// Members of each non-top-linked SCC, in component order.
    pub non_top_linked: Vec<Vec<usize>>,
    /// Winning matching on the state-slack bipartite graph.
    pub matching: Matching,
    pub slack_assignments: Vec<SlackAssignment>,
}

impl PlacementSolution {
    pub fn cardinality(&self) -> usize {
        self.selected_states.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InfeasibleReason {
    /// Every maximum matching leaves some forbidden state right-unmatched.
    UncoverableRightUnmatched,
    /// A non-top-linked SCC has only forbidden states.
    ForbiddenSourceComponent,
    /// The optimal matching left a slack (and its SCC) unused.
    SlackUnmatched,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Witness {
    Component(usize),
    State(usize),
}

/// No finite-cost input matrix makes the system structurally controllable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Infeasible {
    pub reason: InfeasibleReason,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("infeasible: {0:?}")]
    Infeasible(Infeasible),
    #[error("cost vector has {found} entries for {expected} states")]
    CostLength { expected: usize, found: usize },
}

impl SolveError {
    pub fn infeasible(&self) -> Option<&Infeasible> {
        match self {
            SolveError::Infeasible(inf) => Some(inf),
            SolveError::CostLength { .. } => None,
        }
    }
}

fn infeasible(reason: InfeasibleReason, witness: Option<Witness>) -> SolveError {
    SolveError::Infeasible(Infeasible { reason, witness })
}

/// Shared preparation for both solvers.
struct Setup {
    n: usize,
    scc: SccDecomposition,
    counts: DedicatedCount,
    state_weight: Cost,
}

fn setup(g: &StateDigraph, c: &CostVector) -> Result<Setup, SolveError> {
    if c.len() != g.n() {
        return Err(SolveError::CostLength {
            expected: g.n(),
            found: c.len(),
        });
    }
    let scc = scc_decompose(g);
    for &comp in scc.non_top_linked() {
        if scc.component(comp).iter().all(|&x| !c.get(x).is_finite()) {
            return Err(infeasible(
                InfeasibleReason::ForbiddenSourceComponent,
                Some(Witness::Component(comp)),
            ));
        }
    }
    let counts = dedicated_count(g, &scc);
    assert!(counts.p >= counts.beta, "p < beta: {counts:?}");
    // No finite cost at all: c_max = 0, so state edges weigh 1.
    let c_max = c.max_finite().unwrap_or(0.0);
    Ok(Setup {
        n: g.n(),
        scc,
        counts,
        state_weight: Cost::Finite(c_max + 1.0),
    })
}

fn state_slack_graph(g: &StateDigraph, s: &Setup) -> WeightedBipartiteGraph {
    let mut wg = WeightedBipartiteGraph::new(s.n + s.counts.p, s.n);
    for (i, j) in g.edges() {
        wg.add_edge(i, j, s.state_weight).expect("in range");
    }
    wg
}

fn matched_slacks(m: &Matching, n: usize) -> Vec<(usize, usize)> {
    m.pairs()
        .iter()
        .filter(|&&(l, _)| l >= n)
        .map(|&(l, r)| (l - n, r))
        .collect()
}

fn forbidden_witness(slacks: &[(usize, usize)], c: &CostVector) -> SolveError {
    let state = slacks
        .iter()
        .map(|&(_, x)| x)
        .find(|&x| !c.get(x).is_finite());
    infeasible(
        InfeasibleReason::UncoverableRightUnmatched,
        state.map(Witness::State),
    )
}

fn finish(
    g: &StateDigraph,
    c: &CostVector,
    problem: Problem,
    setup: Setup,
    selected: Vec<usize>,
    matching: Matching,
    slack_assignments: Vec<SlackAssignment>,
) -> PlacementSolution {
    let input_matrix =
        StructuralInputMatrix::dedicated(g.n(), &selected).expect("selected states in range");
    let total_cost = c.total(selected.iter().copied());
    assert!(
        !total_cost.is_finite()
            || is_structurally_controllable(g, &input_matrix).expect("dimensions match"),
        "placement {selected:?} is not structurally controllable"
    );
    let non_top_linked = setup
        .scc
        .non_top_linked()
        .iter()
        .map(|&k| setup.scc.component(k).to_vec())
        .collect();
    PlacementSolution {
        problem,
        selected_states: selected,
        input_matrix,
        total_cost,
        counts: setup.counts,
        non_top_linked,
        matching,
        slack_assignments,
    }
}

/// Cheapest placement among those that actuate the minimum number `p` of states.
///
/// Slack `k < beta` reaches only the states of the `k`-th non-top-linked SCC;
/// the remaining `p - beta` slacks reach every state. State edges weigh
/// `c_max + 1` and slack edges into `x` weigh `c[x]`.
pub fn solve_p1(g: &StateDigraph, c: &CostVector) -> Result<PlacementSolution, SolveError> {
    let s = setup(g, c)?;
    let (n, p, beta) = (s.n, s.counts.p, s.counts.beta);
    let mut wg = state_slack_graph(g, &s);
    for (k, &comp) in s.scc.non_top_linked().iter().enumerate() {
        for &x in s.scc.component(comp) {
            wg.add_edge(n + k, x, c.get(x)).expect("in range");
        }
    }
    for k in beta..p {
        for x in 0..n {
            wg.add_edge(n + k, x, c.get(x)).expect("in range");
        }
    }

    let (matching, total) = min_weight_maximum_matching(&wg);
    let slacks = matched_slacks(&matching, n);
    if !total.is_finite() {
        return Err(forbidden_witness(&slacks, c));
    }
    if slacks.len() < p {
        let unused = (0..p).find(|k| !slacks.iter().any(|&(s, _)| s == *k));
        let witness = unused
            .filter(|&k| k < beta)
            .map(|k| Witness::Component(s.scc.non_top_linked()[k]));
        return Err(infeasible(InfeasibleReason::SlackUnmatched, witness));
    }

    let assignments: Vec<_> = slacks
        .iter()
        .map(|&(slack, state)| SlackAssignment {
            slack,
            state,
            actuated: vec![state],
        })
        .collect();
    let mut selected: Vec<_> = slacks.iter().map(|&(_, x)| x).collect();
    selected.sort_unstable();
    Ok(finish(
        g,
        c,
        Problem::P1,
        s,
        selected,
        matching,
        assignments,
    ))
}

/// Cheapest placement of any size.
///
/// Every slack reaches every state. Slack `k < beta` pays `c[x]` for a state
/// `x` of its own source SCC and `c[x] + c_min^k` otherwise, in which case the
/// cheapest state of that SCC is actuated as well.
pub fn solve_p2(g: &StateDigraph, c: &CostVector) -> Result<PlacementSolution, SolveError> {
    let s = setup(g, c)?;
    let (n, p, beta) = (s.n, s.counts.p, s.counts.beta);
    let cheapest: Vec<(usize, Cost)> = s
        .scc
        .non_top_linked()
        .iter()
        .map(|&comp| {
            s.scc
                .component(comp)
                .iter()
                .map(|&x| (x, c.get(x)))
                .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
                .expect("components are nonempty")
        })
        .collect();

    let mut wg = state_slack_graph(g, &s);
    for k in 0..p {
        // Slacks past the first beta have no source SCC and no surcharge.
        let source = cheapest
            .get(k)
            .map(|&(_, min)| (s.scc.non_top_linked()[k], min));
        for x in 0..n {
            let w = match source {
                Some((comp, min)) if s.scc.component_of(x) != comp => c.get(x) + min,
                _ => c.get(x),
            };
            wg.add_edge(n + k, x, w).expect("in range");
        }
    }

    let (matching, total) = min_weight_maximum_matching(&wg);
    let slacks = matched_slacks(&matching, n);
    if !total.is_finite() {
        return Err(forbidden_witness(&slacks, c));
    }

    let mut assignments = Vec::with_capacity(slacks.len());
    let mut selected = Vec::new();
    for &(slack, state) in &slacks {
        let mut actuated = vec![state];
        if slack < beta && s.scc.component_of(state) != s.scc.non_top_linked()[slack] {
            actuated.push(cheapest[slack].0);
        }
        selected.extend_from_slice(&actuated);
        assignments.push(SlackAssignment {
            slack,
            state,
            actuated,
        });
    }
    selected.sort_unstable();
    selected.dedup();

    // Only matched slacks contribute; a source SCC whose slack went unmatched
    // may be left uncovered.
    if let Some(&comp) = s
        .scc
        .non_top_linked()
        .iter()
        .find(|&&k| !selected.iter().any(|&x| s.scc.component_of(x) == k))
    {
        return Err(infeasible(
            InfeasibleReason::SlackUnmatched,
            Some(Witness::Component(comp)),
        ));
    }
    Ok(finish(
        g,
        c,
        Problem::P2,
        s,
        selected,
        matching,
        assignments,
    ))
}

/// Sensor placement for structural observability: [`solve_p1`] on the
/// transposed digraph.
pub fn solve_p1_dual(g: &StateDigraph, c: &CostVector) -> Result<PlacementSolution, SolveError> {
    solve_p1(&g.transpose(), c)
}

/// Sensor placement for structural observability: [`solve_p2`] on the
/// transposed digraph.
pub fn solve_p2_dual(g: &StateDigraph, c: &CostVector) -> Result<PlacementSolution, SolveError> {
    solve_p2(&g.transpose(), c)
}

/// Turns a dedicated placement into one with as few inputs as possible while
/// actuating the same states.
///
/// On `B(A, B)` with state edges weighing 1 and input edges 2, a minimum-weight
/// maximum matching uses input edges exactly on the right-unmatched states of
/// a maximum matching of `B(A)`. Each of those gets its own column; every
/// other selected state joins column 0. When no state is right-unmatched a
/// single column carries all selected states.
pub fn expand_non_dedicated(
    g: &StateDigraph,
    sol: &PlacementSolution,
) -> Result<StructuralInputMatrix, Error> {
    let n = g.n();
    if sol.input_matrix.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: sol.input_matrix.n(),
        });
    }
    let selected = &sol.selected_states;
    if !sol.total_cost.is_finite() || !is_feasible_dedicated_configuration(g, selected)? {
        return Err(Error::Inconsistent(format!(
            "states {selected:?} are not a feasible dedicated configuration"
        )));
    }

    let mut wg = WeightedBipartiteGraph::new(n + selected.len(), n);
    for (i, j) in g.edges() {
        wg.add_edge(i, j, Cost::Finite(1.0))?;
    }
    for (col, &x) in selected.iter().enumerate() {
        wg.add_edge(n + col, x, Cost::Finite(2.0))?;
    }
    let (matching, _) = min_weight_maximum_matching(&wg);
    let mut dedicated: Vec<usize> = matched_slacks(&matching, n)
        .into_iter()
        .map(|(_, x)| x)
        .collect();
    dedicated.sort_unstable();

    let mut columns: Vec<Vec<usize>> = dedicated.iter().map(|&x| vec![x]).collect();
    if columns.is_empty() {
        columns.push(Vec::new());
    }
    for &x in selected {
        if dedicated.binary_search(&x).is_err() {
            columns[0].push(x);
        }
    }
    let b = StructuralInputMatrix::new(n, columns)?;
    assert!(
        is_structurally_controllable(g, &b)?,
        "non-dedicated expansion lost controllability"
    );
    Ok(b)
}
