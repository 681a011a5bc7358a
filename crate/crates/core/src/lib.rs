//! Minimum-cost actuator and sensor placement for linear structural systems.
//!
//! Given the zero/nonzero pattern of a dynamics matrix (as a [`StateDigraph`])
//! and a per-state actuation cost ([`CostVector`]), this crate computes dedicated
//! input placements that make the pair structurally controllable:
//!
//! * [`solve_p1`] minimizes cost among placements with the fewest actuated states;
//! * [`solve_p2`] minimizes cost with no cardinality restriction.
//!
//! Both reduce to a minimum-weight maximum matching on a state-slack bipartite
//! graph. Sensor placement for structural observability is the same problem on
//! the transposed digraph ([`solve_p1_dual`], [`solve_p2_dual`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod cost;
pub mod digraph;
mod error;
pub mod matching;
pub mod oracle;
pub mod placement;

pub use analysis::{
    is_feasible_dedicated_configuration, is_structurally_controllable, minimum_dedicated_inputs,
    state_bipartite, system_bipartite, DedicatedCount, StructuralInputMatrix,
};
pub use cost::{Cost, CostVector};
pub use digraph::{reachable_from, scc_decompose, SccDecomposition, StateDigraph};
pub use error::Error;
pub use matching::{
    maximum_matching, min_weight_maximum_matching, right_unmatched, BipartiteGraph, Matching,
    WeightedBipartiteGraph,
};
pub use placement::{
    expand_non_dedicated, solve_p1, solve_p1_dual, solve_p2, solve_p2_dual, Infeasible,
    InfeasibleReason, PlacementSolution, Problem, SlackAssignment, SolveError, Witness,
};
