//! Result files and their text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use structio_core::analysis::dedicated_count;
use structio_core::{
    scc_decompose, Cost, Infeasible, InfeasibleReason, PlacementSolution, Problem, StateDigraph,
    Witness,
};

use crate::instance::FileCost;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    P1,
    P2,
}

impl From<ProblemKind> for Problem {
    fn from(k: ProblemKind) -> Self {
        match k {
            ProblemKind::P1 => Problem::P1,
            ProblemKind::P2 => Problem::P2,
        }
    }
}

impl From<Problem> for ProblemKind {
    fn from(p: Problem) -> Self {
        match p {
            Problem::P1 => ProblemKind::P1,
            Problem::P2 => ProblemKind::P2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Optimal,
    Infeasible,
}

/// Structural quantities of the digraph a placement was computed on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    /// Minimum number of dedicated inputs.
    pub p: usize,
    /// Right-unmatched vertices of a maximum matching of the state graph.
    pub m: usize,
    /// Number of non-top-linked SCCs.
    pub beta: usize,
    pub alpha: usize,
    pub non_top_linked_sccs: Vec<Vec<usize>>,
}

impl Diagnostics {
    pub fn of(g: &StateDigraph) -> Self {
        let scc = scc_decompose(g);
        let counts = dedicated_count(g, &scc);
        Self {
            p: counts.p,
            m: counts.m,
            beta: counts.beta,
            alpha: counts.alpha,
            non_top_linked_sccs: scc
                .non_top_linked()
                .iter()
                .map(|&k| scc.component(k).to_vec())
                .collect(),
        }
    }
}

/// Why a placement problem has no finite-cost solution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfeasibleInfo {
    pub reason: String,
    /// States of the offending non-top-linked SCC, when one is identified.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component: Option<Vec<usize>>,
    /// The offending state, when one is identified.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub state: Option<usize>,
}

fn reason_name(r: InfeasibleReason) -> &'static str {
    match r {
        InfeasibleReason::UncoverableRightUnmatched => "uncoverable_right_unmatched",
        InfeasibleReason::ForbiddenSourceComponent => "forbidden_source_component",
        InfeasibleReason::SlackUnmatched => "slack_unmatched",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub problem: ProblemKind,
    /// Sensor placement on the transposed digraph.
    pub dual: bool,
    pub status: Status,
    pub selected_states: Vec<usize>,
    pub total_cost: FileCost,
    pub cardinality: usize,
    pub diagnostics: Diagnostics,
    /// Input columns of the non-dedicated expansion.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub non_dedicated: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub infeasible: Option<InfeasibleInfo>,
    /// Every optimal state set (exhaustive solver only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Vec<usize>>>,
}

impl Report {
    pub fn optimal(sol: &PlacementSolution, dual: bool) -> Self {
        Self {
            problem: sol.problem.into(),
            dual,
            status: Status::Optimal,
            selected_states: sol.selected_states.clone(),
            total_cost: FileCost(sol.total_cost),
            cardinality: sol.cardinality(),
            diagnostics: Diagnostics {
                p: sol.counts.p,
                m: sol.counts.m,
                beta: sol.counts.beta,
                alpha: sol.counts.alpha,
                non_top_linked_sccs: sol.non_top_linked.clone(),
            },
            non_dedicated: None,
            infeasible: None,
            witnesses: None,
        }
    }

    /// `g` is the digraph the solver ran on (already transposed for `dual`).
    pub fn infeasible(problem: Problem, dual: bool, g: &StateDigraph, inf: &Infeasible) -> Self {
        let scc = scc_decompose(g);
        let info = InfeasibleInfo {
            reason: reason_name(inf.reason).to_string(),
            component: match inf.witness {
                Some(Witness::Component(k)) => Some(scc.component(k).to_vec()),
                _ => None,
            },
            state: match inf.witness {
                Some(Witness::State(s)) => Some(s),
                _ => None,
            },
        };
        Self {
            problem: problem.into(),
            dual,
            status: Status::Infeasible,
            selected_states: Vec::new(),
            total_cost: FileCost(Cost::Infinite),
            cardinality: 0,
            diagnostics: Diagnostics::of(g),
            non_dedicated: None,
            infeasible: Some(info),
            witnesses: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let what = if self.dual { "sensor" } else { "input" };
        let problem = match self.problem {
            ProblemKind::P1 => "P1 (fewest states, then cost)",
            ProblemKind::P2 => "P2 (cost only)",
        };
        let _ = writeln!(out, "problem:   {problem}, {what} placement");
        match self.status {
            Status::Optimal => {
                let _ = writeln!(out, "status:    optimal");
                let _ = writeln!(out, "states:    {}", join(&self.selected_states));
                let _ = writeln!(out, "cost:      {}", self.total_cost.0);
                let _ = writeln!(out, "count:     {}", self.cardinality);
            }
            Status::Infeasible => {
                let _ = writeln!(out, "status:    infeasible");
                if let Some(info) = &self.infeasible {
                    let _ = write!(out, "reason:    {}", info.reason);
                    if let Some(c) = &info.component {
                        let _ = write!(out, " (component {{{}}})", join(c));
                    }
                    if let Some(s) = info.state {
                        let _ = write!(out, " (state {s})");
                    }
                    out.push('\n');
                }
            }
        }
        if let Some(cols) = &self.non_dedicated {
            let _ = writeln!(out, "columns:   {}", join_sets(cols));
        }
        if let Some(w) = &self.witnesses {
            let _ = writeln!(out, "optima:    {}", join_sets(w));
        }
        out.push_str(&self.diagnostics.to_text());
        out
    }
}

impl Diagnostics {
    pub fn to_text(&self) -> String {
        format!(
            "p = {}, m = {}, beta = {}, alpha = {}\nsource sccs: {}\n",
            self.p,
            self.m,
            self.beta,
            self.alpha,
            join_sets(&self.non_top_linked_sccs)
        )
    }
}

/// Output of the `analyze` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub edges: usize,
    pub sccs: Vec<Vec<usize>>,
    pub diagnostics: Diagnostics,
}

impl AnalysisReport {
    pub fn of(g: &StateDigraph) -> Self {
        let scc = scc_decompose(g);
        Self {
            n: g.n(),
            edges: g.edge_count(),
            sccs: (0..scc.len()).map(|k| scc.component(k).to_vec()).collect(),
            diagnostics: Diagnostics::of(g),
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("analysis serializes");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        format!(
            "states: {}, edges: {}\nsccs: {}\n{}",
            self.n,
            self.edges,
            join_sets(&self.sccs),
            self.diagnostics.to_text()
        )
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn join_sets(sets: &[Vec<usize>]) -> String {
    if sets.is_empty() {
        return "none".to_string();
    }
    sets.iter()
        .map(|s| format!("{{{}}}", join(s)))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use structio_core::{solve_p1, solve_p2, CostVector};

    #[test]
    fn optimal_report_round_trips() {
        let g = StateDigraph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        let c = CostVector::uniform(3, Cost::from(2));
        let r = Report::optimal(&solve_p1(&g, &c).unwrap(), false);
        let json = r.to_json();
        assert!(json.contains("\"status\": \"optimal\""));
        assert!(json.contains("\"problem\": \"p1\""));
        assert!(!json.contains("witnesses"));
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert!(r.to_text().contains("states:    0, 1"));
    }

    #[test]
    fn infeasible_report_names_the_component() {
        let g = StateDigraph::from_edges(3, [(0, 1), (1, 0), (0, 2)]).unwrap();
        let c = CostVector::new(vec![Cost::Infinite, Cost::Infinite, Cost::from(1)]);
        let err = solve_p2(&g, &c).unwrap_err();
        let r = Report::infeasible(Problem::P2, false, &g, err.infeasible().unwrap());
        assert_eq!(r.status, Status::Infeasible);
        let info = r.infeasible.as_ref().unwrap();
        assert_eq!(info.reason, "forbidden_source_component");
        assert_eq!(info.component, Some(vec![0, 1]));
        assert!(r.to_json().contains("\"total_cost\": \"inf\""));
    }
}
