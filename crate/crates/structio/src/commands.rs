//! Subcommand implementations, independent of argument parsing.

use anyhow::{bail, Context, Result};
use serde::Serialize;
use structio_core::analysis::check_dedicated_configuration;
use structio_core::oracle::{brute_force_p1, brute_force_p2, MAX_ORACLE_STATES};
use structio_core::{
    expand_non_dedicated, scc_decompose, solve_p1, solve_p2, SolveError, StateDigraph,
    StructuralInputMatrix,
};

use crate::dot;
use crate::instance::{FileCost, Instance};
use crate::report::{AnalysisReport, Diagnostics, InfeasibleInfo, ProblemKind, Report, Status};

/// Exit code for an infeasible problem or configuration.
pub const EXIT_INFEASIBLE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
    Dot,
}

/// What a command prints and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: u8,
}

impl Outcome {
    fn new(output: String, feasible: bool) -> Self {
        Self {
            output,
            code: if feasible { 0 } else { EXIT_INFEASIBLE },
        }
    }
}

/// The digraph a placement works on: transposed for sensor placement.
fn working_graph(inst: &Instance, dual: bool) -> StateDigraph {
    if dual {
        inst.graph.transpose()
    } else {
        inst.graph.clone()
    }
}

pub fn analyze(inst: &Instance, format: Format) -> Result<Outcome> {
    let report = AnalysisReport::of(&inst.graph);
    let output = match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
        Format::Dot => dot::render(&inst.graph, &[], None, false),
    };
    Ok(Outcome::new(output, true))
}

pub fn solve(
    inst: &Instance,
    problem: ProblemKind,
    dual: bool,
    non_dedicated: bool,
    format: Format,
) -> Result<Outcome> {
    let g = working_graph(inst, dual);
    let result = match problem {
        ProblemKind::P1 => solve_p1(&g, &inst.costs),
        ProblemKind::P2 => solve_p2(&g, &inst.costs),
    };
    let (report, inputs) = match result {
        Ok(sol) => {
            let inputs = if non_dedicated {
                expand_non_dedicated(&g, &sol).context("non-dedicated expansion")?
            } else {
                sol.input_matrix.clone()
            };
            let mut report = Report::optimal(&sol, dual);
            if non_dedicated {
                report.non_dedicated = Some(inputs.columns().to_vec());
            }
            (report, Some(inputs))
        }
        Err(SolveError::Infeasible(inf)) => {
            (Report::infeasible(problem.into(), dual, &g, &inf), None)
        }
        Err(e) => return Err(e.into()),
    };
    let output = render(&report, &inst.graph, inputs.as_ref(), format);
    Ok(Outcome::new(output, report.status == Status::Optimal))
}

fn render(
    report: &Report,
    g: &StateDigraph,
    inputs: Option<&StructuralInputMatrix>,
    format: Format,
) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
        Format::Dot => dot::render(g, &report.selected_states, inputs, report.dual),
    }
}

#[derive(Debug, Serialize)]
struct Verification {
    states: Vec<usize>,
    dual: bool,
    feasible: bool,
    cost: FileCost,
    /// Non-top-linked SCCs with no selected state.
    uncovered_sccs: Vec<Vec<usize>>,
    /// States no maximum matching saturates.
    unsaturated: Vec<usize>,
}

pub fn verify(inst: &Instance, states: &[usize], dual: bool, format: Format) -> Result<Outcome> {
    let g = working_graph(inst, dual);
    let check = check_dedicated_configuration(&g, states)?;
    let scc = scc_decompose(&g);
    let v = Verification {
        states: states.to_vec(),
        dual,
        feasible: check.is_feasible(),
        cost: FileCost(inst.costs.total(states.iter().copied())),
        uncovered_sccs: check
            .uncovered_sccs
            .iter()
            .map(|&k| scc.component(k).to_vec())
            .collect(),
        unsaturated: check.unsaturated.clone(),
    };
    let output = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&v)?;
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!(
                "{}: cost {}\n",
                if v.feasible { "feasible" } else { "infeasible" },
                v.cost.0
            );
            for c in &v.uncovered_sccs {
                s.push_str(&format!("uncovered source scc: {c:?}\n"));
            }
            if !v.unsaturated.is_empty() {
                s.push_str(&format!("unsaturated states: {:?}\n", v.unsaturated));
            }
            s
        }
        Format::Dot => {
            let b = StructuralInputMatrix::dedicated(g.n(), states)?;
            dot::render(&inst.graph, states, Some(&b), dual)
        }
    };
    Ok(Outcome::new(output, v.feasible))
}

pub fn oracle(
    inst: &Instance,
    problem: ProblemKind,
    dual: bool,
    format: Format,
) -> Result<Outcome> {
    if inst.n() > MAX_ORACLE_STATES {
        bail!(
            "exhaustive search is limited to {MAX_ORACLE_STATES} states, instance has {}",
            inst.n()
        );
    }
    let g = working_graph(inst, dual);
    let result = match problem {
        ProblemKind::P1 => brute_force_p1(&g, &inst.costs)?,
        ProblemKind::P2 => brute_force_p2(&g, &inst.costs)?,
    };
    let feasible = result.is_feasible();
    let selected_states = result.witnesses.first().cloned().unwrap_or_default();
    let report = Report {
        problem,
        dual,
        status: if feasible {
            Status::Optimal
        } else {
            Status::Infeasible
        },
        cardinality: selected_states.len(),
        selected_states,
        total_cost: FileCost(result.best_cost),
        diagnostics: Diagnostics::of(&g),
        non_dedicated: None,
        infeasible: (!feasible).then(|| InfeasibleInfo {
            reason: "no_finite_cost_configuration".to_string(),
            component: None,
            state: None,
        }),
        witnesses: feasible.then_some(result.witnesses),
    };
    let output = match format {
        Format::Dot => {
            let b = StructuralInputMatrix::dedicated(g.n(), &report.selected_states)?;
            render(&report, &inst.graph, Some(&b), format)
        }
        _ => render(&report, &inst.graph, None, format),
    };
    Ok(Outcome::new(output, feasible))
}

/// Parses `"2, 3,5"` into ascending distinct indices.
pub fn parse_states(text: &str) -> Result<Vec<usize>> {
    let mut states = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        states.push(
            part.parse::<usize>()
                .with_context(|| format!("invalid state index `{part}`"))?,
        );
    }
    states.sort_unstable();
    states.dedup();
    Ok(states)
}

/// Parses an inclusive integer range `"lo:hi"`.
pub fn parse_cost_range(text: &str) -> Result<(u32, u32)> {
    let (lo, hi) = text
        .split_once(':')
        .with_context(|| format!("cost range `{text}` is not of the form lo:hi"))?;
    let lo = lo
        .trim()
        .parse()
        .with_context(|| format!("invalid lower bound `{lo}`"))?;
    let hi = hi
        .trim()
        .parse()
        .with_context(|| format!("invalid upper bound `{hi}`"))?;
    if lo > hi {
        bail!("empty cost range {lo}:{hi}");
    }
    Ok((lo, hi))
}
