use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use structio::commands::{self, Format, Outcome};
use structio::gen::{generate, GenParams};
use structio::{Instance, ProblemKind};

/// Minimum-cost input and output placement for structural systems.
#[derive(Parser)]
#[command(name = "structio", version)]
struct Cli {
    /// Report progress on stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print SCCs and the minimum number of dedicated inputs.
    Analyze {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compute an optimal placement.
    Solve {
        #[arg(value_enum)]
        problem: ProblemKind,
        input: PathBuf,
        /// Place sensors for structural observability instead of inputs.
        #[arg(long)]
        dual: bool,
        /// Merge the dedicated inputs into as few columns as possible.
        #[arg(long)]
        non_dedicated: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check whether dedicated inputs on the given states suffice.
    Verify {
        input: PathBuf,
        /// Comma-separated state indices, e.g. "1,6".
        #[arg(long)]
        states: String,
        #[arg(long)]
        dual: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Write a random instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Inclusive range of integer costs.
        #[arg(long, default_value = "0:20")]
        cost_range: String,
        /// Probability that a state gets an infinite cost.
        #[arg(long, default_value_t = 0.0)]
        inf_prob: f64,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve by exhaustive search (at most 20 states).
    Oracle {
        #[arg(value_enum)]
        problem: ProblemKind,
        input: PathBuf,
        #[arg(long)]
        dual: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn load(path: &Path, verbose: bool) -> Result<Instance> {
    let inst = Instance::load(path).with_context(|| format!("loading {}", path.display()))?;
    if verbose {
        eprintln!(
            "loaded {}: {} states, {} edges",
            path.display(),
            inst.n(),
            inst.graph.edge_count()
        );
    }
    Ok(inst)
}

fn run(cli: Cli) -> Result<Outcome> {
    let verbose = cli.verbose;
    match cli.command {
        Command::Analyze { input, format } => commands::analyze(&load(&input, verbose)?, format),
        Command::Solve {
            problem,
            input,
            dual,
            non_dedicated,
            format,
        } => commands::solve(
            &load(&input, verbose)?,
            problem,
            dual,
            non_dedicated,
            format,
        ),
        Command::Verify {
            input,
            states,
            dual,
            format,
        } => {
            let states = commands::parse_states(&states)?;
            commands::verify(&load(&input, verbose)?, &states, dual, format)
        }
        Command::Gen {
            n,
            density,
            seed,
            cost_range,
            inf_prob,
            output,
        } => {
            let (lo, hi) = commands::parse_cost_range(&cost_range)?;
            let params = GenParams::new(n, density, seed)
                .costs(lo, hi)
                .inf_prob(inf_prob);
            let json = generate(&params)?.to_json();
            match output {
                Some(path) => {
                    std::fs::write(&path, &json)
                        .with_context(|| format!("writing {}", path.display()))?;
                    if verbose {
                        eprintln!("wrote {}", path.display());
                    }
                    Ok(Outcome {
                        output: String::new(),
                        code: 0,
                    })
                }
                None => Ok(Outcome {
                    output: json,
                    code: 0,
                }),
            }
        }
        Command::Oracle {
            problem,
            input,
            dual,
            format,
        } => commands::oracle(&load(&input, verbose)?, problem, dual, format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.output.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
