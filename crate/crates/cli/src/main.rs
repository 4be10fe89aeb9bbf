mod args;
mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::{Cli, Command};
use report::{Outcome, Timings};

const EXIT_ASSERTION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Resource(String),
}

impl From<diagmin::Error> for CliError {
    fn from(e: diagmin::Error) -> Self {
        if e.is_resource() {
            CliError::Resource(format!("{e} (use --force)"))
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Resource(_) => EXIT_RESOURCE,
        }
    }
}

/// Caps the global pool at `DIAGMIN_THREADS` when set.
fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("DIAGMIN_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        CliError::Input(format!(
            "DIAGMIN_THREADS must be a positive integer, got '{raw}'"
        ))
    })?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Input(e.to_string()))?;
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Analyze { graph, order } => {
            commands::analyze(commands::load_graph(&graph.graph)?, order.into())
        }
        Command::Rank { graph } => commands::rank(commands::load_graph(&graph.graph)?),
        Command::MinPrimes { graph, edge } => {
            commands::min_primes(commands::load_graph(&graph.graph)?, edge)
        }
        Command::Survey { edges, force } => commands::survey_cmd(edges, force),
        Command::Verify {
            suite,
            max_edges,
            force,
        } => commands::verify(&suite, max_edges, force),
        Command::FindRank { rank } => commands::find_rank(rank),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(e.code());
    }
    let start = Instant::now();
    match run(cli.command) {
        Ok(outcome) => {
            if cli.json {
                let timings = cli.timings.then(|| Timings {
                    total_ms: start.elapsed().as_secs_f64() * 1e3,
                });
                println!("{}", outcome.to_json(timings));
            } else {
                print!("{}", outcome.text);
                if cli.timings {
                    println!("time {:.3} ms", start.elapsed().as_secs_f64() * 1e3);
                }
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_ASSERTION)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
