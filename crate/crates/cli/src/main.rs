//! `dcboost`: run the DC solvers on the toy problems, the basin census and
//! Cauchy-noise restoration.
//!
//! Exit codes: 0 success, 1 numerical failure, 2 usage error.

mod basin;
mod denoise;
mod manifest;
mod metrics;
mod toy;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dcboost::{SolverConfig, Variant};

#[derive(Parser)]
#[command(
    name = "dcboost",
    version,
    about = "Difference-of-convex solvers and experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one of the 2-D example problems and write its trace.
    Toy(toy::ToyArgs),
    /// Count the limit points reached from random starts on the SCAD problem.
    Basin(basin::BasinArgs),
    /// Restore an image corrupted by Cauchy noise.
    Denoise(denoise::DenoiseArgs),
    /// PSNR and relative error of one PGM against another.
    Metrics(metrics::MetricsArgs),
}

/// Output directory shared by the commands that write files.
#[derive(Args, Clone)]
struct OutputArgs {
    /// Directory for outputs; created if missing.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Write 0 in the wall-time column so traces are byte-reproducible.
    #[arg(long)]
    no_timing: bool,
}

/// Overrides of the outer solver settings. Unset fields keep the command's
/// defaults.
#[derive(Args, Clone, Default)]
struct SolverArgs {
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    lambda_bar: Option<f64>,
    #[arg(long)]
    max_iter: Option<usize>,
    /// Relative energy change below which the run stops (0 disables).
    #[arg(long)]
    tol: Option<f64>,
    /// Direction norm treated as a critical point.
    #[arg(long)]
    tol_direction: Option<f64>,
}

impl SolverArgs {
    fn apply(&self, mut cfg: SolverConfig) -> SolverConfig {
        if let Some(v) = self.alpha {
            cfg.alpha = v;
        }
        if let Some(v) = self.beta {
            cfg.beta = v;
        }
        if let Some(v) = self.lambda_bar {
            cfg.lambda_bar = v;
        }
        if let Some(v) = self.max_iter {
            cfg.max_outer_iter = v;
        }
        if let Some(v) = self.tol {
            cfg.tol_rel_energy = v;
        }
        if let Some(v) = self.tol_direction {
            cfg.tol_direction = v;
        }
        cfg
    }
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse::<Variant>().map_err(|e| e.to_string())
}

/// A failure caused by the arguments rather than the computation.
#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// Library errors about inputs are usage errors; the rest are numerical.
fn classify(e: dcboost::Error) -> anyhow::Error {
    use dcboost::Error as E;
    match e {
        E::InvalidConfig(_) | E::InvalidModel(_) | E::DimensionMismatch { .. } | E::Format(_) => {
            usage(e.to_string())
        }
        other => other.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Toy(a) => toy::run(a),
        Command::Basin(a) => basin::run(a),
        Command::Denoise(a) => denoise::run(a),
        Command::Metrics(a) => metrics::run(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
