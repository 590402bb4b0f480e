use std::fs::File;
use std::io::{BufWriter, Write};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, ValueEnum};
use dcboost::solver::trace::{fmt_f64, format_row, TRACE_HEADER};
use dcboost::toy::{QuadL1Problem, ScadSeparableProblem};
use dcboost::{solve_observed, DcModel, SolverConfig, Status, Variant};
use serde_json::json;

use crate::{classify, manifest, parse_variant, usage, OutputArgs, SolverArgs};

#[derive(Clone, Copy, ValueEnum)]
pub enum Example {
    Quadl1,
    Scad,
}

impl Example {
    fn name(self) -> &'static str {
        match self {
            Example::Quadl1 => "quadl1",
            Example::Scad => "scad",
        }
    }
}

#[derive(Args)]
pub struct ToyArgs {
    #[arg(long, value_enum)]
    example: Example,
    #[arg(long, default_value = "ibdca", value_parser = parse_variant)]
    variant: Variant,
    /// Start point as `u,v`.
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    x0: [f64; 2],
    #[command(flatten)]
    solver: SolverArgs,
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_pair(s: &str) -> Result<[f64; 2], String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [a, b] = parts.as_slice() else {
        return Err(format!("expected `u,v`, got `{s}`"));
    };
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
    Ok([num(a)?, num(b)?])
}

/// `alpha = 0.2`, `beta = 0.5`, `lambda_bar = 2` on QuadL1; `beta = 0.7` and
/// `lambda_bar = 3` (2 for the y-based searches) on SCAD.
fn default_config(example: Example, variant: Variant) -> SolverConfig {
    let base = SolverConfig {
        variant,
        alpha: 0.2,
        ..SolverConfig::default()
    };
    match example {
        Example::Quadl1 => SolverConfig {
            beta: 0.5,
            lambda_bar: 2.0,
            ..base
        },
        Example::Scad => dcboost::toy::basin_config(variant),
    }
}

pub fn run(args: ToyArgs) -> anyhow::Result<ExitCode> {
    let cfg = args
        .solver
        .apply(default_config(args.example, args.variant));
    cfg.validate().map_err(classify)?;
    match args.example {
        Example::Quadl1 => run_model(&QuadL1Problem, &args, &cfg),
        Example::Scad => run_model(&ScadSeparableProblem, &args, &cfg),
    }
}

fn run_model<M: DcModel>(
    model: &M,
    args: &ToyArgs,
    cfg: &SolverConfig,
) -> anyhow::Result<ExitCode> {
    if args.x0.iter().any(|v| !v.is_finite()) {
        return Err(usage("x0 must be finite"));
    }
    let dir = &args.output.out;
    manifest::ensure_dir(dir)?;
    let trace_path = dir.join("trace.csv");
    let file =
        File::create(&trace_path).with_context(|| format!("creating {}", trace_path.display()))?;
    let mut out = BufWriter::new(file);
    writeln!(out, "{TRACE_HEADER},u,v")?;

    let no_timing = args.output.no_timing;
    let mut io_err = None;
    let result = solve_observed(model, &args.x0, cfg, |rec, x| {
        let mut rec = rec.clone();
        if no_timing {
            rec.wall_time = 0.0;
        }
        let line = format!("{},{},{}", format_row(&rec), fmt_f64(x[0]), fmt_f64(x[1]));
        if let Err(e) = writeln!(out, "{line}").and_then(|_| out.flush()) {
            io_err.get_or_insert(e);
        }
    })
    .map_err(classify)?;
    if let Some(e) = io_err {
        return Err(anyhow::Error::from(e).context(format!("writing {}", trace_path.display())));
    }
    drop(out);

    let [u, v] = [result.final_point[0], result.final_point[1]];
    println!("final point: ({u}, {v})");
    println!("phi: {}", result.final_phi);
    println!("iterations: {}", result.iterations());
    println!("status: {}", result.status.name());

    manifest::write(
        dir,
        "toy",
        json!({
            "example": args.example.name(),
            "x0": args.x0,
            "solver": manifest::solver_json(cfg),
            "no_timing": no_timing,
        }),
        &[trace_path],
        json!({
            "final_point": [u, v],
            "final_phi": result.final_phi,
            "iterations": result.iterations(),
            "status": result.status.name(),
        }),
    )?;

    Ok(if result.status == Status::MaxIterations {
        eprintln!("warning: iteration limit reached before convergence");
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
