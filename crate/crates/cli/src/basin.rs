use std::fs;
use std::process::ExitCode;

use anyhow::Context;
use clap::Args;
use dcboost::toy::{basin_config, basin_experiment, Attractor, Execution};
use dcboost::Variant;
use serde_json::json;

use crate::{classify, manifest, parse_variant, usage, OutputArgs, SolverArgs};

#[derive(Args)]
pub struct BasinArgs {
    /// Number of uniform starts in [0, 3]^2.
    #[arg(long, default_value_t = 10_000)]
    n: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, default_value = "ibdca", value_parser = parse_variant)]
    variant: Variant,
    /// Worker threads; 1 runs sequentially, 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[command(flatten)]
    solver: SolverArgs,
    #[command(flatten)]
    output: OutputArgs,
}

pub fn run(args: BasinArgs) -> anyhow::Result<ExitCode> {
    if args.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let cfg = args.solver.apply(basin_config(args.variant));
    cfg.validate().map_err(classify)?;

    let report = if args.threads == 1 {
        basin_experiment(args.n, args.seed, &cfg, Execution::Sequential)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(args.threads)
            .build()?;
        pool.install(|| basin_experiment(args.n, args.seed, &cfg, Execution::Parallel))
    }
    .map_err(classify)?;

    let dir = &args.output.out;
    manifest::ensure_dir(dir)?;
    let csv_path = dir.join("basin.csv");
    let mut csv = String::from("attractor,count,fraction\n");
    for a in Attractor::ALL {
        // Labels such as (2,2) contain a comma, so the field is quoted.
        csv.push_str(&format!(
            "\"{}\",{},{}\n",
            a.label(),
            report.count(a),
            report.fraction(a)
        ));
    }
    fs::write(&csv_path, csv).with_context(|| format!("writing {}", csv_path.display()))?;

    println!("{} starts, seed {}, {}", args.n, args.seed, args.variant);
    for a in Attractor::ALL {
        println!(
            "{:>6}: {:>8} ({:.4})",
            a.label(),
            report.count(a),
            report.fraction(a)
        );
    }
    println!("elapsed: {:.3} s", report.elapsed);

    let counts: serde_json::Map<String, serde_json::Value> = Attractor::ALL
        .iter()
        .map(|a| (a.label().to_string(), json!(report.count(*a))))
        .collect();
    manifest::write(
        dir,
        "basin",
        json!({
            "n": args.n,
            "seed": args.seed,
            "threads": args.threads,
            "solver": manifest::solver_json(&cfg),
        }),
        &[csv_path],
        json!({ "counts": counts, "elapsed_s": report.elapsed }),
    )?;
    Ok(ExitCode::SUCCESS)
}
