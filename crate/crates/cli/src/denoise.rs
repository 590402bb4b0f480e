use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::Args;
use dcboost::cauchy::{default_parameters, restoration_config, synthesize_observation};
use dcboost::imaging::{make_squares_image, psnr, re_err, write_pgm};
use dcboost::solver::trace::{fmt_f64, format_row, monotonicity_violations, TRACE_HEADER};
use dcboost::{solve_observed, CauchyModel, ImageGrid, PdConfig, Variant};
use serde_json::json;

use crate::metrics::{format_psnr, read};
use crate::{classify, manifest, parse_variant, usage, OutputArgs, SolverArgs};

#[derive(Args)]
pub struct DenoiseArgs {
    /// Observed PGM (or the clean image with --add-noise).
    #[arg(
        long,
        conflicts_with = "synthetic",
        required_unless_present = "synthetic"
    )]
    input: Option<PathBuf>,
    /// Use the built-in squares test image as the clean image.
    #[arg(long)]
    synthetic: bool,
    /// Side of the synthetic image.
    #[arg(long, default_value_t = 64, requires = "synthetic")]
    size: usize,
    /// Treat --input as clean and corrupt it with synthesized noise.
    #[arg(long, requires = "input")]
    add_noise: bool,
    /// Clean reference for PSNR when --input is already noisy.
    #[arg(long, requires = "input", conflicts_with = "add_noise")]
    clean: Option<PathBuf>,
    /// Noise scale assumed by the model (and synthesized, unless --noise-gamma).
    #[arg(long, default_value_t = 3.0)]
    gamma: f64,
    /// Scale of the synthesized noise; defaults to --gamma.
    #[arg(long)]
    noise_gamma: Option<f64>,
    /// Fidelity weight; defaults to 15 (20 at gamma = 5).
    #[arg(long)]
    mu: Option<f64>,
    /// Splitting constant; must exceed mu / gamma^2.
    #[arg(long)]
    c: Option<f64>,
    #[arg(long, default_value = "ibdca", value_parser = parse_variant)]
    variant: Variant,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Iteration cap of the inner TV solver.
    #[arg(long)]
    inner_max_iter: Option<usize>,
    /// Relative-change tolerance of the inner TV solver.
    #[arg(long)]
    inner_tol: Option<f64>,
    #[command(flatten)]
    solver: SolverArgs,
    #[command(flatten)]
    output: OutputArgs,
}

struct Images {
    clean: Option<ImageGrid>,
    observed: ImageGrid,
    synthesized: bool,
}

fn load(args: &DenoiseArgs, noise_gamma: f64) -> anyhow::Result<Images> {
    let synth = |clean: ImageGrid| -> anyhow::Result<Images> {
        let observed = synthesize_observation(&clean, noise_gamma, args.seed).map_err(classify)?;
        Ok(Images {
            clean: Some(clean),
            observed,
            synthesized: true,
        })
    };
    if args.synthetic {
        if args.size < 2 {
            return Err(usage("--size must be at least 2"));
        }
        return synth(make_squares_image(args.size, args.size));
    }
    let input = read(args.input.as_ref().expect("clap enforces --input"))?;
    if args.add_noise {
        return synth(input);
    }
    let clean = args.clean.as_ref().map(read).transpose()?;
    if let Some(c) = &clean {
        if c.shape() != input.shape() {
            return Err(usage(format!(
                "--clean is {:?} but --input is {:?}",
                c.shape(),
                input.shape()
            )));
        }
    }
    Ok(Images {
        clean,
        observed: input,
        synthesized: false,
    })
}

pub fn run(args: DenoiseArgs) -> anyhow::Result<ExitCode> {
    let (default_mu, default_c) = default_parameters(args.gamma);
    let mu = args.mu.unwrap_or(default_mu);
    let c = match (args.c, args.mu) {
        (Some(c), _) => c,
        (None, None) => default_c,
        // A custom mu moves the threshold, so keep the same 10% margin above it.
        (None, Some(mu)) => 1.1 * mu / (args.gamma * args.gamma),
    };
    let noise_gamma = args.noise_gamma.unwrap_or(args.gamma);
    let mut inner = PdConfig::default();
    if let Some(v) = args.inner_max_iter {
        inner.max_inner_iter = v;
    }
    if let Some(v) = args.inner_tol {
        inner.tol_inner = v;
    }

    let images = load(&args, noise_gamma)?;
    let model =
        CauchyModel::new(images.observed.clone(), mu, args.gamma, c, inner).map_err(classify)?;
    let cfg = args
        .solver
        .apply(restoration_config(args.variant, model.strong_convexity()));
    cfg.validate().map_err(classify)?;

    let dir = &args.output.out;
    manifest::ensure_dir(dir)?;
    let mut outputs = Vec::new();
    if images.synthesized {
        for (name, img) in [
            ("clean.pgm", images.clean.as_ref().unwrap()),
            ("noisy.pgm", &images.observed),
        ] {
            let path = dir.join(name);
            write_pgm(&path, img).with_context(|| format!("writing {}", path.display()))?;
            outputs.push(path);
        }
    }

    let trace_path = dir.join("trace.csv");
    let file =
        File::create(&trace_path).with_context(|| format!("creating {}", trace_path.display()))?;
    let mut out = BufWriter::new(file);
    writeln!(out, "{TRACE_HEADER},energy,psnr,inner_iters,inner_resid")?;

    let (rows, cols) = images.observed.shape();
    let no_timing = args.output.no_timing;
    let mut io_err = None;
    let result = solve_observed(&model, images.observed.as_slice(), &cfg, |rec, x| {
        let mut rec = rec.clone();
        if no_timing {
            rec.wall_time = 0.0;
        }
        let p = images.clean.as_ref().map_or(String::new(), |clean| {
            let u = ImageGrid::new(rows, cols, x.to_vec()).expect("iterate has the image shape");
            fmt_f64(psnr(&u, clean))
        });
        let line = format!(
            "{},{},{},{},{}",
            format_row(&rec),
            fmt_f64(rec.phi),
            p,
            rec.inner_iters,
            fmt_f64(rec.inner_resid)
        );
        // Flushed per row so an interrupted run leaves a readable prefix.
        if let Err(e) = writeln!(out, "{line}").and_then(|_| out.flush()) {
            io_err.get_or_insert(e);
        }
    });
    drop(out);
    let result = result.map_err(classify)?;
    if let Some(e) = io_err {
        return Err(anyhow::Error::from(e).context(format!("writing {}", trace_path.display())));
    }
    outputs.push(trace_path);

    let restored = ImageGrid::new(rows, cols, result.final_point.clone()).map_err(classify)?;
    let restored_path = dir.join("restored.pgm");
    write_pgm(&restored_path, &restored)
        .with_context(|| format!("writing {}", restored_path.display()))?;
    outputs.push(restored_path);

    let violations = monotonicity_violations(&result.phi_sequence(), 1e-8);
    let mut summary = vec![
        format!("variant: {}", args.variant),
        format!("iterations: {}", result.iterations()),
        format!("status: {}", result.status.name()),
        format!("energy: {}", fmt_f64(result.final_phi)),
        format!("monotonicity_violations: {}", violations.len()),
    ];
    let mut scores = json!({});
    if let Some(clean) = &images.clean {
        let (pn, pr) = (psnr(&images.observed, clean), psnr(&restored, clean));
        let (rn, rr) = (re_err(&images.observed, clean), re_err(&restored, clean));
        summary.push(format!("psnr_noisy: {}", format_psnr(pn)));
        summary.push(format!("psnr_restored: {}", format_psnr(pr)));
        summary.push(format!("re_err_noisy: {rn:.10e}"));
        summary.push(format!("re_err_restored: {rr:.10e}"));
        scores = json!({
            "psnr_noisy": format_psnr(pn),
            "psnr_restored": format_psnr(pr),
            "re_err_noisy": rn,
            "re_err_restored": rr,
        });
    }
    let summary = summary.join("\n") + "\n";
    print!("{summary}");
    let metrics_path = dir.join("metrics.txt");
    fs::write(&metrics_path, &summary)
        .with_context(|| format!("writing {}", metrics_path.display()))?;
    outputs.push(metrics_path);

    let inner_failed = result.inner_nonconverged();
    manifest::write(
        dir,
        "denoise",
        json!({
            "input": args.input.as_ref().map(|p| p.display().to_string()),
            "clean": args.clean.as_ref().map(|p| p.display().to_string()),
            "synthetic": args.synthetic,
            "size": args.synthetic.then_some(args.size),
            "add_noise": args.add_noise,
            "gamma": args.gamma,
            "noise_gamma": images.synthesized.then_some(noise_gamma),
            "mu": mu,
            "c": c,
            "seed": args.seed,
            "inner": {
                "max_inner_iter": inner.max_inner_iter,
                "tol_inner": inner.tol_inner,
                "tau0": inner.tau0,
                "sigma0": inner.sigma0,
                "accel_fraction": inner.accel_fraction,
            },
            "solver": manifest::solver_json(&cfg),
            "no_timing": no_timing,
        }),
        &outputs,
        json!({
            "iterations": result.iterations(),
            "status": result.status.name(),
            "final_energy": result.final_phi,
            "monotonicity_violations": violations,
            "inner_nonconverged_at_end": inner_failed,
            "scores": scores,
        }),
    )?;

    if inner_failed {
        eprintln!("error: the inner TV solver did not reach its tolerance on the final iteration");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}
