use std::path::PathBuf;
use std::process::ExitCode;

use clap::Args;
use dcboost::imaging::{psnr, re_err, read_pgm};
use dcboost::ImageGrid;

use crate::{classify, usage};

#[derive(Args)]
pub struct MetricsArgs {
    /// Image to score.
    a: PathBuf,
    /// Reference image.
    b: PathBuf,
}

pub fn format_psnr(p: f64) -> String {
    if p.is_infinite() {
        "inf".into()
    } else {
        format!("{p:.6}")
    }
}

pub fn read(path: &PathBuf) -> anyhow::Result<ImageGrid> {
    read_pgm(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

pub fn run(args: MetricsArgs) -> anyhow::Result<ExitCode> {
    let (a, b) = (read(&args.a)?, read(&args.b)?);
    if a.shape() != b.shape() {
        return Err(classify(dcboost::Error::DimensionMismatch {
            expected: b.len(),
            actual: a.len(),
        }));
    }
    if b.norm_sq() == 0.0 {
        return Err(usage(
            "reference image is all zero; relative error is undefined",
        ));
    }
    println!("psnr: {}", format_psnr(psnr(&a, &b)));
    println!("re_err: {:.10e}", re_err(&a, &b));
    Ok(ExitCode::SUCCESS)
}
