use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use dcboost::SolverConfig;
use serde_json::{json, Value};

pub const FILE_NAME: &str = "manifest.json";

pub fn solver_json(cfg: &SolverConfig) -> Value {
    json!({
        "variant": cfg.variant.name(),
        "alpha": cfg.alpha,
        "beta": cfg.beta,
        "lambda_bar": cfg.lambda_bar,
        "max_outer_iter": cfg.max_outer_iter,
        "tol_rel_energy": cfg.tol_rel_energy,
        "tol_direction": cfg.tol_direction,
        "max_backtracks": cfg.max_backtracks,
    })
}

/// Writes `{command, version, parameters, outputs, result}` beside the outputs.
pub fn write(
    dir: &Path,
    command: &str,
    parameters: Value,
    outputs: &[PathBuf],
    result: Value,
) -> anyhow::Result<()> {
    let outputs: Vec<String> = outputs.iter().map(|p| p.display().to_string()).collect();
    let manifest = json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "parameters": parameters,
        "outputs": outputs,
        "result": result,
    });
    let path = dir.join(FILE_NAME);
    let text = serde_json::to_string_pretty(&manifest)?;
    fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

pub fn ensure_dir(dir: &Path) -> anyhow::Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))
}
