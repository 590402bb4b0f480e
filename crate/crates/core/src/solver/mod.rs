//! Outer loop shared by DCA, BDCA, nmBDCA and IBDCA.

mod config;
pub mod line_search;
pub mod trace;

use web_time::Instant;

pub use config::{SolverConfig, Variant};
pub use line_search::{
    bdca_line_search, ibdca_line_search, nmbdca_line_search, nonmonotone_allowance,
    LineSearchOutcome,
};

use crate::error::{Error, Result};
use crate::model::{axpy, norm_sq, DcModel, SubproblemSolution};

/// One outer iteration `k`: the iterate `x_k`, the DCA direction taken from it
/// and the step the variant accepted.
#[derive(Debug, Clone, PartialEq)]
pub struct IterateRecord {
    pub k: usize,
    /// `x_k`, present when `SolverConfig::keep_iterates` is set.
    pub x: Option<Vec<f64>>,
    /// `phi(x_k)`
    pub phi: f64,
    /// `phi(y_k)`
    pub phi_y: f64,
    pub d_norm: f64,
    /// Accepted step. Measured from `x_k` for DCA (always 1) and IBDCA, from
    /// `y_k` for BDCA and nmBDCA. Zero on the terminating critical-point record
    /// and on failed BDCA-type searches.
    pub lambda: f64,
    pub backtracks: usize,
    /// The BDCA-type search failed and the step degraded to `y_k`.
    pub search_failed: bool,
    /// Seconds since the solve started, taken at the end of this iteration.
    pub wall_time: f64,
    pub inner_iters: usize,
    pub inner_resid: f64,
    pub inner_converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    CriticalPoint,
    RelEnergyConverged,
    MaxIterations,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::CriticalPoint => "critical_point",
            Status::RelEnergyConverged => "rel_energy_converged",
            Status::MaxIterations => "max_iterations",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub final_point: Vec<f64>,
    pub final_phi: f64,
    pub status: Status,
    pub trace: Vec<IterateRecord>,
}

impl SolveResult {
    /// Outer iterations performed (one trace row each).
    pub fn iterations(&self) -> usize {
        self.trace.len()
    }

    /// `phi(x_0), phi(x_1), ..., phi(x_final)`.
    pub fn phi_sequence(&self) -> Vec<f64> {
        let mut seq: Vec<f64> = self.trace.iter().map(|r| r.phi).collect();
        if self.status != Status::CriticalPoint {
            seq.push(self.final_phi);
        }
        seq
    }

    /// The last accepted subproblem was not solved to tolerance.
    pub fn inner_nonconverged(&self) -> bool {
        self.trace.last().is_some_and(|r| !r.inner_converged)
    }
}

/// Result of [`dca_step`]: `y = argmin g - <grad h(x), .>` and `d = y - x`.
#[derive(Debug, Clone, PartialEq)]
pub struct DcaStep {
    pub y: Vec<f64>,
    pub d: Vec<f64>,
    pub inner_iters: usize,
    pub inner_resid: f64,
    pub inner_converged: bool,
}

pub fn dca_step<M: DcModel + ?Sized>(model: &M, x: &[f64]) -> Result<DcaStep> {
    check_dim(model, x)?;
    let SubproblemSolution {
        point: y,
        inner_iters,
        inner_resid,
        converged,
    } = model.solve_subproblem(x).map_err(|f| Error::Subproblem {
        iteration: 0,
        residual: f.residual,
        reason: f.reason,
        partial_trace: Vec::new(),
    })?;
    if y.len() != x.len() || y.iter().any(|v| !v.is_finite()) {
        return Err(Error::Subproblem {
            iteration: 0,
            residual: inner_resid,
            reason: "subproblem returned a non-finite or misshapen point".into(),
            partial_trace: Vec::new(),
        });
    }
    let d = y.iter().zip(x).map(|(a, b)| a - b).collect();
    Ok(DcaStep {
        y,
        d,
        inner_iters,
        inner_resid,
        inner_converged: converged,
    })
}

fn check_dim<M: DcModel + ?Sized>(model: &M, x: &[f64]) -> Result<()> {
    if x.len() != model.dim() {
        return Err(Error::DimensionMismatch {
            expected: model.dim(),
            actual: x.len(),
        });
    }
    Ok(())
}

pub fn solve<M: DcModel + ?Sized>(
    model: &M,
    x0: &[f64],
    cfg: &SolverConfig,
) -> Result<SolveResult> {
    solve_observed(model, x0, cfg, |_, _| {})
}

/// Like [`solve`], calling `observe(record, x_k)` as soon as each iteration is
/// complete.
pub fn solve_observed<M, F>(
    model: &M,
    x0: &[f64],
    cfg: &SolverConfig,
    mut observe: F,
) -> Result<SolveResult>
where
    M: DcModel + ?Sized,
    F: FnMut(&IterateRecord, &[f64]),
{
    cfg.validate()?;
    check_dim(model, x0)?;

    let start = Instant::now();
    let mut trace: Vec<IterateRecord> = Vec::new();
    let mut x = x0.to_vec();
    let mut phi_x = model.phi(&x);

    for k in 0..cfg.max_outer_iter {
        let step = match dca_step(model, &x) {
            Ok(step) => step,
            Err(Error::Subproblem {
                residual, reason, ..
            }) => {
                return Err(Error::Subproblem {
                    iteration: k,
                    residual,
                    reason,
                    partial_trace: trace,
                })
            }
            Err(e) => return Err(e),
        };
        let d_sq = norm_sq(&step.d);
        let d_norm = d_sq.sqrt();
        let phi_y = model.phi(&step.y);

        let mut record = IterateRecord {
            k,
            x: cfg.keep_iterates.then(|| x.clone()),
            phi: phi_x,
            phi_y,
            d_norm,
            lambda: 0.0,
            backtracks: 0,
            search_failed: false,
            wall_time: 0.0,
            inner_iters: step.inner_iters,
            inner_resid: step.inner_resid,
            inner_converged: step.inner_converged,
        };

        if d_norm <= cfg.tol_direction {
            record.wall_time = start.elapsed().as_secs_f64();
            observe(&record, &x);
            trace.push(record);
            return Ok(SolveResult {
                final_point: x,
                final_phi: phi_x,
                status: Status::CriticalPoint,
                trace,
            });
        }

        let (next, phi_next) = match cfg.variant {
            Variant::Dca => {
                record.lambda = 1.0;
                (step.y, phi_y)
            }
            Variant::Ibdca => {
                let ls = ibdca_line_search(model, &x, &step.d, phi_x, phi_y, cfg);
                record.lambda = ls.lambda;
                record.backtracks = ls.backtracks;
                if ls.clamped {
                    (step.y, phi_y)
                } else {
                    (axpy(&x, ls.lambda, &step.d), ls.phi_trial)
                }
            }
            Variant::Bdca | Variant::NmBdca => {
                let ls = if cfg.variant == Variant::Bdca {
                    bdca_line_search(model, &step.y, &step.d, phi_y, cfg)
                } else {
                    nmbdca_line_search(model, &step.y, &step.d, k, phi_y, cfg)
                };
                record.lambda = ls.lambda;
                record.backtracks = ls.backtracks;
                record.search_failed = ls.failed;
                if ls.failed {
                    (step.y, phi_y)
                } else {
                    (axpy(&step.y, ls.lambda, &step.d), ls.phi_trial)
                }
            }
        };

        record.wall_time = start.elapsed().as_secs_f64();
        observe(&record, &x);
        trace.push(record);

        let rel_converged = cfg.tol_rel_energy > 0.0
            && (phi_x - phi_next).abs() <= cfg.tol_rel_energy * phi_x.abs();
        x = next;
        phi_x = phi_next;
        if rel_converged {
            return Ok(SolveResult {
                final_point: x,
                final_phi: phi_x,
                status: Status::RelEnergyConverged,
                trace,
            });
        }
    }

    Ok(SolveResult {
        final_point: x,
        final_phi: phi_x,
        status: Status::MaxIterations,
        trace,
    })
}
