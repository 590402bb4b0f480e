//! Backtracking searches along the DCA direction `d = y - x`.
//!
//! All three searches walk the same ladder `lambda_bar * beta^j`, j = 0, 1, ...
//! and accept the first rung that passes their acceptance test. Objective values
//! at `x` and `y` are passed in by the caller so they are computed once per
//! outer iteration.

use crate::model::{axpy, DcModel};

use super::SolverConfig;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineSearchOutcome {
    /// Accepted step; zero when a BDCA-type search found no admissible rung.
    pub lambda: f64,
    /// Rungs rejected before acceptance (or before giving up).
    pub backtracks: usize,
    /// Objective at the accepted point.
    pub phi_trial: f64,
    /// The ladder dropped to `<= 1` and the IBDCA step was clamped to 1.
    pub clamped: bool,
    /// The search was exhausted without acceptance (BDCA-type only).
    pub failed: bool,
}

/// IBDCA search from `x`: accept the first `lambda` with
/// `phi(x + lambda d) <= phi(x) - alpha lambda |d|^2` and
/// `phi(x + lambda d) <= phi(y)`. Once the ladder reaches `<= 1` the step is
/// clamped to exactly 1, which reproduces the plain DCA step `x + d = y`.
pub fn ibdca_line_search<M: DcModel + ?Sized>(
    model: &M,
    x: &[f64],
    d: &[f64],
    phi_x: f64,
    phi_y: f64,
    cfg: &SolverConfig,
) -> LineSearchOutcome {
    let d_sq = crate::model::norm_sq(d);
    let mut lambda = cfg.lambda_bar;
    let mut backtracks = 0;
    while lambda > 1.0 && backtracks < cfg.max_backtracks {
        let phi_trial = model.phi(&axpy(x, lambda, d));
        if phi_trial <= phi_x - cfg.alpha * lambda * d_sq && phi_trial <= phi_y {
            return LineSearchOutcome {
                lambda,
                backtracks,
                phi_trial,
                clamped: false,
                failed: false,
            };
        }
        lambda *= cfg.beta;
        backtracks += 1;
    }
    LineSearchOutcome {
        lambda: 1.0,
        backtracks,
        phi_trial: phi_y,
        clamped: true,
        failed: false,
    }
}

/// Armijo search from `y`: accept the first `lambda` with
/// `phi(y + lambda d) <= phi(y) - alpha lambda |d|^2 + allowance`.
///
/// Returns `lambda = 0` with `failed = true` after `max_backtracks` rejected
/// rungs, which happens when `d` is an ascent direction at `y`.
fn armijo_from_y<M: DcModel + ?Sized>(
    model: &M,
    y: &[f64],
    d: &[f64],
    phi_y: f64,
    allowance: f64,
    cfg: &SolverConfig,
) -> LineSearchOutcome {
    let d_sq = crate::model::norm_sq(d);
    let mut lambda = cfg.lambda_bar;
    for backtracks in 0..cfg.max_backtracks {
        let phi_trial = model.phi(&axpy(y, lambda, d));
        if phi_trial <= phi_y - cfg.alpha * lambda * d_sq + allowance {
            return LineSearchOutcome {
                lambda,
                backtracks,
                phi_trial,
                clamped: false,
                failed: false,
            };
        }
        lambda *= cfg.beta;
    }
    LineSearchOutcome {
        lambda: 0.0,
        backtracks: cfg.max_backtracks,
        phi_trial: phi_y,
        clamped: false,
        failed: true,
    }
}

pub fn bdca_line_search<M: DcModel + ?Sized>(
    model: &M,
    y: &[f64],
    d: &[f64],
    phi_y: f64,
    cfg: &SolverConfig,
) -> LineSearchOutcome {
    armijo_from_y(model, y, d, phi_y, 0.0, cfg)
}

/// Allowance `v_k = |d_k|^2 / (k + 1)` of the non-monotone search.
pub fn nonmonotone_allowance(d_norm_sq: f64, k: usize) -> f64 {
    d_norm_sq / (k as f64 + 1.0)
}

pub fn nmbdca_line_search<M: DcModel + ?Sized>(
    model: &M,
    y: &[f64],
    d: &[f64],
    k: usize,
    phi_y: f64,
    cfg: &SolverConfig,
) -> LineSearchOutcome {
    let allowance = nonmonotone_allowance(crate::model::norm_sq(d), k);
    armijo_from_y(model, y, d, phi_y, allowance, cfg)
}
