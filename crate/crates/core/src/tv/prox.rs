//! `argmin_u TV(u) + c/2 |u|^2 - <v, u>` by the accelerated first-order
//! primal-dual method for a strongly convex primal term.
//!
//! Saddle form: `min_u max_{|p_ij| <= 1} <grad u, p> + c/2 |u|^2 - <v, u>`.
//! The dual step projects each `(px, py)` pair onto the unit disk, the primal
//! step is the closed-form prox `(w + tau v) / (1 + tau c)`, and after every
//! iteration `theta = 1 / sqrt(1 + 2 g tau)`, `tau *= theta`, `sigma /= theta`
//! with `g` a fraction of the modulus `c`.

use super::{div_into, grad_into, GradientField, ImageGrid};
use crate::error::{Error, Result};

/// `|grad|^2 <= 8` for the forward-difference gradient on a 2-D grid.
pub const GRAD_NORM_SQ_BOUND: f64 = 8.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdConfig {
    pub max_inner_iter: usize,
    /// Relative primal change `|u_{n+1} - u_n| / |u_{n+1}|` declaring convergence.
    pub tol_inner: f64,
    pub tau0: f64,
    pub sigma0: f64,
    /// Acceleration uses the modulus `accel_fraction * c`, a valid lower bound
    /// on the primal strong convexity for any fraction in (0, 1]. Smaller
    /// fractions slow the decay of `tau` and keep the linear phase longer.
    pub accel_fraction: f64,
}

impl Default for PdConfig {
    fn default() -> Self {
        let step = 1.0 / GRAD_NORM_SQ_BOUND.sqrt();
        Self {
            max_inner_iter: 300,
            tol_inner: 1e-5,
            tau0: step,
            sigma0: step,
            accel_fraction: 0.1,
        }
    }
}

impl PdConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_inner_iter == 0 {
            return Err(Error::InvalidConfig(
                "max_inner_iter must be positive".into(),
            ));
        }
        if self.tol_inner.is_nan() || self.tol_inner <= 0.0 {
            return Err(Error::InvalidConfig("tol_inner must be positive".into()));
        }
        if !(self.accel_fraction > 0.0 && self.accel_fraction <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "accel_fraction must lie in (0, 1], got {}",
                self.accel_fraction
            )));
        }
        if !(self.tau0 > 0.0 && self.sigma0 > 0.0) {
            return Err(Error::InvalidConfig(
                "primal-dual steps must be positive".into(),
            ));
        }
        // Small slack so that tau0 = sigma0 = 1/sqrt(8) is accepted.
        if self.tau0 * self.sigma0 * GRAD_NORM_SQ_BOUND > 1.0 + 1e-12 {
            return Err(Error::InvalidConfig(format!(
                "step sizes violate tau*sigma*8 <= 1 (tau={}, sigma={})",
                self.tau0, self.sigma0
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct ProxOutcome {
    pub u: ImageGrid,
    /// Final dual field; `tv_prox_duality_gap(u, dual, ..)` certifies accuracy.
    pub dual: GradientField,
    pub iterations: usize,
    /// Relative primal change of the last iteration.
    pub residual: f64,
    pub converged: bool,
}

/// `TV(u) + c/2 |u|^2 - <v, u>`
pub fn tv_prox_objective(u: &ImageGrid, v: &ImageGrid, c: f64) -> f64 {
    super::tv(u) + 0.5 * c * u.norm_sq() - u.dot(v)
}

/// Primal objective at `u` minus the dual objective `-|v + div p|^2 / (2c)` at
/// a feasible `p` (`|p_ij| <= 1`). Nonnegative; zero only at the optimum.
pub fn tv_prox_duality_gap(u: &ImageGrid, p: &GradientField, v: &ImageGrid, c: f64) -> f64 {
    let d = super::div(p);
    let w: f64 = v
        .as_slice()
        .iter()
        .zip(d.as_slice())
        .map(|(a, b)| (a + b) * (a + b))
        .sum();
    tv_prox_objective(u, v, c) + w / (2.0 * c)
}

/// Solves the TV-prox problem starting from `warm` (or zero).
pub fn tv_prox(
    v: &ImageGrid,
    c: f64,
    cfg: &PdConfig,
    warm: Option<&ImageGrid>,
) -> Result<ProxOutcome> {
    cfg.validate()?;
    if c.is_nan() || c <= 0.0 {
        return Err(Error::InvalidModel(format!(
            "prox weight c must be positive, got {c}"
        )));
    }
    if let Some(w) = warm {
        v.same_shape(w)?;
    }
    let (rows, cols) = v.shape();
    let n = rows * cols;
    let vs = v.as_slice();

    let mut u = warm.map_or_else(|| vec![0.0; n], |w| w.as_slice().to_vec());
    let mut u_bar = u.clone();
    let mut u_prev = vec![0.0; n];
    let mut px = vec![0.0; n];
    let mut py = vec![0.0; n];
    let mut gx = vec![0.0; n];
    let mut gy = vec![0.0; n];
    let mut dv = vec![0.0; n];

    let modulus = cfg.accel_fraction * c;
    let mut tau = cfg.tau0;
    let mut sigma = cfg.sigma0;
    let mut residual = f64::INFINITY;

    for it in 1..=cfg.max_inner_iter {
        // Dual ascent and projection onto the unit disk.
        grad_into(&u_bar, rows, cols, &mut gx, &mut gy);
        for k in 0..n {
            let qx = px[k] + sigma * gx[k];
            let qy = py[k] + sigma * gy[k];
            let scale = qx.hypot(qy).max(1.0);
            px[k] = qx / scale;
            py[k] = qy / scale;
        }

        // Primal proximal step.
        div_into(&px, &py, rows, cols, &mut dv);
        u_prev.copy_from_slice(&u);
        let denom = 1.0 + tau * c;
        let mut change = 0.0;
        let mut size = 0.0;
        for k in 0..n {
            let next = (u[k] + tau * dv[k] + tau * vs[k]) / denom;
            let delta = next - u[k];
            change += delta * delta;
            size += next * next;
            u[k] = next;
        }

        let theta = 1.0 / (1.0 + 2.0 * modulus * tau).sqrt();
        tau *= theta;
        sigma /= theta;
        for k in 0..n {
            u_bar[k] = u[k] + theta * (u[k] - u_prev[k]);
        }

        residual = if size > 0.0 {
            (change / size).sqrt()
        } else {
            change.sqrt()
        };
        if !residual.is_finite() {
            return Err(Error::Subproblem {
                iteration: it,
                residual,
                reason: "primal-dual iteration diverged".into(),
                partial_trace: Vec::new(),
            });
        }
        if residual <= cfg.tol_inner {
            return Ok(ProxOutcome {
                u: ImageGrid::from_raw(rows, cols, u),
                dual: dual_field(rows, cols, px, py),
                iterations: it,
                residual,
                converged: true,
            });
        }
    }

    Ok(ProxOutcome {
        u: ImageGrid::from_raw(rows, cols, u),
        dual: dual_field(rows, cols, px, py),
        iterations: cfg.max_inner_iter,
        residual,
        converged: false,
    })
}

fn dual_field(rows: usize, cols: usize, px: Vec<f64>, py: Vec<f64>) -> GradientField {
    GradientField {
        px: ImageGrid::from_raw(rows, cols, px),
        py: ImageGrid::from_raw(rows, cols, py),
    }
}
