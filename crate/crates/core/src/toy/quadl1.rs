use crate::model::{DcModel, SubproblemFailure, SubproblemSolution};

/// `g(u, v) = -5/2 u + u^2 + v^2 + |u| + |v|`, `h(u, v) = (u^2 + v^2) / 2`.
///
/// `g` is nonsmooth on the axes, and at `y = (1, 0)` reached from `(1/2, 1)`
/// the DCA direction is an ascent direction, so the BDCA search breaks down
/// there.
#[derive(Debug, Clone, Copy, Default)]
pub struct QuadL1Problem;

/// `sign(t) * max(|t| - 1, 0) / 2`, the minimizer of `s^2 + |s| - t s`.
pub fn soft_threshold_half(t: f64) -> f64 {
    t.signum() * (t.abs() - 1.0).max(0.0) / 2.0
}

/// Minimizer of `g(.) - <x, .>`; note `grad h(x) = x`.
pub fn quadl1_subproblem(x: [f64; 2]) -> [f64; 2] {
    [soft_threshold_half(2.5 + x[0]), soft_threshold_half(x[1])]
}

impl QuadL1Problem {
    pub const GLOBAL_MINIMIZER: [f64; 2] = [1.5, 0.0];
}

impl DcModel for QuadL1Problem {
    fn dim(&self) -> usize {
        2
    }

    fn rho(&self) -> f64 {
        1.0
    }

    fn eval_g(&self, x: &[f64]) -> f64 {
        let (u, v) = (x[0], x[1]);
        -2.5 * u + u * u + v * v + u.abs() + v.abs()
    }

    fn eval_h(&self, x: &[f64]) -> f64 {
        0.5 * (x[0] * x[0] + x[1] * x[1])
    }

    fn grad_h(&self, x: &[f64]) -> Vec<f64> {
        x.to_vec()
    }

    fn solve_subproblem(&self, x: &[f64]) -> Result<SubproblemSolution, SubproblemFailure> {
        Ok(SubproblemSolution::exact(
            quadl1_subproblem([x[0], x[1]]).to_vec(),
        ))
    }
}
