//! The difference-of-convex model interface.
//!
//! A model describes `phi = g - h` where both `g` and `h` are strongly convex
//! with a common modulus `rho`, `h` is continuously differentiable, and the
//! linearized problem `min g(y) - <grad h(x), y>` can be solved (exactly or to a
//! known tolerance) by the model itself.

/// Output of one linearized convex subproblem.
#[derive(Debug, Clone, PartialEq)]
pub struct SubproblemSolution {
    pub point: Vec<f64>,
    /// Inner iterations spent; zero for closed-form solvers.
    pub inner_iters: usize,
    /// Final inner residual; zero for closed-form solvers.
    pub inner_resid: f64,
    /// False when an iterative inner solver hit its iteration cap.
    pub converged: bool,
}

impl SubproblemSolution {
    pub fn exact(point: Vec<f64>) -> Self {
        Self {
            point,
            inner_iters: 0,
            inner_resid: 0.0,
            converged: true,
        }
    }
}

/// Unrecoverable subproblem failure (non-finite output, broken model).
#[derive(Debug, Clone, PartialEq)]
pub struct SubproblemFailure {
    pub residual: f64,
    pub reason: String,
}

/// A DC program `min phi(x) = g(x) - h(x)`.
///
/// Implementations must be pure: evaluators take `&self` and may be called
/// concurrently from independent solves.
pub trait DcModel: Sync {
    fn dim(&self) -> usize;

    /// Strong-convexity modulus valid for both `g` and `h`.
    fn rho(&self) -> f64;

    /// May return `f64::INFINITY` outside the domain of `g`.
    fn eval_g(&self, x: &[f64]) -> f64;

    fn eval_h(&self, x: &[f64]) -> f64;

    fn grad_h(&self, x: &[f64]) -> Vec<f64>;

    /// Returns the unique minimizer of `g(.) - <grad h(x), .>`.
    fn solve_subproblem(&self, x: &[f64]) -> Result<SubproblemSolution, SubproblemFailure>;

    fn phi(&self, x: &[f64]) -> f64 {
        self.eval_g(x) - self.eval_h(x)
    }
}

impl<M: DcModel + ?Sized> DcModel for &M {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn rho(&self) -> f64 {
        (**self).rho()
    }
    fn eval_g(&self, x: &[f64]) -> f64 {
        (**self).eval_g(x)
    }
    fn eval_h(&self, x: &[f64]) -> f64 {
        (**self).eval_h(x)
    }
    fn grad_h(&self, x: &[f64]) -> Vec<f64> {
        (**self).grad_h(x)
    }
    fn solve_subproblem(&self, x: &[f64]) -> Result<SubproblemSolution, SubproblemFailure> {
        (**self).solve_subproblem(x)
    }
    fn phi(&self, x: &[f64]) -> f64 {
        (**self).phi(x)
    }
}

pub(crate) fn norm_sq(v: &[f64]) -> f64 {
    v.iter().map(|a| a * a).sum()
}

/// `x + t * d`
pub(crate) fn axpy(x: &[f64], t: f64, d: &[f64]) -> Vec<f64> {
    x.iter().zip(d).map(|(a, b)| a + t * b).collect()
}
