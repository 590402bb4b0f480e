//! Difference-of-convex programming with boosted line searches.
//!
//! The crate solves `min phi(x) = g(x) - h(x)` with `g`, `h` strongly convex and
//! `h` smooth, using four outer schemes that share the DCA subproblem
//! `y = argmin g - <grad h(x), .>`:
//!
//! * **DCA** steps to `y`.
//! * **BDCA** runs an Armijo search from `y` along `d = y - x`.
//! * **nmBDCA** relaxes the BDCA search by a summable allowance.
//! * **IBDCA** searches from `x` along `d`, requiring both a sufficient
//!   decrease from `phi(x)` and `phi <= phi(y)`, and falls back to `y` itself.
//!   It stays monotone when `g` is nonsmooth and `d` ascends at `y`, where the
//!   BDCA search cannot be carried out.
//!
//! Models: two analytic 2-D problems in [`toy`] and TV restoration under
//! Cauchy noise in [`cauchy`], whose subproblem is a TV proximal step solved by
//! an accelerated primal-dual iteration ([`tv::tv_prox`]).

pub mod cauchy;
pub mod error;
pub mod imaging;
pub mod model;
pub mod solver;
pub mod toy;
pub mod tv;

pub use cauchy::CauchyModel;
pub use error::{Error, Result};
pub use model::{DcModel, SubproblemFailure, SubproblemSolution};
pub use solver::{dca_step, solve, solve_observed, SolveResult, SolverConfig, Status, Variant};
pub use tv::{GradientField, ImageGrid, PdConfig};
