use crate::model::{DcModel, SubproblemFailure, SubproblemSolution};

/// Separable SCAD-type problem `phi(u, v) = f(u) + f(v)` with
///
/// ```text
/// f(t) = |t|                      |t| <= 1
///        |t| - (|t| - 1)^2 / 2    1 < |t| < 2
///        (|t| - 2)^2 + 3/2        |t| >= 2
/// ```
///
/// split as `f = g1 - h1` with both parts carrying `t^2 / 5`. Critical points
/// are `{0, 2}^2`; only the origin is a local (and global) minimizer.
#[derive(Debug, Clone, Copy, Default)]
pub struct ScadSeparableProblem;

impl ScadSeparableProblem {
    pub const RHO: f64 = 2.0 / 5.0;
    pub const CRITICAL_POINTS: [[f64; 2]; 4] = [[2.0, 2.0], [0.0, 2.0], [2.0, 0.0], [0.0, 0.0]];
}

pub fn scad_g(t: f64) -> f64 {
    let a = t.abs();
    if a < 2.0 {
        a + t * t / 5.0
    } else {
        a + (a - 2.0) * (a - 2.0) + t * t / 5.0
    }
}

/// The outer branch is `|t| - 3/2 + t^2/5`, the continuation that keeps this
/// piece C^1 at `|t| = 2`.
pub fn scad_h(t: f64) -> f64 {
    let a = t.abs();
    if a <= 1.0 {
        t * t / 5.0
    } else if a < 2.0 {
        (t * t - 2.0 * a + 1.0) / 2.0 + t * t / 5.0
    } else {
        a - 1.5 + t * t / 5.0
    }
}

pub fn scad_h_prime(t: f64) -> f64 {
    let a = t.abs();
    let s = t.signum();
    if a <= 1.0 {
        2.0 * t / 5.0
    } else if a < 2.0 {
        (t - s) + 2.0 * t / 5.0
    } else {
        s + 2.0 * t / 5.0
    }
}

pub fn scad_phi_tilde(t: f64) -> f64 {
    scad_g(t) - scad_h(t)
}

/// Unique minimizer of `g1(s) - w s`.
///
/// Each smooth piece of `g1` is a quadratic, so the minimizer is either the
/// stationary point of one piece (when it falls inside that piece) or one of
/// the breakpoints `-2, 0, 2`.
pub fn scad_subproblem_1d(w: f64) -> f64 {
    let objective = |s: f64| scad_g(s) - w * s;
    let interior = [
        // 0 < s < 2: 1 + 2s/5 = w
        (2.5 * (w - 1.0), 0.0, 2.0),
        // -2 < s < 0: -1 + 2s/5 = w
        (2.5 * (w + 1.0), -2.0, 0.0),
        // s > 2: 1 + 2(s - 2) + 2s/5 = w
        (5.0 * (w + 3.0) / 12.0, 2.0, f64::INFINITY),
        // s < -2: -1 + 2(s + 2) + 2s/5 = w
        (5.0 * (w - 3.0) / 12.0, f64::NEG_INFINITY, -2.0),
    ];
    interior
        .iter()
        .filter(|(s, lo, hi)| s > lo && s < hi)
        .map(|(s, _, _)| *s)
        .chain([-2.0, 0.0, 2.0])
        .min_by(|a, b| objective(*a).total_cmp(&objective(*b)))
        .expect("candidate list is never empty")
}

impl DcModel for ScadSeparableProblem {
    fn dim(&self) -> usize {
        2
    }

    fn rho(&self) -> f64 {
        Self::RHO
    }

    fn eval_g(&self, x: &[f64]) -> f64 {
        scad_g(x[0]) + scad_g(x[1])
    }

    fn eval_h(&self, x: &[f64]) -> f64 {
        scad_h(x[0]) + scad_h(x[1])
    }

    fn grad_h(&self, x: &[f64]) -> Vec<f64> {
        vec![scad_h_prime(x[0]), scad_h_prime(x[1])]
    }

    fn solve_subproblem(&self, x: &[f64]) -> Result<SubproblemSolution, SubproblemFailure> {
        let y = vec![
            scad_subproblem_1d(scad_h_prime(x[0])),
            scad_subproblem_1d(scad_h_prime(x[1])),
        ];
        Ok(SubproblemSolution::exact(y))
    }

    fn phi(&self, x: &[f64]) -> f64 {
        scad_phi_tilde(x[0]) + scad_phi_tilde(x[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Closed form of `g1 - h1`, written independently of the split.
    fn shape(t: f64) -> f64 {
        let a = t.abs();
        if a <= 1.0 {
            a
        } else if a < 2.0 {
            a - (a - 1.0).powi(2) / 2.0
        } else {
            (a - 2.0).powi(2) + 1.5
        }
    }

    #[test]
    fn phi_tilde_values() {
        assert_eq!(scad_phi_tilde(0.0), 0.0);
        assert!((scad_phi_tilde(2.0) - 1.5).abs() < 1e-15);
        assert!((scad_phi_tilde(1.5) - 1.375).abs() < 1e-15);
        for i in -400..=400 {
            let t = i as f64 * 0.01;
            assert!((scad_phi_tilde(t) - shape(t)).abs() < 1e-12, "t = {t}");
        }
    }

    #[test]
    fn h_is_c1_at_breakpoints() {
        let eps = 1e-7;
        for b in [-2.0, -1.0, 1.0, 2.0] {
            // value continuity
            assert!((scad_h(b - 1e-13) - scad_h(b + 1e-13)).abs() < 1e-11);
            // one-sided derivatives from the branch formulas
            let left = scad_h_prime(b - 1e-15);
            let right = scad_h_prime(b + 1e-15);
            assert!((left - right).abs() < 1e-12, "b = {b}: {left} vs {right}");
            // and against finite differences
            let fd_left = (scad_h(b) - scad_h(b - eps)) / eps;
            let fd_right = (scad_h(b + eps) - scad_h(b)) / eps;
            assert!((fd_left - fd_right).abs() < 1e-5);
        }
    }

    #[test]
    fn subproblem_special_cases() {
        assert_eq!(scad_subproblem_1d(0.0), 0.0);
        assert!((scad_subproblem_1d(10.0) - 65.0 / 12.0).abs() < 1e-15);
        assert!((scad_subproblem_1d(-10.0) + 65.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn critical_points_are_fixed() {
        for p in ScadSeparableProblem::CRITICAL_POINTS {
            let y = ScadSeparableProblem.solve_subproblem(&p).unwrap().point;
            assert!(
                (y[0] - p[0]).abs() < 1e-14 && (y[1] - p[1]).abs() < 1e-14,
                "{p:?} -> {y:?}"
            );
        }
    }
}
