//! Reference implementations used as test oracles. Written from the problem
//! statements rather than shared with the library code they check.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.random::<f64>()
}

/// The QuadL1 objective `-2.5u + u^2 + v^2 + |u| + |v| - (u^2 + v^2)/2`.
pub fn quadl1_phi(x: [f64; 2]) -> f64 {
    let [u, v] = x;
    -2.5 * u + 0.5 * (u * u + v * v) + u.abs() + v.abs()
}

fn quadl1_g(u: f64, v: f64) -> f64 {
    -2.5 * u + u * u + v * v + u.abs() + v.abs()
}

/// Minimizes `g(z) - <w, z>` by repeatedly zooming a 21 x 21 grid onto the best
/// node. `g` is strongly convex, so the best node stays inside the shrinking box.
pub fn quadl1_subproblem_oracle(w: [f64; 2]) -> [f64; 2] {
    let obj = |u: f64, v: f64| quadl1_g(u, v) - w[0] * u - w[1] * v;
    let (mut cu, mut cv, mut half) = (0.0, 0.0, 32.0);
    while half > 1e-9 {
        let step = half / 10.0;
        let mut best = (f64::INFINITY, cu, cv);
        for i in -10..=10 {
            for j in -10..=10 {
                let (u, v) = (cu + i as f64 * step, cv + j as f64 * step);
                let val = obj(u, v);
                if val < best.0 {
                    best = (val, u, v);
                }
            }
        }
        (cu, cv) = (best.1, best.2);
        half = 2.0 * step;
    }
    [cu, cv]
}

/// The one-dimensional SCAD-type function by cases.
pub fn scad_f(t: f64) -> f64 {
    let a = t.abs();
    if a <= 1.0 {
        a
    } else if a < 2.0 {
        a - (a - 1.0) * (a - 1.0) / 2.0
    } else {
        (a - 2.0) * (a - 2.0) + 1.5
    }
}

pub fn scad_phi(x: &[f64]) -> f64 {
    scad_f(x[0]) + scad_f(x[1])
}

/// Golden-section search for the minimizer of a unimodal `f` on `[lo, hi]`.
pub fn golden_section(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - r * (hi - lo);
    let mut b = lo + r * (hi - lo);
    let (mut fa, mut fb) = (f(a), f(b));
    while hi - lo > tol {
        if fa < fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - r * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + r * (hi - lo);
            fb = f(b);
        }
    }
    0.5 * (lo + hi)
}

/// Grid minimizer of `f` over `lo, lo + step, ..., hi`.
pub fn grid_argmin(f: impl Fn(f64) -> f64, lo: f64, hi: f64, step: f64) -> f64 {
    let n = ((hi - lo) / step).round() as usize;
    (0..=n)
        .map(|i| lo + i as f64 * step)
        .map(|t| (f(t), t))
        .fold(
            (f64::INFINITY, lo),
            |best, cur| if cur.0 < best.0 { cur } else { best },
        )
        .1
}

/// Row-major forward differences with Neumann boundary, indexed explicitly.
pub fn grad_ref(u: &[f64], rows: usize, cols: usize) -> (Vec<f64>, Vec<f64>) {
    let at = |i: usize, j: usize| u[i * cols + j];
    let mut px = vec![0.0; rows * cols];
    let mut py = vec![0.0; rows * cols];
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                px[i * cols + j] = at(i, j + 1) - at(i, j);
            }
            if i + 1 < rows {
                py[i * cols + j] = at(i + 1, j) - at(i, j);
            }
        }
    }
    (px, py)
}

/// `-grad^T`, obtained by transposing [`grad_ref`] entry by entry.
pub fn div_ref(px: &[f64], py: &[f64], rows: usize, cols: usize) -> Vec<f64> {
    let mut out = vec![0.0; rows * cols];
    for i in 0..rows {
        for j in 0..cols {
            let k = i * cols + j;
            if j + 1 < cols {
                out[k + 1] -= px[k];
                out[k] += px[k];
            }
            if i + 1 < rows {
                out[k + cols] -= py[k];
                out[k] += py[k];
            }
        }
    }
    out
}

pub fn tv_ref(u: &[f64], rows: usize, cols: usize) -> f64 {
    let (px, py) = grad_ref(u, rows, cols);
    px.iter().zip(&py).map(|(a, b)| a.hypot(*b)).sum()
}

/// `argmin TV(u) + c/2 |u|^2 - <v, u>` by FISTA on the dual
/// `min_{|p_ij| <= 1} |v + div p|^2 / (2c)` with step `c / 8`, recovering
/// `u = (v + div p) / c`.
pub fn tv_prox_oracle(v: &[f64], rows: usize, cols: usize, c: f64, iters: usize) -> Vec<f64> {
    let n = rows * cols;
    let step = c / 8.0;
    let (mut px, mut py) = (vec![0.0; n], vec![0.0; n]);
    let (mut qx, mut qy) = (px.clone(), py.clone());
    let mut t = 1.0f64;
    let primal = |px: &[f64], py: &[f64]| -> Vec<f64> {
        let d = div_ref(px, py, rows, cols);
        v.iter().zip(&d).map(|(a, b)| (a + b) / c).collect()
    };
    for _ in 0..iters {
        let u = primal(&qx, &qy);
        let (gx, gy) = grad_ref(&u, rows, cols);
        let mut nx = vec![0.0; n];
        let mut ny = vec![0.0; n];
        for k in 0..n {
            let (a, b) = (qx[k] + step * gx[k], qy[k] + step * gy[k]);
            let s = a.hypot(b).max(1.0);
            nx[k] = a / s;
            ny[k] = b / s;
        }
        let t_next = (1.0 + (1.0 + 4.0 * t * t).sqrt()) / 2.0;
        let m = (t - 1.0) / t_next;
        for k in 0..n {
            qx[k] = nx[k] + m * (nx[k] - px[k]);
            qy[k] = ny[k] + m * (ny[k] - py[k]);
        }
        px = nx;
        py = ny;
        t = t_next;
    }
    primal(&px, &py)
}

pub fn tv_prox_objective_ref(u: &[f64], v: &[f64], rows: usize, cols: usize, c: f64) -> f64 {
    let quad: f64 = u.iter().map(|a| a * a).sum();
    let lin: f64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
    tv_ref(u, rows, cols) + 0.5 * c * quad - lin
}

/// `H(u) = -mu/2 sum log(gamma^2 + (u - f)^2) + c/2 |u|^2`.
pub fn cauchy_h(u: &[f64], f: &[f64], mu: f64, gamma: f64, c: f64) -> f64 {
    u.iter()
        .zip(f)
        .map(|(a, b)| -0.5 * mu * (gamma * gamma + (a - b) * (a - b)).ln() + 0.5 * c * a * a)
        .sum()
}

/// `H(u + s dir) - H(u - s dir)`, summed pixel by pixel with the quadratic part
/// expanded (`c/2 ((a + sb)^2 - (a - sb)^2) = 2 c a s b`) and the log part as a
/// single log of a ratio, so the large `c/2 |u|^2` terms never cancel.
pub fn cauchy_h_central_difference(
    u: &[f64],
    dir: &[f64],
    s: f64,
    f: &[f64],
    mu: f64,
    gamma: f64,
    c: f64,
) -> f64 {
    let g2 = gamma * gamma;
    u.iter()
        .zip(dir)
        .zip(f)
        .map(|((a, b), fi)| {
            let r = a - fi;
            let (plus, minus) = (g2 + (r + s * b).powi(2), g2 + (r - s * b).powi(2));
            -0.5 * mu * (plus / minus).ln() + 2.0 * c * a * s * b
        })
        .sum()
}
