//! Trace export and post-hoc checks of the descent guarantees.

use std::io::{self, Write};

use super::{IterateRecord, SolveResult, Variant};

pub const TRACE_HEADER: &str = "k,phi,d_norm,lambda,backtracks,wall_time_s";

/// Floats are written with 17 significant digits so values round-trip.
pub fn fmt_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "nan".to_string()
    } else if v > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

pub fn format_row(r: &IterateRecord) -> String {
    format!(
        "{},{},{},{},{},{}",
        r.k,
        fmt_f64(r.phi),
        fmt_f64(r.d_norm),
        fmt_f64(r.lambda),
        r.backtracks,
        fmt_f64(r.wall_time)
    )
}

pub fn write_csv<W: Write>(mut out: W, trace: &[IterateRecord]) -> io::Result<()> {
    writeln!(out, "{TRACE_HEADER}")?;
    for r in trace {
        writeln!(out, "{}", format_row(r))?;
    }
    Ok(())
}

/// `|a - b|` scaled by `max(1, |b|)`.
fn slack(b: f64, rel_tol: f64) -> f64 {
    rel_tol * b.abs().max(1.0)
}

/// Indices `k` where `phi[k + 1] > phi[k]` beyond the relative tolerance.
pub fn monotonicity_violations(phis: &[f64], rel_tol: f64) -> Vec<usize> {
    phis.windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] > w[0] + slack(w[0], rel_tol))
        .map(|(k, _)| k)
        .collect()
}

/// Step-wise descent checks recomputed from a finished trace.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct DescentReport {
    /// Iterations violating `phi_{k+1} <= phi_k - coef * |d_k|^2`, where `coef`
    /// is `alpha * lambda_k` for IBDCA and `rho` for DCA.
    pub sufficient_decrease: Vec<usize>,
    /// IBDCA iterations violating `phi_{k+1} <= phi(y_k)`.
    pub sandwich: Vec<usize>,
}

impl DescentReport {
    pub fn is_clean(&self) -> bool {
        self.sufficient_decrease.is_empty() && self.sandwich.is_empty()
    }
}

/// Checks the per-step guarantees of the monotone variants. `coef` is `alpha`
/// for IBDCA and `rho` for DCA; other variants yield an empty report.
pub fn descent_report(
    result: &SolveResult,
    variant: Variant,
    coef: f64,
    rel_tol: f64,
) -> DescentReport {
    let phis = result.phi_sequence();
    let mut report = DescentReport::default();
    for (k, rec) in result.trace.iter().enumerate() {
        let Some(&next) = phis.get(k + 1) else { break };
        let d_sq = rec.d_norm * rec.d_norm;
        let required = match variant {
            Variant::Ibdca => rec.phi - coef * rec.lambda * d_sq,
            Variant::Dca => rec.phi - coef * d_sq,
            _ => continue,
        };
        if next > required + slack(rec.phi, rel_tol) {
            report.sufficient_decrease.push(k);
        }
        if variant == Variant::Ibdca && next > rec.phi_y + slack(rec.phi_y, rel_tol) {
            report.sandwich.push(k);
        }
    }
    report
}

/// `sum |d_k|^2` over the trace together with the bound
/// `(phi(x_0) - min phi) / rho` it must respect for the monotone variants.
pub fn summability(result: &SolveResult, rho: f64) -> (f64, f64) {
    let phis = result.phi_sequence();
    let sum: f64 = result.trace.iter().map(|r| r.d_norm * r.d_norm).sum();
    let min = phis.iter().copied().fold(f64::INFINITY, f64::min);
    let bound = (phis.first().copied().unwrap_or(0.0) - min) / rho;
    (sum, bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_significant_digits() {
        let s = fmt_f64(-9.0 / 8.0);
        assert_eq!(s, "-1.1250000000000000e0");
        assert_eq!(s.parse::<f64>().unwrap(), -1.125);
        let third = fmt_f64(1.0 / 3.0);
        assert_eq!(third.parse::<f64>().unwrap(), 1.0 / 3.0);
    }

    #[test]
    fn monotonicity_detects_increase() {
        assert!(monotonicity_violations(&[3.0, 2.0, 2.0, 1.0], 0.0).is_empty());
        assert_eq!(monotonicity_violations(&[3.0, 2.0, 2.5, 1.0], 0.0), vec![1]);
        assert!(monotonicity_violations(&[1.0, 1.0 + 1e-12], 1e-8).is_empty());
    }
}
