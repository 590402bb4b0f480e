use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which DC scheme drives the outer loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Classical DCA: `x_{k+1} = y_k`.
    Dca,
    /// Boosted DCA: Armijo search from `y_k` along `d_k`.
    Bdca,
    /// Non-monotone boosted DCA: the BDCA search relaxed by `|d_k|^2 / (k+1)`.
    NmBdca,
    /// Improved boosted DCA: two-condition search from `x_k`, clamped at 1.
    Ibdca,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Dca, Variant::Bdca, Variant::NmBdca, Variant::Ibdca];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Dca => "dca",
            Variant::Bdca => "bdca",
            Variant::NmBdca => "nmbdca",
            Variant::Ibdca => "ibdca",
        }
    }

    /// Whether the objective is guaranteed nonincreasing along the iterates.
    pub fn is_monotone(self) -> bool {
        matches!(self, Variant::Dca | Variant::Ibdca)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dca" => Ok(Variant::Dca),
            "bdca" => Ok(Variant::Bdca),
            "nmbdca" | "nm-bdca" => Ok(Variant::NmBdca),
            "ibdca" => Ok(Variant::Ibdca),
            other => Err(Error::InvalidConfig(format!("unknown variant `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub variant: Variant,
    /// Sufficient-decrease coefficient.
    pub alpha: f64,
    /// Backtracking shrink factor in (0, 1).
    pub beta: f64,
    /// Initial trial step of every line search; must exceed 1.
    pub lambda_bar: f64,
    pub max_outer_iter: usize,
    /// Stop when `|phi_k - phi_{k+1}| <= tol * |phi_k|`. Zero disables the test.
    pub tol_rel_energy: f64,
    /// `|d_k| <= tol_direction` declares a critical point.
    pub tol_direction: f64,
    pub max_backtracks: usize,
    /// Keep a copy of every iterate in the trace.
    pub keep_iterates: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            variant: Variant::Ibdca,
            alpha: 0.2,
            beta: 0.5,
            lambda_bar: 2.0,
            max_outer_iter: 1000,
            tol_rel_energy: 0.0,
            tol_direction: 1e-10,
            max_backtracks: 30,
            keep_iterates: true,
        }
    }
}

impl SolverConfig {
    pub fn with_variant(mut self, variant: Variant) -> Self {
        self.variant = variant;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return bad(format!("alpha must be positive, got {}", self.alpha));
        }
        if !(self.beta > 0.0 && self.beta < 1.0) {
            return bad(format!("beta must lie in (0, 1), got {}", self.beta));
        }
        // The x-based ladder needs rungs above the plain DCA step; the y-based
        // ones only need a positive start.
        let floor = match self.variant {
            Variant::Ibdca | Variant::Dca => 1.0,
            Variant::Bdca | Variant::NmBdca => 0.0,
        };
        if !(self.lambda_bar > floor && self.lambda_bar.is_finite()) {
            return bad(format!(
                "lambda_bar must exceed {floor} for {}, got {}",
                self.variant, self.lambda_bar
            ));
        }
        if self.max_outer_iter == 0 {
            return bad("max_outer_iter must be positive".into());
        }
        if self.max_backtracks == 0 {
            return bad("max_backtracks must be positive".into());
        }
        if [self.tol_rel_energy, self.tol_direction]
            .iter()
            .any(|t| t.is_nan() || *t < 0.0)
        {
            return bad("tolerances must be nonnegative".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid() {
        SolverConfig::default().validate().unwrap();
    }

    #[test]
    fn rejects_out_of_range_parameters() {
        let base = SolverConfig::default();
        for cfg in [
            SolverConfig {
                beta: 1.0,
                ..base.clone()
            },
            SolverConfig {
                beta: 0.0,
                ..base.clone()
            },
            SolverConfig {
                lambda_bar: 1.0,
                ..base.clone()
            },
            SolverConfig {
                alpha: 0.0,
                ..base.clone()
            },
            SolverConfig {
                max_outer_iter: 0,
                ..base.clone()
            },
            SolverConfig {
                tol_direction: -1.0,
                ..base.clone()
            },
        ] {
            assert!(cfg.validate().is_err(), "{cfg:?}");
        }
    }

    #[test]
    fn variant_names_round_trip() {
        for v in Variant::ALL {
            assert_eq!(v.name().parse::<Variant>().unwrap(), v);
        }
        assert!("newton".parse::<Variant>().is_err());
    }
}
