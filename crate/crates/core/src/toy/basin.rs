//! Random-start attractor census on the SCAD problem.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use web_time::Instant;

use crate::error::Result;
use crate::solver::{solve, SolverConfig, Variant};

use super::ScadSeparableProblem;

/// Distance within which a limit point is credited to an attractor.
pub const CLASSIFY_RADIUS: f64 = 1e-3;

/// Side of the square `[0, SIDE]^2` starts are drawn from.
pub const SIDE: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Attractor {
    TwoTwo,
    ZeroTwo,
    TwoZero,
    Origin,
    Other,
}

impl Attractor {
    pub const ALL: [Attractor; 5] = [
        Attractor::TwoTwo,
        Attractor::ZeroTwo,
        Attractor::TwoZero,
        Attractor::Origin,
        Attractor::Other,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        match self {
            Attractor::TwoTwo => "(2,2)",
            Attractor::ZeroTwo => "(0,2)",
            Attractor::TwoZero => "(2,0)",
            Attractor::Origin => "(0,0)",
            Attractor::Other => "other",
        }
    }
}

impl fmt::Display for Attractor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn classify(point: &[f64]) -> Attractor {
    ScadSeparableProblem::CRITICAL_POINTS
        .iter()
        .zip(&Attractor::ALL)
        .find(|(c, _)| (point[0] - c[0]).hypot(point[1] - c[1]) <= CLASSIFY_RADIUS)
        .map_or(Attractor::Other, |(_, a)| *a)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BasinReport {
    /// Indexed by [`Attractor::index`].
    pub counts: [usize; 5],
    pub n_points: usize,
    pub variant: Variant,
    pub elapsed: f64,
}

impl BasinReport {
    pub fn count(&self, a: Attractor) -> usize {
        self.counts[a.index()]
    }

    pub fn fraction(&self, a: Attractor) -> f64 {
        self.count(a) as f64 / self.n_points as f64
    }
}

/// Solver settings used for the census, per variant.
pub fn basin_config(variant: Variant) -> SolverConfig {
    let base = SolverConfig {
        variant,
        alpha: 0.2,
        beta: 0.7,
        lambda_bar: 3.0,
        max_outer_iter: 1000,
        tol_rel_energy: 0.0,
        tol_direction: 1e-10,
        max_backtracks: 30,
        keep_iterates: false,
    };
    match variant {
        // The y-based searches start one unit further along d than the x-based
        // one, so their ladder starts at 3 - 1.
        Variant::Bdca | Variant::NmBdca => SolverConfig {
            lambda_bar: 2.0,
            ..base
        },
        _ => base,
    }
}

/// Start point `index` of the stream keyed by `seed`. Each point has its own
/// ChaCha stream, so the draw does not depend on evaluation order.
pub fn start_point(seed: u64, index: u64) -> [f64; 2] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    [SIDE * rng.random::<f64>(), SIDE * rng.random::<f64>()]
}

/// How the independent solves of a census are scheduled. The report does not
/// depend on the choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Rayon's global pool; sequential without the `parallel` feature.
    #[default]
    Parallel,
}

pub fn basin_experiment(
    n_points: usize,
    seed: u64,
    cfg: &SolverConfig,
    exec: Execution,
) -> Result<BasinReport> {
    let starts: Vec<[f64; 2]> = (0..n_points as u64).map(|i| start_point(seed, i)).collect();
    basin_from_starts(&starts, cfg, exec)
}

pub fn basin_from_starts(
    starts: &[[f64; 2]],
    cfg: &SolverConfig,
    exec: Execution,
) -> Result<BasinReport> {
    let timer = Instant::now();
    let run =
        |x0: &[f64; 2]| solve(&ScadSeparableProblem, x0, cfg).map(|r| classify(&r.final_point));

    let labels: Vec<Attractor> = match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            starts.par_iter().map(run).collect::<Result<_>>()?
        }
        _ => starts.iter().map(run).collect::<Result<_>>()?,
    };

    let mut counts = [0usize; 5];
    for a in labels {
        counts[a.index()] += 1;
    }
    Ok(BasinReport {
        counts,
        n_points: starts.len(),
        variant: cfg.variant,
        elapsed: timer.elapsed().as_secs_f64(),
    })
}
