use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::tv::ImageGrid;

/// `v2` draws smaller than this in magnitude are redrawn.
const DIVISION_GUARD: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseParams {
    pub gamma: f64,
    pub seed: u64,
}

impl NoiseParams {
    pub fn new(gamma: f64, seed: u64) -> Result<Self> {
        if !(gamma >= 0.0 && gamma.is_finite()) {
            return Err(Error::InvalidModel(format!(
                "noise scale must be nonnegative, got {gamma}"
            )));
        }
        Ok(Self { gamma, seed })
    }
}

/// Box-Muller pair of independent standard normals.
pub fn standard_normal_pair<R: Rng>(rng: &mut R) -> (f64, f64) {
    // 1 - U lies in (0, 1], keeping the log finite.
    let u1 = 1.0 - rng.random::<f64>();
    let u2 = rng.random::<f64>();
    let r = (-2.0 * u1.ln()).sqrt();
    let angle = std::f64::consts::TAU * u2;
    (r * angle.cos(), r * angle.sin())
}

fn pixel_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// `f = u + gamma * v1 / v2` with `v1, v2 ~ N(0, 1)`, drawn from a stream keyed
/// by `(seed, pixel index)`.
pub fn add_cauchy_noise(u: &ImageGrid, noise: NoiseParams) -> ImageGrid {
    let mut out = u.clone();
    if noise.gamma == 0.0 {
        return out;
    }
    for (index, value) in out.as_mut_slice().iter_mut().enumerate() {
        let mut rng = pixel_rng(noise.seed, index);
        let ratio = loop {
            let (v1, v2) = standard_normal_pair(&mut rng);
            if v2.abs() >= DIVISION_GUARD {
                break v1 / v2;
            }
        };
        *value += noise.gamma * ratio;
    }
    out
}
