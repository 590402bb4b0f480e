//! Noise synthesis, restoration metrics, PGM I/O and synthetic test images.

mod metrics;
mod noise;
mod pgm;

pub use metrics::{psnr, re_err};
pub use noise::{add_cauchy_noise, standard_normal_pair, NoiseParams};
pub use pgm::{decode_pgm, encode_pgm, read_pgm, write_pgm};

use crate::tv::ImageGrid;

pub const SQUARES_BACKGROUND: f64 = 32.0;
pub const SQUARES_LEVELS: [f64; 3] = [96.0, 160.0, 224.0];

/// Clamps to `[0, 255]` and rounds half to even, as storing the image in an
/// 8-bit file would.
pub fn quantize_8bit(u: &ImageGrid) -> ImageGrid {
    u.map(|v| v.clamp(0.0, 255.0).round_ties_even())
}

/// Rectangles as fractions `(top, left, bottom, right)` of the image size.
const SQUARES_LAYOUT: [(f64, f64, f64, f64); 3] = [
    (0.125, 0.125, 0.4375, 0.4375),
    (0.25, 0.5625, 0.8125, 0.875),
    (0.5625, 0.1875, 0.875, 0.5),
];

/// Piecewise-constant test image: background 32 with three non-overlapping
/// rectangles at 96, 160 and 224.
pub fn make_squares_image(rows: usize, cols: usize) -> ImageGrid {
    ImageGrid::from_fn(rows, cols, |i, j| {
        let (y, x) = (i as f64 / rows as f64, j as f64 / cols as f64);
        SQUARES_LAYOUT
            .iter()
            .zip(SQUARES_LEVELS)
            .find(|((t, l, b, r), _)| y >= *t && y < *b && x >= *l && x < *r)
            .map_or(SQUARES_BACKGROUND, |(_, level)| level)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn histogram(u: &ImageGrid) -> [usize; 4] {
        let mut h = [0; 4];
        for &v in u.as_slice() {
            let idx = [SQUARES_BACKGROUND, 96.0, 160.0, 224.0]
                .iter()
                .position(|&l| l == v)
                .expect("unexpected intensity");
            h[idx] += 1;
        }
        h
    }

    #[test]
    fn squares_has_four_levels() {
        let u = make_squares_image(64, 64);
        assert!(histogram(&u).iter().all(|&n| n > 0));
        assert!(crate::tv::tv(&u) > 0.0);
    }

    #[test]
    fn squares_scale_with_size() {
        let small = histogram(&make_squares_image(64, 64));
        let large = histogram(&make_squares_image(128, 128));
        for (s, l) in small.iter().zip(&large) {
            let ratio = *l as f64 / *s as f64;
            assert!((ratio - 4.0).abs() < 0.05, "{ratio}");
        }
    }
}
