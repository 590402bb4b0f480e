use crate::tv::ImageGrid;

fn diff_norm_sq(a: &ImageGrid, b: &ImageGrid) -> f64 {
    assert_eq!(a.shape(), b.shape(), "metric inputs must share a shape");
    a.as_slice()
        .iter()
        .zip(b.as_slice())
        .map(|(x, y)| (x - y) * (x - y))
        .sum()
}

/// `20 log10(255 sqrt(m1 m2) / |restored - reference|_F)` in dB;
/// `f64::INFINITY` when the images are identical.
pub fn psnr(restored: &ImageGrid, reference: &ImageGrid) -> f64 {
    let err = diff_norm_sq(restored, reference).sqrt();
    if err == 0.0 {
        return f64::INFINITY;
    }
    20.0 * (255.0 * (reference.len() as f64).sqrt() / err).log10()
}

/// `|restored - reference|^2 / |reference|^2`.
///
/// # Panics
/// If `reference` is all zero.
pub fn re_err(restored: &ImageGrid, reference: &ImageGrid) -> f64 {
    let denom = reference.norm_sq();
    assert!(denom > 0.0, "relative error against an all-zero reference");
    diff_norm_sq(restored, reference) / denom
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psnr_reference_values() {
        let u = ImageGrid::from_fn(7, 5, |i, j| (i * 5 + j) as f64);
        assert_eq!(psnr(&u, &u), f64::INFINITY);
        let plus_one = u.map(|v| v + 1.0);
        assert!((psnr(&plus_one, &u) - 20.0 * 255f64.log10()).abs() < 1e-12);
        assert!((psnr(&plus_one, &u) - 48.13).abs() < 5e-3);
        let plus_full = u.map(|v| v + 255.0);
        assert!(psnr(&plus_full, &u).abs() < 1e-12);
    }

    #[test]
    fn re_err_reference_values() {
        let u = ImageGrid::from_fn(4, 4, |i, j| 1.0 + (i + j) as f64);
        assert_eq!(re_err(&u, &u), 0.0);
        assert!((re_err(&u.map(|v| 2.0 * v), &u) - 1.0).abs() < 1e-15);
        assert!((re_err(&ImageGrid::zeros(4, 4), &u) - 1.0).abs() < 1e-15);
    }

    #[test]
    #[should_panic]
    fn re_err_rejects_zero_reference() {
        let z = ImageGrid::zeros(2, 2);
        re_err(&z, &z);
    }
}
