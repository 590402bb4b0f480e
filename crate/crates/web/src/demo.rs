use dcboost::cauchy::{default_parameters, restoration_config, synthesize_observation};
use dcboost::imaging::{encode_pgm, make_squares_image, psnr};
use dcboost::toy::{basin_config, classify, QuadL1Problem, ScadSeparableProblem};
use dcboost::{solve, CauchyModel, DcModel, ImageGrid, PdConfig, SolverConfig, Variant};

/// Largest grid or image side the demo accepts, to keep the page responsive.
pub const MAX_SIDE: usize = 256;

#[derive(Debug, Clone, Copy)]
pub struct ToyParams {
    pub alpha: f64,
    pub beta: f64,
    pub lambda_bar: f64,
}

fn variant(name: &str) -> Result<Variant, String> {
    name.parse::<Variant>().map_err(|e| e.to_string())
}

fn side(n: usize) -> Result<usize, String> {
    if (2..=MAX_SIDE).contains(&n) {
        Ok(n)
    } else {
        Err(format!("grid side must be in 2..={MAX_SIDE}, got {n}"))
    }
}

fn with_model<T>(example: &str, f: impl FnOnce(&dyn DcModel) -> T) -> Result<T, String> {
    match example {
        "quadl1" => Ok(f(&QuadL1Problem)),
        "scad" => Ok(f(&ScadSeparableProblem)),
        other => Err(format!(
            "unknown example `{other}` (expected quadl1 or scad)"
        )),
    }
}

/// `[u, v, phi, lambda]` for each iterate, then the final point with lambda 0.
pub fn toy_trajectory(
    example: &str,
    variant_name: &str,
    x0: [f64; 2],
    p: ToyParams,
) -> Result<Vec<[f64; 4]>, String> {
    let cfg = SolverConfig {
        variant: variant(variant_name)?,
        alpha: p.alpha,
        beta: p.beta,
        lambda_bar: p.lambda_bar,
        keep_iterates: true,
        ..SolverConfig::default()
    };
    let result = with_model(example, |m| solve(m, &x0, &cfg))?.map_err(|e| e.to_string())?;
    let mut rows: Vec<[f64; 4]> = result
        .trace
        .iter()
        .map(|r| {
            let x = r.x.as_ref().expect("iterates are kept");
            [x[0], x[1], r.phi, r.lambda]
        })
        .collect();
    let last = rows.last().map(|r| [r[0], r[1]]);
    if last != Some([result.final_point[0], result.final_point[1]]) {
        rows.push([
            result.final_point[0],
            result.final_point[1],
            result.final_phi,
            0.0,
        ]);
    }
    Ok(rows)
}

pub fn phi_grid(example: &str, lo: f64, hi: f64, n: usize) -> Result<Vec<f64>, String> {
    let n = side(n)?;
    if !(lo < hi && lo.is_finite() && hi.is_finite()) {
        return Err(format!("need lo < hi, got [{lo}, {hi}]"));
    }
    let at = |k: usize| lo + (hi - lo) * k as f64 / (n - 1) as f64;
    with_model(example, |m| {
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| m.phi(&[at(j), at(n - 1 - i)]))
            .collect()
    })
}

pub fn basin_map(variant_name: &str, n: usize) -> Result<Vec<u8>, String> {
    let n = side(n)?;
    let cfg = basin_config(variant(variant_name)?);
    // Cell centres, so no start sits exactly on a critical point.
    let at = |k: usize| 3.0 * (k as f64 + 0.5) / n as f64;
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let res = solve(&ScadSeparableProblem, &[at(j), at(n - 1 - i)], &cfg)
                .map_err(|e| e.to_string())?;
            out.push(classify(&res.final_point).index() as u8);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct Restoration {
    pub size: usize,
    pub clean: Vec<u8>,
    pub noisy: Vec<u8>,
    pub restored: Vec<u8>,
    pub energies: Vec<f64>,
    pub iterations: usize,
    pub psnr_noisy: f64,
    pub psnr_restored: f64,
}

/// Pixels as the 8-bit file would store them.
fn bytes(u: &ImageGrid) -> Vec<u8> {
    let pgm = encode_pgm(u);
    pgm[pgm.len() - u.len()..].to_vec()
}

pub fn restore_squares(
    size: usize,
    gamma: f64,
    seed: u64,
    variant_name: &str,
) -> Result<Restoration, String> {
    let size = side(size)?;
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(format!("gamma must be positive, got {gamma}"));
    }
    let variant = variant(variant_name)?;
    let clean = make_squares_image(size, size);
    let noisy = synthesize_observation(&clean, gamma, seed).map_err(|e| e.to_string())?;
    let (mu, c) = default_parameters(gamma);
    let model = CauchyModel::new(noisy.clone(), mu, gamma, c, PdConfig::default())
        .map_err(|e| e.to_string())?;
    let cfg = restoration_config(variant, model.strong_convexity());
    let result = solve(&model, noisy.as_slice(), &cfg).map_err(|e| e.to_string())?;
    let restored =
        ImageGrid::new(size, size, result.final_point.clone()).map_err(|e| e.to_string())?;
    Ok(Restoration {
        size,
        clean: bytes(&clean),
        noisy: bytes(&noisy),
        restored: bytes(&restored),
        energies: result.phi_sequence(),
        iterations: result.iterations(),
        psnr_noisy: psnr(&noisy, &clean),
        psnr_restored: psnr(&restored, &clean),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const QUADL1: ToyParams = ToyParams {
        alpha: 0.2,
        beta: 0.5,
        lambda_bar: 2.0,
    };

    #[test]
    fn trajectory_ends_at_minimizer() {
        let t = toy_trajectory("quadl1", "ibdca", [0.5, 1.0], QUADL1).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[1][3], 2.0);
        let last = t.last().unwrap();
        assert_eq!([last[0], last[1]], [1.5, 0.0]);
    }

    #[test]
    fn bad_inputs_are_reported() {
        assert!(toy_trajectory("nope", "ibdca", [0.0, 0.0], QUADL1).is_err());
        assert!(toy_trajectory("scad", "nope", [0.0, 0.0], QUADL1).is_err());
        assert!(toy_trajectory(
            "scad",
            "ibdca",
            [0.0, 0.0],
            ToyParams {
                beta: 2.0,
                ..QUADL1
            }
        )
        .is_err());
        assert!(phi_grid("scad", 1.0, 0.0, 10).is_err());
        assert!(basin_map("ibdca", 1).is_err());
        assert!(restore_squares(16, -1.0, 0, "ibdca").is_err());
    }

    #[test]
    fn phi_grid_orientation() {
        let g = phi_grid("scad", 0.0, 2.0, 3).unwrap();
        // Bottom-left is (0, 0), top-right is (2, 2).
        assert_eq!(g[6], 0.0);
        assert!((g[2] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn ibdca_basin_is_all_origin() {
        let m = basin_map("ibdca", 16).unwrap();
        assert!(m.iter().all(|&a| a == 3));
        let d = basin_map("dca", 16).unwrap();
        assert!((0..4u8).all(|a| d.contains(&a)));
    }

    #[test]
    fn restoration_gains() {
        let r = restore_squares(32, 3.0, 7, "ibdca").unwrap();
        assert_eq!(r.restored.len(), 32 * 32);
        assert!(r.psnr_restored > r.psnr_noisy + 5.0);
        assert!(r.energies.windows(2).all(|w| w[1] <= w[0]));
    }
}
