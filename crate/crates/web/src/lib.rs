//! Browser bindings for three interactive views: a toy-problem trajectory over
//! its objective landscape, a basin-of-attraction map, and a small Cauchy-noise
//! restoration.
//!
//! The computations live in [`demo`] as ordinary Rust so they can be tested
//! natively; the exported functions only convert errors and buffers.

pub mod demo;

use wasm_bindgen::prelude::*;

fn js_err(msg: String) -> JsValue {
    JsValue::from_str(&msg)
}

/// Flat `[u, v, phi, lambda]` per iterate, ending with the final point (lambda 0).
#[wasm_bindgen]
pub fn toy_trajectory(
    example: &str,
    variant: &str,
    u0: f64,
    v0: f64,
    alpha: f64,
    beta: f64,
    lambda_bar: f64,
) -> Result<Vec<f64>, JsValue> {
    let params = demo::ToyParams {
        alpha,
        beta,
        lambda_bar,
    };
    demo::toy_trajectory(example, variant, [u0, v0], params)
        .map(|t| t.into_iter().flatten().collect())
        .map_err(js_err)
}

/// Objective on an `n x n` grid over `[lo, hi]^2`, row-major with `v` down the
/// rows.
#[wasm_bindgen]
pub fn phi_grid(example: &str, lo: f64, hi: f64, n: usize) -> Result<Vec<f64>, JsValue> {
    demo::phi_grid(example, lo, hi, n).map_err(js_err)
}

/// Attractor index (0: (2,2), 1: (0,2), 2: (2,0), 3: (0,0), 4: other) for each
/// start of an `n x n` grid over `[0, 3]^2`, row-major with `v` down the rows.
#[wasm_bindgen]
pub fn basin_map(variant: &str, n: usize) -> Result<Vec<u8>, JsValue> {
    demo::basin_map(variant, n).map_err(js_err)
}

#[wasm_bindgen]
pub struct Restoration {
    inner: demo::Restoration,
}

#[wasm_bindgen]
impl Restoration {
    pub fn size(&self) -> usize {
        self.inner.size
    }
    pub fn clean(&self) -> Vec<u8> {
        self.inner.clean.clone()
    }
    pub fn noisy(&self) -> Vec<u8> {
        self.inner.noisy.clone()
    }
    pub fn restored(&self) -> Vec<u8> {
        self.inner.restored.clone()
    }
    pub fn energies(&self) -> Vec<f64> {
        self.inner.energies.clone()
    }
    pub fn iterations(&self) -> usize {
        self.inner.iterations
    }
    pub fn psnr_noisy(&self) -> f64 {
        self.inner.psnr_noisy
    }
    pub fn psnr_restored(&self) -> f64 {
        self.inner.psnr_restored
    }
}

/// Corrupts the squares image with Cauchy noise of scale `gamma` and restores
/// it with the default parameters for that scale.
#[wasm_bindgen]
pub fn restore_squares(
    size: usize,
    gamma: f64,
    seed: u32,
    variant: &str,
) -> Result<Restoration, JsValue> {
    demo::restore_squares(size, gamma, u64::from(seed), variant)
        .map(|inner| Restoration { inner })
        .map_err(js_err)
}
