//! Discrete gradient, divergence and isotropic total variation on 2-D grids.
//!
//! Forward differences with a zero difference past the last column/row; the
//! divergence is the exact negative adjoint, `<grad u, p> = -<u, div p>`.

mod prox;

pub use prox::{tv_prox, tv_prox_duality_gap, tv_prox_objective, PdConfig, ProxOutcome};

use crate::error::{Error, Result};

/// Row-major raster of intensities.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageGrid {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl ImageGrid {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows < 2 || cols < 2 {
            return Err(Error::InvalidModel(format!(
                "image must be at least 2x2, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                actual: data.len(),
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidModel(
                "image contains non-finite values".into(),
            ));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, 0.0)
    }

    pub fn filled(rows: usize, cols: usize, value: f64) -> Self {
        Self {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Wraps `data` without the finiteness scan; shape is still checked.
    pub(crate) fn from_raw(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub(crate) fn same_shape(&self, other: &Self) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        Ok(())
    }
}

/// Horizontal (`px`) and vertical (`py`) components, each the image's shape.
#[derive(Debug, Clone, PartialEq)]
pub struct GradientField {
    pub px: ImageGrid,
    pub py: ImageGrid,
}

impl GradientField {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            px: ImageGrid::zeros(rows, cols),
            py: ImageGrid::zeros(rows, cols),
        }
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.px.dot(&other.px) + self.py.dot(&other.py)
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }
}

pub fn grad(u: &ImageGrid) -> GradientField {
    let mut field = GradientField::zeros(u.rows, u.cols);
    grad_into(
        u.as_slice(),
        u.rows,
        u.cols,
        &mut field.px.data,
        &mut field.py.data,
    );
    field
}

pub(crate) fn grad_into(u: &[f64], rows: usize, cols: usize, px: &mut [f64], py: &mut [f64]) {
    for i in 0..rows {
        let row = i * cols;
        for j in 0..cols {
            let idx = row + j;
            px[idx] = if j + 1 < cols {
                u[idx + 1] - u[idx]
            } else {
                0.0
            };
            py[idx] = if i + 1 < rows {
                u[idx + cols] - u[idx]
            } else {
                0.0
            };
        }
    }
}

pub fn div(p: &GradientField) -> ImageGrid {
    let (rows, cols) = p.px.shape();
    let mut out = vec![0.0; rows * cols];
    div_into(p.px.as_slice(), p.py.as_slice(), rows, cols, &mut out);
    ImageGrid::from_raw(rows, cols, out)
}

/// Backward differences; the last column of `px` and last row of `py` are
/// ignored, matching the zeros `grad` produces there.
pub(crate) fn div_into(px: &[f64], py: &[f64], rows: usize, cols: usize, out: &mut [f64]) {
    for i in 0..rows {
        let row = i * cols;
        for j in 0..cols {
            let idx = row + j;
            let dx =
                if j + 1 < cols { px[idx] } else { 0.0 } - if j > 0 { px[idx - 1] } else { 0.0 };
            let dy =
                if i + 1 < rows { py[idx] } else { 0.0 } - if i > 0 { py[idx - cols] } else { 0.0 };
            out[idx] = dx + dy;
        }
    }
}

/// Isotropic total variation `sum sqrt(px^2 + py^2)`.
pub fn tv(u: &ImageGrid) -> f64 {
    tv_slice(u.as_slice(), u.rows, u.cols)
}

pub(crate) fn tv_slice(u: &[f64], rows: usize, cols: usize) -> f64 {
    let mut total = 0.0;
    for i in 0..rows {
        let row = i * cols;
        for j in 0..cols {
            let idx = row + j;
            let gx = if j + 1 < cols {
                u[idx + 1] - u[idx]
            } else {
                0.0
            };
            let gy = if i + 1 < rows {
                u[idx + cols] - u[idx]
            } else {
                0.0
            };
            total += gx.hypot(gy);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(rows: usize, cols: usize, v: &[f64]) -> ImageGrid {
        ImageGrid::new(rows, cols, v.to_vec()).unwrap()
    }

    #[test]
    fn grad_of_2x2() {
        let g = grad(&grid(2, 2, &[0.0, 1.0, 2.0, 3.0]));
        assert_eq!(g.px.as_slice(), &[1.0, 0.0, 1.0, 0.0]);
        assert_eq!(g.py.as_slice(), &[2.0, 2.0, 0.0, 0.0]);
    }

    #[test]
    fn grad_of_constant_vanishes() {
        let g = grad(&ImageGrid::filled(5, 4, 17.0));
        assert!(g
            .px
            .as_slice()
            .iter()
            .chain(g.py.as_slice())
            .all(|&v| v == 0.0));
        assert_eq!(tv(&ImageGrid::filled(5, 4, 17.0)), 0.0);
    }

    #[test]
    fn vertical_edge_only_on_edge_column() {
        let u = ImageGrid::from_fn(6, 8, |_, j| if j < 4 { 0.0 } else { 255.0 });
        let g = grad(&u);
        for i in 0..6 {
            for j in 0..8 {
                let expect = if j == 3 { 255.0 } else { 0.0 };
                assert_eq!(g.px.get(i, j), expect);
                assert_eq!(g.py.get(i, j), 0.0);
            }
        }
    }

    #[test]
    fn tv_of_2x2() {
        let t = tv(&grid(2, 2, &[0.0, 1.0, 2.0, 3.0]));
        assert!((t - (5f64.sqrt() + 3.0)).abs() < 1e-15);
    }

    #[test]
    fn div_of_spike_gradient_is_laplacian() {
        let mut spike = ImageGrid::zeros(3, 3);
        spike.as_mut_slice()[4] = 1.0;
        let lap = div(&grad(&spike));
        // 5-point Laplacian of a centered unit spike.
        assert_eq!(
            lap.as_slice(),
            &[0.0, 1.0, 0.0, 1.0, -4.0, 1.0, 0.0, 1.0, 0.0]
        );
    }

    #[test]
    fn div_of_zero_field() {
        let d = div(&GradientField::zeros(3, 4));
        assert!(d.as_slice().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(ImageGrid::new(1, 4, vec![0.0; 4]).is_err());
        assert!(ImageGrid::new(2, 2, vec![0.0; 3]).is_err());
        assert!(ImageGrid::new(2, 2, vec![0.0, 1.0, f64::NAN, 0.0]).is_err());
    }
}
