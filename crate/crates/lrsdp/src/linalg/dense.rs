//! Dense row-major matrices: rectangular factors and small symmetric matrices.

use crate::error::{Error, Result};

/// Dense n×r matrix stored row-major; row `i` is the representation of point `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseFactor {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseFactor {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParam(format!(
                "factor dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                expected: format!("{rows}x{cols} ({} entries)", rows * cols),
                got: format!("{} entries", data.len()),
            });
        }
        if !data.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite { context: "dense factor entries" });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::ShapeMismatch {
                    expected: format!("row length {c}"),
                    got: format!("row length {}", row.len()),
                });
            }
            data.extend_from_slice(row);
        }
        Self::new(r, c, data)
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.data.iter().copied()
    }

    /// Inner product of rows `i` of `self` and `j` of `other`.
    #[inline]
    pub fn row_dot(&self, i: usize, other: &DenseFactor, j: usize) -> f64 {
        let a = self.row(i);
        let b = other.row(j);
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum()
    }

    pub fn dot(&self, other: &DenseFactor) -> f64 {
        debug_assert_eq!(self.shape(), other.shape());
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }

    pub fn scaled(&self, s: f64) -> DenseFactor {
        DenseFactor {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    /// self + s * other, shapes must match.
    pub fn add_scaled(&self, s: f64, other: &DenseFactor) -> Result<DenseFactor> {
        self.check_same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + s * b)
            .collect();
        Ok(DenseFactor { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &DenseFactor) -> Result<DenseFactor> {
        self.add_scaled(-1.0, other)
    }

    pub fn add(&self, other: &DenseFactor) -> Result<DenseFactor> {
        self.add_scaled(1.0, other)
    }

    /// Horizontal concatenation [self | other]; row counts must match.
    pub fn hstack(&self, other: &DenseFactor) -> Result<DenseFactor> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch {
                expected: format!("{} rows", self.rows),
                got: format!("{} rows", other.rows),
            });
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(DenseFactor { rows: self.rows, cols, data })
    }

    /// Gram matrix self * self^T as a dense symmetric matrix.
    pub fn gram(&self) -> DenseSymmetric {
        let n = self.rows;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = self.row_dot(i, self, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        DenseSymmetric { dim: n, data }
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub(crate) fn check_same_shape(&self, other: &DenseFactor) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                expected: format!("{}x{}", self.rows, self.cols),
                got: format!("{}x{}", other.rows, other.cols),
            });
        }
        Ok(())
    }
}

/// Squared Frobenius distance between two equally shaped factors.
pub fn frobenius_dist_sq(a: &DenseFactor, b: &DenseFactor) -> Result<f64> {
    a.check_same_shape(b)?;
    Ok(a.data
        .iter()
        .zip(&b.data)
        .map(|(x, y)| (x - y) * (x - y))
        .sum())
}

/// Dense symmetric matrix, full row-major storage. Only used at oracle and
/// desk scale; the solver itself never materializes n×n matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymmetric {
    dim: usize,
    data: Vec<f64>,
}

/// Symmetry tolerance accepted by the constructor.
pub const SYMMETRY_TOL: f64 = 1e-12;

impl DenseSymmetric {
    pub fn new(dim: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::ShapeMismatch {
                expected: format!("{dim}x{dim}"),
                got: format!("{} entries", data.len()),
            });
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                let a = data[i * dim + j];
                let b = data[j * dim + i];
                if (a - b).abs() > SYMMETRY_TOL * (1.0 + a.abs().max(b.abs())) {
                    return Err(Error::NotSymmetric { i, j, a, b });
                }
            }
        }
        Ok(Self { dim, data })
    }

    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![0.0; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1.0;
        }
        m
    }

    pub fn from_diag(diag: &[f64]) -> Self {
        let dim = diag.len();
        let mut m = Self::zeros(dim);
        for (i, &v) in diag.iter().enumerate() {
            m.data[i * dim + i] = v;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    /// Sets both (i, j) and (j, i).
    #[inline]
    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.dim + j] = v;
        self.data[j * self.dim + i] = v;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn add_scaled(&self, s: f64, other: &DenseSymmetric) -> Result<DenseSymmetric> {
        if self.dim != other.dim {
            return Err(Error::ShapeMismatch {
                expected: format!("{0}x{0}", self.dim),
                got: format!("{0}x{0}", other.dim),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + s * b)
            .collect();
        Ok(DenseSymmetric { dim: self.dim, data })
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum()
    }

    pub fn dot(&self, other: &DenseSymmetric) -> f64 {
        debug_assert_eq!(self.dim, other.dim);
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.dim);
        let mut y = vec![0.0; self.dim];
        for i in 0..self.dim {
            let row = &self.data[i * self.dim..(i + 1) * self.dim];
            y[i] = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        y
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn factor_rejects_bad_shapes() {
        assert!(DenseFactor::new(0, 1, vec![]).is_err());
        assert!(DenseFactor::new(2, 2, vec![1.0; 3]).is_err());
        assert!(DenseFactor::new(1, 2, vec![1.0, f64::NAN]).is_err());
    }

    #[test]
    fn frobenius_dist_identity_is_zero() {
        let a = DenseFactor::new(2, 2, vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(frobenius_dist_sq(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn frobenius_dist_single_entry() {
        let a = DenseFactor::new(2, 1, vec![1.0, 0.0]).unwrap();
        let b = DenseFactor::new(2, 1, vec![1.0, 1.0]).unwrap();
        assert_eq!(frobenius_dist_sq(&a, &b).unwrap(), 1.0);
    }

    #[test]
    fn frobenius_dist_matches_entrywise_sum() {
        // Brute-force oracle: direct summation over entries.
        let mut rng = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((rng >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        let a = DenseFactor::new(4, 3, (0..12).map(|_| next()).collect()).unwrap();
        let b = DenseFactor::new(4, 3, (0..12).map(|_| next()).collect()).unwrap();
        let mut expect = 0.0;
        for i in 0..4 {
            for j in 0..3 {
                let d = a.get(i, j) - b.get(i, j);
                expect += d * d;
            }
        }
        assert_relative_eq!(frobenius_dist_sq(&a, &b).unwrap(), expect, max_relative = 1e-15);
    }

    #[test]
    fn frobenius_dist_shape_mismatch_errors() {
        let a = DenseFactor::zeros(2, 2);
        let b = DenseFactor::zeros(2, 3);
        assert!(frobenius_dist_sq(&a, &b).is_err());
    }

    #[test]
    fn symmetric_rejects_asymmetry() {
        let data = vec![1.0, 2.0, 3.0, 4.0];
        assert!(DenseSymmetric::new(2, data).is_err());
    }

    #[test]
    fn hstack_concatenates_rows() {
        let a = DenseFactor::new(2, 1, vec![1.0, 2.0]).unwrap();
        let b = DenseFactor::new(2, 2, vec![3.0, 4.0, 5.0, 6.0]).unwrap();
        let c = a.hstack(&b).unwrap();
        assert_eq!(c.shape(), (2, 3));
        assert_eq!(c.row(0), &[1.0, 3.0, 4.0]);
        assert_eq!(c.row(1), &[2.0, 5.0, 6.0]);
    }

    #[test]
    fn gram_is_symmetric_psd_like() {
        let a = DenseFactor::new(3, 2, vec![1.0, 0.0, 0.5, -1.0, 2.0, 0.25]).unwrap();
        let g = a.gram();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(g.get(i, j), g.get(j, i));
            }
        }
        assert_relative_eq!(g.get(0, 1), 0.5, max_relative = 1e-15);
    }
}
