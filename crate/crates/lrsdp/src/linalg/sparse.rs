//! Sparse symmetric matrices in coordinate form.

use crate::error::{Error, Result};
use crate::linalg::{DenseFactor, DenseSymmetric};

/// Sparse symmetric matrix. Every stored entry (i, j, w) has its mirror
/// (j, i, w) stored as well; the constructor enforces this. Entries are kept
/// sorted by (row, col) with duplicates coalesced, so products are
/// deterministic.
#[derive(Debug, Clone)]
pub struct SparseSymmetric {
    dim: usize,
    entries: Vec<(usize, usize, f64)>,
}

impl SparseSymmetric {
    /// Builds from a coordinate list that must already be symmetric:
    /// after coalescing duplicates, each (i, j, w) needs a matching (j, i, w).
    pub fn from_entries(dim: usize, entries: Vec<(usize, usize, f64)>) -> Result<Self> {
        let mut entries = entries;
        for &(i, j, _) in &entries {
            if i >= dim || j >= dim {
                return Err(Error::IndexOutOfBounds { i, j, dim });
            }
        }
        entries.sort_by_key(|&(i, j, _)| (i, j));
        // coalesce duplicates
        let mut coalesced: Vec<(usize, usize, f64)> = Vec::with_capacity(entries.len());
        for (i, j, w) in entries {
            if !w.is_finite() {
                return Err(Error::NonFinite { context: "sparse entries" });
            }
            match coalesced.last_mut() {
                Some(last) if last.0 == i && last.1 == j => last.2 += w,
                _ => coalesced.push((i, j, w)),
            }
        }
        coalesced.retain(|&(_, _, w)| w != 0.0);
        // symmetry check against the mirror entry
        for &(i, j, w) in &coalesced {
            if i == j {
                continue;
            }
            let mirror = coalesced
                .binary_search_by_key(&(j, i), |&(a, b, _)| (a, b))
                .map(|k| coalesced[k].2);
            match mirror {
                Ok(m) if m == w => {}
                Ok(m) => return Err(Error::NotSymmetric { i, j, a: w, b: m }),
                Err(_) => return Err(Error::NotSymmetric { i, j, a: w, b: 0.0 }),
            }
        }
        Ok(Self { dim, entries: coalesced })
    }

    /// Builds from the upper (or lower) triangle plus diagonal; mirror entries
    /// are added automatically.
    pub fn from_triangle(dim: usize, triangle: Vec<(usize, usize, f64)>) -> Result<Self> {
        let mut entries = Vec::with_capacity(triangle.len() * 2);
        for (i, j, w) in triangle {
            entries.push((i, j, w));
            if i != j {
                entries.push((j, i, w));
            }
        }
        Self::from_entries(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, usize, f64)] {
        &self.entries
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.dim);
        let mut y = vec![0.0; self.dim];
        for &(i, j, w) in &self.entries {
            y[i] += w * x[j];
        }
        y
    }

    /// self * m for a dense n×r factor, O(nnz · r).
    pub fn mul_factor(&self, m: &DenseFactor) -> Result<DenseFactor> {
        if m.rows() != self.dim {
            return Err(Error::ShapeMismatch {
                expected: format!("{} rows", self.dim),
                got: format!("{} rows", m.rows()),
            });
        }
        let mut out = DenseFactor::zeros(self.dim, m.cols());
        for &(i, j, w) in &self.entries {
            let src = m.row(j).to_vec();
            let dst = out.row_mut(i);
            for (d, s) in dst.iter_mut().zip(src) {
                *d += w * s;
            }
        }
        Ok(out)
    }

    /// <self, m n^T>-style trace term: tr(x^T self y) = sum_ij self_ij <x_i, y_j> ... computed
    /// as sum over stored entries of w * <x_row_i, y_row_j>.
    pub fn bilinear(&self, x: &DenseFactor, y: &DenseFactor) -> f64 {
        debug_assert_eq!(x.rows(), self.dim);
        debug_assert_eq!(y.rows(), self.dim);
        self.entries
            .iter()
            .map(|&(i, j, w)| w * x.row_dot(i, y, j))
            .sum()
    }

    pub fn to_dense(&self) -> DenseSymmetric {
        let mut m = DenseSymmetric::zeros(self.dim);
        for &(i, j, w) in &self.entries {
            // both orders are stored, so plain sets suffice
            if i <= j {
                m.set_sym(i, j, w);
            }
        }
        m
    }
}
