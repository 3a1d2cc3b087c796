//! Spectral-norm estimation by power iteration on the Gram operator.

use crate::error::{Error, Result};
use crate::linalg::{DenseFactor, SparseSymmetric};

/// Default relative tolerance. The penalty schedule only needs a loose
/// estimate, so this does not have to be tight.
pub const DEFAULT_TOL: f64 = 1e-6;
/// Default iteration cap.
pub const DEFAULT_MAX_ITERS: usize = 500;

/// Operators that can apply M^T M (equivalently M^2 for symmetric M) to a
/// vector of the iteration space. The largest singular value of M is the
/// square root of the dominant eigenvalue of that Gram operator.
pub trait GramOperator {
    /// Dimension of the iteration space.
    fn gram_dim(&self) -> usize;
    /// y = (M^T M) x, or (M M) x when M is symmetric.
    fn apply_gram(&self, x: &[f64]) -> Vec<f64>;
}

impl GramOperator for DenseFactor {
    fn gram_dim(&self) -> usize {
        self.rows().min(self.cols())
    }

    fn apply_gram(&self, x: &[f64]) -> Vec<f64> {
        let (n, r) = self.shape();
        if r <= n {
            // w = M x (n), y = M^T w (r)
            let mut w = vec![0.0; n];
            for i in 0..n {
                w[i] = self.row(i).iter().zip(x).map(|(a, b)| a * b).sum();
            }
            let mut y = vec![0.0; r];
            for i in 0..n {
                let wi = w[i];
                for (j, a) in self.row(i).iter().enumerate() {
                    y[j] += a * wi;
                }
            }
            y
        } else {
            // w = M^T x (r), y = M w (n)
            let mut w = vec![0.0; r];
            for i in 0..n {
                let xi = x[i];
                for (j, a) in self.row(i).iter().enumerate() {
                    w[j] += a * xi;
                }
            }
            let mut y = vec![0.0; n];
            for i in 0..n {
                y[i] = self.row(i).iter().zip(&w).map(|(a, b)| a * b).sum();
            }
            y
        }
    }
}

impl GramOperator for SparseSymmetric {
    fn gram_dim(&self) -> usize {
        self.dim()
    }

    fn apply_gram(&self, x: &[f64]) -> Vec<f64> {
        // M symmetric: M^T M = M^2. Squaring makes the dominant eigenvalue
        // |lambda|_max^2 even when the extreme eigenvalues tie in magnitude
        // with opposite signs.
        self.matvec(&self.matvec(x))
    }
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Deterministic start vector: normalized all-ones with a fixed tie-breaking
/// perturbation on index 0. Reproducible estimates keep solver traces
/// reproducible.
fn start_vector(dim: usize) -> Vec<f64> {
    let mut v = vec![1.0; dim];
    v[0] += 0.5;
    let s = norm(&v);
    v.iter_mut().for_each(|x| *x /= s);
    v
}

/// Largest singular value of `m` within relative tolerance `tol`, by power
/// iteration on the Gram operator. Errors with the best estimate when the
/// iteration cap is hit before the estimate settles.
pub fn spectral_norm<M: GramOperator>(m: &M, tol: f64, max_iters: usize) -> Result<f64> {
    if tol <= 0.0 {
        return Err(Error::InvalidParam("spectral_norm tol must be positive".into()));
    }
    let dim = m.gram_dim();
    let mut v = start_vector(dim);

    // If the start vector lies in the null space, fall back to basis vectors.
    let mut w = m.apply_gram(&v);
    let mut basis = 0usize;
    while norm(&w) == 0.0 && basis < dim {
        v = vec![0.0; dim];
        v[basis] = 1.0;
        w = m.apply_gram(&v);
        basis += 1;
    }
    if norm(&w) == 0.0 {
        return Ok(0.0); // zero operator
    }

    let mut sigma = f64::NAN;
    for _ in 0..max_iters {
        let lambda: f64 = w.iter().zip(&v).map(|(a, b)| a * b).sum();
        let new_sigma = lambda.max(0.0).sqrt();
        let wn = norm(&w);
        if wn == 0.0 {
            return Ok(0.0);
        }
        v = w.iter().map(|x| x / wn).collect();
        if sigma.is_finite() && (new_sigma - sigma).abs() <= tol * new_sigma.max(f64::MIN_POSITIVE) {
            return Ok(new_sigma);
        }
        sigma = new_sigma;
        w = m.apply_gram(&v);
    }
    Err(Error::NoConvergence { iters: max_iters, estimate: sigma })
}

/// `spectral_norm` with the default tolerance and iteration cap.
pub fn spectral_norm_default<M: GramOperator>(m: &M) -> Result<f64> {
    spectral_norm(m, DEFAULT_TOL, DEFAULT_MAX_ITERS)
}
