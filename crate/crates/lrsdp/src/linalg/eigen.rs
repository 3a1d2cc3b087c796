//! Cyclic Jacobi eigendecomposition for small dense symmetric matrices, and
//! the PSD projection built on it. Sized for oracle and test instances, not
//! for solve-scale matrices.

use crate::error::{Error, Result};
use crate::linalg::DenseSymmetric;

const MAX_SWEEPS: usize = 100;
const OFF_TOL: f64 = 1e-13;

/// Eigendecomposition of a symmetric matrix. `values[k]` pairs with the
/// eigenvector stored in column `k` of `vectors` (row-major n×n).
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<f64>,
    dim: usize,
}

impl SymmetricEigen {
    pub fn vector_component(&self, row: usize, k: usize) -> f64 {
        self.vectors[row * self.dim + k]
    }
}

/// Cyclic Jacobi rotations until the off-diagonal mass is negligible.
pub fn symmetric_eigen(m: &DenseSymmetric) -> Result<SymmetricEigen> {
    if !m.is_finite() {
        return Err(Error::Eigen("non-finite input".into()));
    }
    let n = m.dim();
    let mut a: Vec<f64> = m.data().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let norm = m.frobenius_norm_sq().sqrt();
    if norm == 0.0 {
        return Ok(SymmetricEigen { values: vec![0.0; n], vectors: v, dim: n });
    }

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if (2.0 * off).sqrt() <= OFF_TOL * norm {
            let values = (0..n).map(|i| a[i * n + i]).collect();
            return Ok(SymmetricEigen { values, vectors: v, dim: n });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= OFF_TOL * norm / (n as f64) {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        if !a.iter().all(|x| x.is_finite()) {
            return Err(Error::Eigen("rotation produced non-finite values".into()));
        }
    }
    Err(Error::Eigen(format!("off-diagonal mass did not vanish in {MAX_SWEEPS} sweeps")))
}

/// Nearest PSD matrix in Frobenius norm: eigendecompose, clamp negative
/// eigenvalues to zero, recompose.
pub fn psd_project(m: &DenseSymmetric) -> Result<DenseSymmetric> {
    let eig = symmetric_eigen(m)?;
    let n = m.dim();
    let mut out = vec![0.0; n * n];
    for (k, &lam) in eig.values.iter().enumerate() {
        let lam = lam.max(0.0);
        if lam == 0.0 {
            continue;
        }
        for i in 0..n {
            let vik = eig.vector_component(i, k);
            if vik == 0.0 {
                continue;
            }
            for j in i..n {
                out[i * n + j] += lam * vik * eig.vector_component(j, k);
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            out[j * n + i] = out[i * n + j];
        }
    }
    DenseSymmetric::new(n, out)
}

/// Smallest and largest eigenvalues, for explicit Hessian bounds on small
/// instances.
pub fn eigen_extremes(m: &DenseSymmetric) -> Result<(f64, f64)> {
    let eig = symmetric_eigen(m)?;
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in &eig.values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};

    fn random_symmetric(n: usize, seed: u64) -> DenseSymmetric {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut m = DenseSymmetric::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set_sym(i, j, rng.gen_range(-1.0..1.0));
            }
        }
        m
    }

    #[test]
    fn eigen_reconstructs_input() {
        let m = random_symmetric(6, 3);
        let eig = symmetric_eigen(&m).unwrap();
        let n = m.dim();
        for i in 0..n {
            for j in 0..n {
                let mut rec = 0.0;
                for k in 0..n {
                    rec += eig.values[k] * eig.vector_component(i, k) * eig.vector_component(j, k);
                }
                assert_relative_eq!(rec, m.get(i, j), epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn projects_diagonal_by_clamping() {
        let m = DenseSymmetric::from_diag(&[2.0, -1.0]);
        let p = psd_project(&m).unwrap();
        assert_relative_eq!(p.get(0, 0), 2.0, epsilon = 1e-12);
        assert_relative_eq!(p.get(1, 1), 0.0, epsilon = 1e-12);
        assert_relative_eq!(p.get(0, 1), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn projection_is_identity_on_psd_input() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let data: Vec<f64> = (0..20).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let f = crate::linalg::DenseFactor::new(5, 4, data).unwrap();
        let psd = f.gram();
        let p = psd_project(&psd).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_relative_eq!(p.get(i, j), psd.get(i, j), epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn antidiagonal_projects_to_half_ones() {
        // eigenvalues of [[0,1],[1,0]] are +1 and -1; clamping -1 and
        // recomposing gives the all-0.5 matrix.
        let m = DenseSymmetric::new(2, vec![0.0, 1.0, 1.0, 0.0]).unwrap();
        let p = psd_project(&m).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_relative_eq!(p.get(i, j), 0.5, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn projection_output_is_psd_and_symmetric() {
        for seed in 0..5 {
            let m = random_symmetric(7, seed);
            let p = psd_project(&m).unwrap();
            for i in 0..7 {
                for j in 0..7 {
                    assert_eq!(p.get(i, j), p.get(j, i));
                }
            }
            let (lo, _) = eigen_extremes(&p).unwrap();
            assert!(lo >= -1e-10, "projected matrix has eigenvalue {lo}");
        }
    }

    #[test]
    fn non_finite_input_errors() {
        let mut m = DenseSymmetric::zeros(2);
        m.set_sym(0, 1, f64::NAN);
        assert!(matches!(psd_project(&m), Err(Error::Eigen(_))));
    }
}
