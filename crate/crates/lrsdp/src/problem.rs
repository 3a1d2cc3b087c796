//! The abstract biconvex quadratic problem the solver operates on, plus the
//! factor-pair iterate and the dense objective view used by the oracle.

use crate::error::{Error, Result};
use crate::linalg::{frobenius_dist_sq, DenseFactor, DenseSymmetric};

/// A problem min f(X, Y) whose restrictions to either factor are convex
/// quadratics. `f` is symmetric in its two arguments and excludes the
/// penalty coupling term; the solver adds that itself.
///
/// Gradients and quadratic forms must accept any pair of factors with
/// matching shapes, not just the configured rank: the exact line-search
/// machinery probes them with stacked factors of twice the width.
pub trait BiconvexQuadraticProblem: Sync {
    /// (n, r): number of points and configured factorization rank.
    fn dims(&self) -> (usize, usize);

    /// f(X, Y), excluding the penalty term.
    fn objective(&self, x: &DenseFactor, y: &DenseFactor) -> f64;

    /// Partial gradient of f in the first factor.
    fn grad_x(&self, x: &DenseFactor, y: &DenseFactor) -> DenseFactor;

    /// Partial gradient of f in the second factor.
    fn grad_y(&self, x: &DenseFactor, y: &DenseFactor) -> DenseFactor;

    /// Quadratic form of the X-Hessian of f at fixed `y`, evaluated on the
    /// direction `d`. Nonnegative for every direction.
    fn quad_form_x(&self, d: &DenseFactor, y: &DenseFactor) -> f64;

    /// Quadratic form of the Y-Hessian of f at fixed `x`.
    fn quad_form_y(&self, x: &DenseFactor, d: &DenseFactor) -> f64;

    /// Upper estimate of the largest eigenvalue of the X-Hessian at `y`.
    fn lipschitz_x(&self, y: &DenseFactor) -> f64;

    /// Upper estimate of the largest eigenvalue of the Y-Hessian at `x`.
    fn lipschitz_y(&self, x: &DenseFactor) -> f64;
}

/// A problem that can additionally be evaluated on a dense semidefinite
/// variable directly. Only sensible at small scale; the projected-gradient
/// oracle consumes this view.
pub trait DenseSdpObjective {
    fn dim(&self) -> usize;
    /// The underlying convex objective evaluated at Z.
    fn eval_dense(&self, z: &DenseSymmetric) -> f64;
    /// Gradient with respect to Z.
    fn grad_dense(&self, z: &DenseSymmetric) -> DenseSymmetric;
}

/// The two factor matrices being optimized. Their product is the learned
/// semidefinite variable.
#[derive(Debug, Clone)]
pub struct FactorPair {
    pub x: DenseFactor,
    pub y: DenseFactor,
}

impl FactorPair {
    pub fn new(x: DenseFactor, y: DenseFactor) -> Result<Self> {
        if x.shape() != y.shape() {
            return Err(Error::ShapeMismatch {
                expected: format!("{}x{}", x.rows(), x.cols()),
                got: format!("{}x{}", y.rows(), y.cols()),
            });
        }
        Ok(Self { x, y })
    }

    /// Squared Frobenius distance between the factors (the penalty residual).
    pub fn residual(&self) -> f64 {
        frobenius_dist_sq(&self.x, &self.y).expect("factor pair shapes match")
    }

    /// Penalty residual relative to the squared norm of X.
    pub fn relative_residual(&self) -> f64 {
        let nx = self.x.frobenius_norm_sq();
        if nx == 0.0 {
            self.residual()
        } else {
            self.residual() / nx
        }
    }

    /// The learned variable Z = Y Y^T. The X factor is exposed too; at a
    /// stationary point with the penalty bound satisfied the two coincide.
    pub fn gram_y(&self) -> DenseSymmetric {
        self.y.gram()
    }

    pub fn gram_x(&self) -> DenseSymmetric {
        self.x.gram()
    }
}
