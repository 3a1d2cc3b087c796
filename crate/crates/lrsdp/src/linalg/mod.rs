//! Matrix primitives shared by the solver, the problems and the baselines:
//! dense factors, small dense symmetric matrices, sparse symmetric matrices,
//! spectral-norm estimation and PSD projection.
//!
//! Everything here is immutable after construction and safe to share across
//! threads; none of it aspires to be a general-purpose linear algebra
//! library.

mod dense;
mod eigen;
mod sparse;
mod spectral;

pub use dense::{frobenius_dist_sq, DenseFactor, DenseSymmetric, SYMMETRY_TOL};
pub use eigen::{eigen_extremes, psd_project, symmetric_eigen, SymmetricEigen};
pub use sparse::SparseSymmetric;
pub use spectral::{
    spectral_norm, spectral_norm_default, GramOperator, DEFAULT_MAX_ITERS, DEFAULT_TOL,
};
