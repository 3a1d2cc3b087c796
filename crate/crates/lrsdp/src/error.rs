use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },

    #[error("matrix is not symmetric at ({i}, {j}): {a} vs {b}")]
    NotSymmetric { i: usize, j: usize, a: f64, b: f64 },

    #[error("index ({i}, {j}) out of bounds for dimension {dim}")]
    IndexOutOfBounds { i: usize, j: usize, dim: usize },

    #[error("non-finite value encountered in {context}")]
    NonFinite { context: &'static str },

    #[error("power iteration did not converge within {iters} iterations (best estimate {estimate})")]
    NoConvergence { iters: usize, estimate: f64 },

    #[error("eigendecomposition failed: {0}")]
    Eigen(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("smoothness estimate {l} is below the convexity estimate {sigma}")]
    SmoothnessBelowConvexity { l: f64, sigma: f64 },

    #[error("solver diverged: objective became non-finite at iteration {iter}")]
    Diverged { iter: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("not enough distinct pairs: requested {requested}, available {available}")]
    InsufficientPairs { requested: usize, available: usize },

    #[error("constraint pair ({i}, {j}) carries conflicting targets {a} and {b}")]
    ConflictingTargets { i: usize, j: usize, a: f64, b: f64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
