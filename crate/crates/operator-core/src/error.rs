//! Error type shared by all operator-core routines.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("basis mismatch: {left} is not compatible with {right}")]
    BasisMismatch { left: String, right: String },

    #[error("dimension error: expected {expected}, got {got}")]
    DimensionError { expected: String, got: String },

    #[error("matrix is not Hermitian: relative defect {defect:.3e} exceeds {tol:.3e}")]
    NotHermitian { defect: f64, tol: f64 },

    #[error("{algorithm} failed to converge after {iterations} iterations (off-diagonal residual {residual:.3e})")]
    ConvergenceFailure {
        algorithm: &'static str,
        iterations: usize,
        residual: f64,
    },

    #[error("matrix is numerically singular (pivot magnitude {pivot:.3e})")]
    Singular { pivot: f64 },

    #[error("parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CoreError>;
