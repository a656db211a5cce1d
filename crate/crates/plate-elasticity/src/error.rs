//! Errors of the plate application layer.

use block_matrix::BlockError;
use operator_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PlateError {
    #[error("operator does not have the expected mode structure: off-pattern mass {mass:.3e} at ({row}, {col})")]
    StructureMismatch { mass: f64, row: usize, col: usize },

    #[error("{value} is not an eigenvalue of mode {mode} (nearest eigenvalue at distance {distance:.3e})")]
    NotAnEigenvalue {
        value: String,
        mode: usize,
        distance: f64,
    },

    #[error("polynomial degree {degree} exceeds the supported maximum {max}")]
    DegreeTooHigh { degree: usize, max: usize },

    #[error("quadrature did not reach the requested accuracy: estimated error {estimate:.3e} (tolerance {tol:.3e})")]
    QuadratureFailure { estimate: f64, tol: f64 },

    #[error("displacement reconstruction is ill-posed for mode {mode}: |sinh(kappa h)| = {denominator:.3e}")]
    IllPosed { mode: usize, denominator: f64 },

    #[error("parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },

    #[error(transparent)]
    Block(#[from] BlockError),

    #[error(transparent)]
    Core(#[from] CoreError),
}

pub type Result<T> = std::result::Result<T, PlateError>;
