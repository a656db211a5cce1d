//! Errors for block-operator constructions and criteria.

use operator_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BlockError {
    #[error("basis mismatch: {left} is not compatible with {right}")]
    BasisMismatch { left: String, right: String },

    #[error("lambda {lambda} lies in the spectrum (resolvent margin {margin:.3e} below threshold {threshold:.3e})")]
    LambdaInSpectrum {
        lambda: String,
        margin: f64,
        threshold: f64,
    },

    #[error("block '{block}' is not Hermitian: relative defect {defect:.3e} exceeds {tol:.3e}")]
    NotHermitian {
        block: &'static str,
        defect: f64,
        tol: f64,
    },

    #[error(transparent)]
    Core(#[from] CoreError),
}

pub type Result<T> = std::result::Result<T, BlockError>;
