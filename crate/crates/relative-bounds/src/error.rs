//! Errors of the relative-bound estimators.

use block_matrix::BlockError;
use operator_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("lambda {lambda} lies in the spectrum at N = {n} (margin {margin:.3e})")]
    LambdaInSpectrum { lambda: String, n: usize, margin: f64 },

    #[error("operator is not accretive: min Re part {min_real_part:.3e} below -{tol:.3e}")]
    NotAccretive { min_real_part: f64, tol: f64 },

    #[error("family '{label}' is not nested: eigenvalue {value:.6e} at N = {n} has no match at N = {n_next} (distance {distance:.3e})")]
    NotNested {
        label: String,
        n: usize,
        n_next: usize,
        value: f64,
        distance: f64,
    },

    #[error("family '{label}' base operator is not Hermitian at N = {n} (defect {defect:.3e})")]
    NotHermitian { label: String, n: usize, defect: f64 },

    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),

    #[error("family '{label}' disagrees with the given blocks at truncation {n} (deviation {deviation:.3e})")]
    FamilyInconsistent { label: String, n: usize, deviation: f64 },

    #[error(transparent)]
    Block(#[from] BlockError),

    #[error(transparent)]
    Core(#[from] CoreError),
}

pub type Result<T> = std::result::Result<T, BoundsError>;
