//! Dense complex linear-algebra substrate for finite spectral truncations of
//! block operator matrices: basis-tagged operators, adjoints, spectral
//! decompositions, singular values, the matrix exponential, and Matrix Market
//! file exchange.
//!
//! Everything is immutable after construction and every operation is pure, so
//! values can be shared freely across threads.

pub mod basis;
pub mod eig;
pub mod error;
pub mod expm;
pub mod lu;
pub mod matrix;
pub mod mm;
pub mod rep;
pub mod svd;

pub use basis::BasisTag;
pub use error::{CoreError, Result};
pub use matrix::{c64, vec_dot, vec_norm, CMat};
pub use mm::{read_matrix_market, write_matrix_market};
pub use rep::{OperatorRep, SpectralDecomposition, DEFAULT_HERMITIAN_TOL, EIG_RESIDUAL_TOL};

pub use num_complex::Complex64;
