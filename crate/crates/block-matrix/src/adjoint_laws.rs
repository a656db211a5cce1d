//! Finite-dimensional adjoint laws: `(ST)* = T* S*` and `(S + T)* = S* + T*`.
//!
//! These are exact identities for conjugate-transpose matrices; the checks
//! quantify rounding in the composed path and act as regression guards for
//! the operator algebra.

use crate::error::{BlockError, Result};
use operator_core::OperatorRep;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct AdjointLawReport {
    /// `||(ST)* - T* S*||_F / max(||S||_F ||T||_F, 1)`; `None` when the
    /// shapes do not compose.
    pub product_deviation: Option<f64>,
    /// `||(S+T)* - (S* + T*)||_F / max(||S||_F + ||T||_F, 1)`; `None` when
    /// the shapes differ.
    pub sum_deviation: Option<f64>,
    pub tol: f64,
    pub pass: bool,
}

pub const ADJOINT_LAW_TOL: f64 = 1e-13;

pub fn adjoint_law_checks(s: &OperatorRep, t: &OperatorRep) -> Result<AdjointLawReport> {
    let product_deviation = if t.codomain() == s.domain() {
        let lhs = s.compose(t)?.adjoint();
        let rhs = t.adjoint().compose(&s.adjoint())?;
        let scale = (s.frobenius_norm() * t.frobenius_norm()).max(1.0);
        Some(lhs.matrix().sub(rhs.matrix()).frobenius_norm() / scale)
    } else {
        None
    };
    let sum_deviation = if s.domain() == t.domain() && s.codomain() == t.codomain() {
        let lhs = s.add(t)?.adjoint();
        let rhs = s.adjoint().add(&t.adjoint())?;
        let scale = (s.frobenius_norm() + t.frobenius_norm()).max(1.0);
        Some(lhs.matrix().sub(rhs.matrix()).frobenius_norm() / scale)
    } else {
        None
    };
    if product_deviation.is_none() && sum_deviation.is_none() {
        return Err(BlockError::BasisMismatch {
            left: format!("S: {} -> {}", s.domain(), s.codomain()),
            right: format!("T: {} -> {}", t.domain(), t.codomain()),
        });
    }
    let pass = product_deviation.map_or(true, |d| d <= ADJOINT_LAW_TOL)
        && sum_deviation.map_or(true, |d| d <= ADJOINT_LAW_TOL);
    Ok(AdjointLawReport {
        product_deviation,
        sum_deviation,
        tol: ADJOINT_LAW_TOL,
        pass,
    })
}
