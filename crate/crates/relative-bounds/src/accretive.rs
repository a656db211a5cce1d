//! Accretivity checks and the resolvent inequality they imply.

use crate::error::{BoundsError, Result};
use operator_core::{eig, OperatorRep};
use serde::Serialize;

pub const ACCRETIVITY_TOL_FACTOR: f64 = 1e-10;

#[derive(Clone, Debug, Serialize)]
pub struct AccretivityReport {
    /// Smallest eigenvalue of the Hermitian part `(M + M*)/2`.
    pub min_real_part: f64,
    pub tol: f64,
    pub is_accretive: bool,
}

/// Numerical-range accretivity: `Re <Mx, x> >= 0` iff the Hermitian part is
/// positive semidefinite.
pub fn accretivity_check(m: &OperatorRep) -> Result<AccretivityReport> {
    let herm = m.matrix().hermitian_part();
    let (vals, _) = eig::hermitian_eig(&herm)?;
    let min_real_part = vals.first().copied().unwrap_or(0.0);
    let tol = ACCRETIVITY_TOL_FACTOR * m.operator_norm().max(1.0);
    Ok(AccretivityReport {
        min_real_part,
        tol,
        is_accretive: min_real_part >= -tol,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolventGapReport {
    pub lambda: f64,
    /// Smallest eigenvalue of `(A* + l)*(A* + l) - A A* - l^2 I`.
    pub min_gap: f64,
    pub tol: f64,
    pub pass: bool,
}

/// Certifies `||(A* + l) x||^2 >= ||A* x||^2 + l^2 ||x||^2` uniformly, which
/// for accretive `A*` bounds the shifted resolvent by `1/l`. Errors with
/// `NotAccretive` when the precondition fails.
pub fn accretive_resolvent_inequality(a: &OperatorRep, lambda: f64) -> Result<ResolventGapReport> {
    let astar = a.adjoint();
    let acc = accretivity_check(&astar)?;
    if !acc.is_accretive {
        return Err(BoundsError::NotAccretive {
            min_real_part: acc.min_real_part,
            tol: acc.tol,
        });
    }
    let shifted = astar.shift(operator_core::c64(-lambda, 0.0))?; // A* + l
    let gap = shifted
        .adjoint()
        .compose(&shifted)?
        .sub(&a.compose(&astar)?)?
        .sub(&OperatorRep::identity(a.domain().clone()).scale(operator_core::c64(lambda * lambda, 0.0)))?;
    let (vals, _) = eig::hermitian_eig(&gap.matrix().hermitian_part())?;
    let min_gap = vals.first().copied().unwrap_or(0.0);
    let tol = ACCRETIVITY_TOL_FACTOR * (a.operator_norm() + lambda).powi(2).max(1.0);
    Ok(ResolventGapReport {
        lambda,
        min_gap,
        tol,
        pass: min_gap >= -tol,
    })
}
