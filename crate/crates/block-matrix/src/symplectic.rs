//! The unit symplectic operator, the direct `JH = (JH)*` check, and the
//! range criterion for symplectic self-adjointness.

use crate::error::Result;
use crate::hamiltonian::HamiltonianOp;
use operator_core::{c64, BasisTag, CMat, OperatorRep};
use serde::Serialize;

/// Dense `[[0, I], [-I, 0]]` on `tag x tag`. Satisfies `J* = J^{-1} = -J`.
pub fn unit_symplectic(tag: &BasisTag) -> OperatorRep {
    let d = tag.dim();
    let id = CMat::identity(d);
    let zero = CMat::zeros(d, d);
    let mat = CMat::from_blocks(&zero, &id, &id.scale(c64(-1.0, 0.0)), &zero);
    let prod = tag.doubled();
    OperatorRep::new(mat, prod.clone(), prod, d.max(1)).expect("J dims consistent")
}

/// Result of the entrywise `JH = (JH)*` check.
#[derive(Clone, Debug, Serialize)]
pub struct DirectReport {
    /// `||JH - (JH)*||_F` (absolute).
    pub defect_abs: f64,
    /// `||JH - (JH)*||_F / max(||JH||_F, 1)`.
    pub deviation: f64,
    pub tol: f64,
    pub pass: bool,
}

/// Deviation of `JH` from its own adjoint, relative to `||JH||_F`.
pub fn symplectic_selfadjoint_direct(h: &HamiltonianOp) -> DirectReport {
    let j = unit_symplectic(h.space());
    let jh = j.compose(&h.dense()).expect("J and H share the doubled tag");
    let defect = jh.matrix().hermitian_defect();
    let scale = jh.frobenius_norm().max(1.0);
    let deviation = defect / scale;
    DirectReport {
        defect_abs: defect,
        deviation,
        tol: h.tol(),
        pass: deviation <= h.tol(),
    }
}

/// Result of the surjectivity-margin check on `H +- iJ`.
#[derive(Clone, Debug, Serialize)]
pub struct RangeReport {
    /// Smallest singular value of `H + iJ`.
    pub margin_plus: f64,
    /// Smallest singular value of `H - iJ`.
    pub margin_minus: f64,
    /// Operator norm of the dense `H`.
    pub h_norm: f64,
    pub tol: f64,
    pub pass: bool,
}

/// Surjectivity of `H +- iJ` certified by singular-value margins. In finite
/// dimensions the outcome must agree with [`symplectic_selfadjoint_direct`]
/// whenever the Hamiltonian structure is intact.
pub fn range_criterion(h: &HamiltonianOp) -> Result<RangeReport> {
    let dense = h.dense();
    let j = unit_symplectic(h.space());
    let i_j = j.scale(c64(0.0, 1.0));
    let plus = dense.add(&i_j)?;
    let minus = dense.sub(&i_j)?;
    let margin_plus = plus.smallest_singular_value();
    let margin_minus = minus.smallest_singular_value();
    let h_norm = dense.operator_norm();
    let threshold = h.tol() * h_norm.max(1.0);
    Ok(RangeReport {
        margin_plus,
        margin_minus,
        h_norm,
        tol: h.tol(),
        pass: margin_plus > threshold && margin_minus > threshold,
    })
}
