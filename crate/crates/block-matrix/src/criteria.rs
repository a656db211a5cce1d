//! Equivalent characterizations of symplectic self-adjointness through
//! shifted Schur complements, together with the factorizations of `JH` that
//! prove them.
//!
//! Diagonal-domain case (`D(H) = D(A) x D(A*)`): `H` is symplectic
//! self-adjoint iff
//!   `A* + l + C (A - l)^{-1} B  =  (A + lb + B (A* - lb)^{-1} C)*`,
//! equivalently with the roles of the two sides swapped, for some (hence any)
//! `l` in the resolvent set of `A` (`lb` is the conjugate of `l`).
//!
//! Off-diagonal-domain case (`D(H) = D(C) x D(B)`): the same statement with
//! the resolvents taken in `B` respectively `C`:
//!   `C + l + A* (B - l)^{-1} A = (C + lb + A* (B - lb)^{-1} A)*` and
//!   `B + l + A (C - l)^{-1} A* = (B + lb + A (C - lb)^{-1} A*)*`.
//!
//! At finite truncation every structurally valid Hamiltonian satisfies these
//! identities up to rounding; the deviations reported here are the numerical
//! witnesses.

use crate::error::Result;
use crate::hamiltonian::HamiltonianOp;
use crate::schur::{resolvent_inverse, FactorizationKind, FactorizationResult};
use crate::block::BlockOp;
use operator_core::{c64, Complex64, OperatorRep};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub criterion: &'static str,
    pub lambda: Complex64,
    /// Deviation in the first adjoint identity.
    pub deviation_2: f64,
    /// Deviation in the mirrored identity.
    pub deviation_3: f64,
    pub tol: f64,
    pub pass: bool,
}

fn relative_defect(lhs: &OperatorRep, rhs: &OperatorRep) -> f64 {
    let scale = lhs
        .frobenius_norm()
        .max(rhs.frobenius_norm())
        .max(1.0);
    lhs.matrix().sub(rhs.matrix()).frobenius_norm() / scale
}

/// Criterion for the diagonal domain shape, evaluated at `lambda` (which must
/// have a resolvent margin for `A`).
pub fn diag_domain_criterion(h: &HamiltonianOp, lambda: Complex64) -> Result<CriterionReport> {
    let a = h.a();
    let b = h.b();
    let c = h.c();
    let lbar = lambda.conj();
    let id = OperatorRep::identity(h.space().clone());

    let (ra, _) = resolvent_inverse(a, lambda)?; // (A - l)^{-1}
    let (ras, _) = resolvent_inverse(&a.adjoint(), lbar)?; // (A* - lb)^{-1}

    // side2_lhs = A* + l + C (A - l)^{-1} B
    let side2_lhs = a
        .adjoint()
        .add(&id.scale(lambda))?
        .add(&c.compose(&ra)?.compose(b)?)?;
    // side2_rhs = (A + lb + B (A* - lb)^{-1} C)*
    let inner3 = a
        .add(&id.scale(lbar))?
        .add(&b.compose(&ras)?.compose(c)?)?;
    let side2_rhs = inner3.adjoint();
    let deviation_2 = relative_defect(&side2_lhs, &side2_rhs);

    // mirrored identity: side3_lhs = A + lb + B (A* - lb)^{-1} C, rhs = (side2_lhs)*
    let side3_rhs = side2_lhs.adjoint();
    let deviation_3 = relative_defect(&inner3, &side3_rhs);

    let tol = h.tol();
    Ok(CriterionReport {
        criterion: "diag_domain",
        lambda,
        deviation_2,
        deviation_3,
        tol,
        pass: deviation_2 <= tol && deviation_3 <= tol,
    })
}

/// Criterion for the off-diagonal domain shape: `deviation_2` uses the
/// resolvent of `B` at `lambda`, `deviation_3` the resolvent of `C`.
pub fn offdiag_domain_criterion(h: &HamiltonianOp, lambda: Complex64) -> Result<CriterionReport> {
    let a = h.a();
    let b = h.b();
    let c = h.c();
    let lbar = lambda.conj();
    let id = OperatorRep::identity(h.space().clone());

    // C + l + A* (B - l)^{-1} A  vs  (C + lb + A* (B - lb)^{-1} A)*
    let (rb, _) = resolvent_inverse(b, lambda)?;
    let (rb_bar, _) = resolvent_inverse(b, lbar)?;
    let lhs2 = c
        .add(&id.scale(lambda))?
        .add(&a.adjoint().compose(&rb)?.compose(a)?)?;
    let rhs2 = c
        .add(&id.scale(lbar))?
        .add(&a.adjoint().compose(&rb_bar)?.compose(a)?)?
        .adjoint();
    let deviation_2 = relative_defect(&lhs2, &rhs2);

    // B + l + A (C - l)^{-1} A*  vs  (B + lb + A (C - lb)^{-1} A*)*
    let (rc, _) = resolvent_inverse(c, lambda)?;
    let (rc_bar, _) = resolvent_inverse(c, lbar)?;
    let lhs3 = b
        .add(&id.scale(lambda))?
        .add(&a.compose(&rc)?.compose(&a.adjoint())?)?;
    let rhs3 = b
        .add(&id.scale(lbar))?
        .add(&a.compose(&rc_bar)?.compose(&a.adjoint())?)?
        .adjoint();
    let deviation_3 = relative_defect(&lhs3, &rhs3);

    let tol = h.tol();
    Ok(CriterionReport {
        criterion: "offdiag_domain",
        lambda,
        deviation_2,
        deviation_3,
        tol,
        pass: deviation_2 <= tol && deviation_3 <= tol,
    })
}

/// The two factorizations of the symplectic products `JH - lambda J` and
/// `JH + conj(lambda) J` behind the diagonal-domain criterion.
///
/// With `S2(l) = -A* - l - C (A - l)^{-1} B` and
/// `S1(-lb) = A + lb + B (A* - lb)^{-1} C`:
///
/// `JH - l J = [[I, -C(A-l)^{-1}], [0, I]] . diag(-S2(l), -A + l) .
///             [[0, -I], [I, (A-l)^{-1} B]]`
/// `JH + lb J = [[0, I], [-I, B(A*-lb)^{-1}]] . diag(S1(-lb), -A* + lb) .
///              [[I, 0], [-(A*-lb)^{-1} C, I]]`
pub struct JhFactorizationPair {
    pub minus: FactorizationResult,
    pub plus: FactorizationResult,
}

pub fn jh_factorization(h: &HamiltonianOp, lambda: Complex64) -> Result<JhFactorizationPair> {
    let a = h.a();
    let b = h.b();
    let c = h.c();
    let lbar = lambda.conj();
    let x = h.space().clone();
    let id = OperatorRep::identity(x.clone());
    let zero = OperatorRep::zeros(x.clone(), x.clone());
    let neg = |m: &OperatorRep| m.scale(c64(-1.0, 0.0));

    let (ra, _) = resolvent_inverse(a, lambda)?; // (A - l)^{-1}
    let (ras, _) = resolvent_inverse(&a.adjoint(), lbar)?; // (A* - lb)^{-1}

    let j = crate::symplectic::unit_symplectic(&x);
    let jh = j.compose(&h.dense())?;
    let scale = jh.frobenius_norm();

    // JH - lambda J
    let target_minus = jh.sub(&j.scale(lambda))?;
    let c_ra = c.compose(&ra)?;
    let minus_left = BlockOp::new(id.clone(), neg(&c_ra), zero.clone(), id.clone())?;
    // -S2(l) = A* + l + C (A - l)^{-1} B
    let neg_s2 = a
        .adjoint()
        .add(&id.scale(lambda))?
        .add(&c_ra.compose(b)?)?;
    let neg_a_shift = neg(a).add(&id.scale(lambda))?; // -A + l
    let minus_middle = BlockOp::new(neg_s2, zero.clone(), zero.clone(), neg_a_shift)?;
    let ra_b = ra.compose(b)?;
    let minus_right = BlockOp::new(zero.clone(), neg(&id), id.clone(), ra_b)?;
    let minus_residual = {
        let prod = minus_left
            .dense()
            .compose(&minus_middle.dense())?
            .compose(&minus_right.dense())?;
        prod.matrix().sub(target_minus.matrix()).frobenius_norm() / scale.max(1.0)
    };

    // JH + conj(lambda) J
    let target_plus = jh.add(&j.scale(lbar))?;
    let b_ras = b.compose(&ras)?;
    let plus_left = BlockOp::new(zero.clone(), id.clone(), neg(&id), b_ras)?;
    // S1(-lb) = A + lb + B (A* - lb)^{-1} C
    let s1 = a
        .add(&id.scale(lbar))?
        .add(&b.compose(&ras)?.compose(c)?)?;
    let neg_as_shift = neg(&a.adjoint()).add(&id.scale(lbar))?; // -A* + lb
    let plus_middle = BlockOp::new(s1, zero.clone(), zero.clone(), neg_as_shift)?;
    let ras_c = ras.compose(c)?;
    let plus_right = BlockOp::new(id.clone(), zero.clone(), neg(&ras_c), id.clone())?;
    let plus_residual = {
        let prod = plus_left
            .dense()
            .compose(&plus_middle.dense())?
            .compose(&plus_right.dense())?;
        prod.matrix().sub(target_plus.matrix()).frobenius_norm() / scale.max(1.0)
    };

    Ok(JhFactorizationPair {
        minus: FactorizationResult {
            kind: FactorizationKind::JhMinusLambdaJ,
            lambda,
            left: minus_left,
            middle: minus_middle,
            right: minus_right,
            residual: minus_residual,
        },
        plus: FactorizationResult {
            kind: FactorizationKind::JhPlusLambdaBarJ,
            lambda,
            left: plus_left,
            middle: plus_middle,
            right: plus_right,
            residual: plus_residual,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use operator_core::CMat;

    fn scalar_h(a: f64, b: f64, c: f64) -> HamiltonianOp {
        let one = |v: f64| OperatorRep::from_matrix(CMat::diag(&[c64(v, 0.0)]));
        HamiltonianOp::with_default_tol(one(a), one(b), one(c)).unwrap()
    }

    #[test]
    fn scalar_diag_domain_deviation_vanishes() {
        // a=2, b=1, c=1, lambda=i: both sides equal 2 + i + 1/(2 - i)
        let h = scalar_h(2.0, 1.0, 1.0);
        let rep = diag_domain_criterion(&h, c64(0.0, 1.0)).unwrap();
        assert!(rep.deviation_2 <= 1e-15, "{}", rep.deviation_2);
        assert!(rep.deviation_3 <= 1e-15);
        assert!(rep.pass);
    }

    #[test]
    fn decoupled_diag_domain_reduces_to_shifts() {
        // b = c = 0: both sides are A* + l; deviation identically 0
        let one = |v: f64| OperatorRep::from_matrix(CMat::diag(&[c64(v, 0.0)]));
        let zero = OperatorRep::zeros(
            operator_core::BasisTag::Abstract(1),
            operator_core::BasisTag::Abstract(1),
        );
        let h = HamiltonianOp::with_default_tol(one(2.0), zero.clone(), zero).unwrap();
        let rep = diag_domain_criterion(&h, c64(0.0, 1.0)).unwrap();
        assert_eq!(rep.deviation_2, 0.0);
        assert_eq!(rep.deviation_3, 0.0);
    }

    #[test]
    fn scalar_offdiag_domain_deviation_vanishes() {
        // a=1, b=2, c=3, lambda=i
        let h = scalar_h(1.0, 2.0, 3.0);
        let rep = offdiag_domain_criterion(&h, c64(0.0, 1.0)).unwrap();
        assert!(rep.deviation_2 <= 1e-15, "{}", rep.deviation_2);
        assert!(rep.deviation_3 <= 1e-15, "{}", rep.deviation_3);
    }

    #[test]
    fn offdiag_zero_a_real_lambda() {
        // a = 0: sides reduce to C + l vs (C + lb)* = C + l
        let one = |v: f64| OperatorRep::from_matrix(CMat::diag(&[c64(v, 0.0)]));
        let zero = OperatorRep::zeros(
            operator_core::BasisTag::Abstract(1),
            operator_core::BasisTag::Abstract(1),
        );
        let h = HamiltonianOp::with_default_tol(zero, one(2.0), one(3.0)).unwrap();
        let rep = offdiag_domain_criterion(&h, c64(0.5, 0.0)).unwrap();
        assert_eq!(rep.deviation_2, 0.0);
        assert_eq!(rep.deviation_3, 0.0);
    }

    #[test]
    fn jh_factorization_decoupled_middles() {
        // b = c = 0: the exposed middle factors collapse to the pure shifts
        // diag(A* + l, l - A) and diag(A + lb, lb - A*)
        let one = |v: f64| OperatorRep::from_matrix(CMat::diag(&[c64(v, 0.0)]));
        let zero = OperatorRep::zeros(
            operator_core::BasisTag::Abstract(1),
            operator_core::BasisTag::Abstract(1),
        );
        let h = HamiltonianOp::with_default_tol(one(2.0), zero.clone(), zero).unwrap();
        let lam = c64(0.0, 1.0);
        let pair = jh_factorization(&h, lam).unwrap();
        assert!((pair.minus.middle.a().matrix()[(0, 0)] - c64(2.0, 1.0)).norm() < 1e-15);
        assert!((pair.minus.middle.d().matrix()[(0, 0)] - c64(-2.0, 1.0)).norm() < 1e-15);
        assert!((pair.plus.middle.a().matrix()[(0, 0)] - c64(2.0, -1.0)).norm() < 1e-15);
        assert!((pair.plus.middle.d().matrix()[(0, 0)] - c64(-2.0, -1.0)).norm() < 1e-15);
        assert!(pair.minus.residual < 1e-15 && pair.plus.residual < 1e-15);
    }

    #[test]
    fn jh_factorizations_reproduce_targets() {
        // scalar case a=1, b=1, c=0
        let h = scalar_h(1.0, 1.0, 0.0);
        let pair = jh_factorization(&h, c64(0.0, 1.0)).unwrap();
        assert!(pair.minus.residual < 1e-14, "{}", pair.minus.residual);
        assert!(pair.plus.residual < 1e-14, "{}", pair.plus.residual);
        // middle of the minus factorization exposes -S2(l) = A* + l + C(A-l)^{-1}B = 1 + i
        let m00 = pair.minus.middle.a().matrix()[(0, 0)];
        assert!((m00 - c64(1.0, 1.0)).norm() < 1e-14);
        // middle of the plus factorization exposes S1(-lb) = A + lb + B(A*-lb)^{-1}C = 1 - i
        let p00 = pair.plus.middle.a().matrix()[(0, 0)];
        assert!((p00 - c64(1.0, -1.0)).norm() < 1e-14);
    }
}
