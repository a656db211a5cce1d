//! Frobenius-Schur factorizations and Schur complements of 2x2 block
//! operator matrices.
//!
//! For `M = [[A, B], [C, D]]` and `lambda` in the resolvent set of the pivot
//! block, `M - lambda` factors as unit-triangular x block-diagonal x
//! unit-triangular, with the Schur complement sitting in the diagonal factor:
//!
//! first kind (pivot `D`):
//!   `[[I, B R], [0, I]] . diag(S1, D - l) . [[I, 0], [R C, I]]`,
//!   `R = (D - l)^{-1}`, `S1 = A - l - B R C`;
//! second kind (pivot `A`):
//!   `[[I, 0], [C R, I]] . diag(A - l, S2) . [[I, R B], [0, I]]`,
//!   `R = (A - l)^{-1}`, `S2 = D - l - C R B`.

use crate::block::BlockOp;
use crate::error::{BlockError, Result};
use operator_core::{Complex64, OperatorRep};
use serde::Serialize;

/// Relative singular-value margin below which `lambda` counts as spectrum.
pub const RESOLVENT_MARGIN_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SchurKind {
    First,
    Second,
}

/// Invert `op - lambda`, enforcing a singular-value margin. Returns the
/// inverse together with the margin.
pub fn resolvent_inverse(op: &OperatorRep, lambda: Complex64) -> Result<(OperatorRep, f64)> {
    let shifted = op.shift(lambda)?;
    let svals = shifted.singular_values();
    let smax = svals.first().copied().unwrap_or(0.0);
    let smin = svals.last().copied().unwrap_or(0.0);
    let threshold = RESOLVENT_MARGIN_TOL * smax.max(1.0);
    if smin <= threshold {
        return Err(BlockError::LambdaInSpectrum {
            lambda: format!("{lambda}"),
            margin: smin,
            threshold,
        });
    }
    Ok((shifted.inverse()?, smin))
}

#[derive(Clone, Debug)]
pub struct SchurComplementEval {
    pub kind: SchurKind,
    pub lambda: Complex64,
    pub matrix: OperatorRep,
    /// Smallest singular value of the inverted factor.
    pub resolvent_margin: f64,
}

/// Evaluate the first or second Schur complement of `m` at `lambda`.
pub fn schur_complement(m: &BlockOp, lambda: Complex64, kind: SchurKind) -> Result<SchurComplementEval> {
    match kind {
        SchurKind::First => {
            let (r, margin) = resolvent_inverse(m.d(), lambda)?;
            let brc = m.b().compose(&r)?.compose(m.c())?;
            let s1 = m.a().shift(lambda)?.sub(&brc)?;
            Ok(SchurComplementEval {
                kind,
                lambda,
                matrix: s1,
                resolvent_margin: margin,
            })
        }
        SchurKind::Second => {
            let (r, margin) = resolvent_inverse(m.a(), lambda)?;
            let crb = m.c().compose(&r)?.compose(m.b())?;
            let s2 = m.d().shift(lambda)?.sub(&crb)?;
            Ok(SchurComplementEval {
                kind,
                lambda,
                matrix: s2,
                resolvent_margin: margin,
            })
        }
    }
}

/// What a [`FactorizationResult`] factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FactorizationKind {
    /// `M - lambda`, first Schur complement exposed.
    FrobeniusSchurFirst,
    /// `M - lambda`, second Schur complement exposed.
    FrobeniusSchurSecond,
    /// `JH - lambda J`; middle factor `diag(-S2(lambda), -A + lambda)`.
    JhMinusLambdaJ,
    /// `JH + conj(lambda) J`; middle factor `diag(S1(-conj(lambda)), -A* + conj(lambda))`.
    JhPlusLambdaBarJ,
}

#[derive(Clone, Debug)]
pub struct FactorizationResult {
    pub kind: FactorizationKind,
    pub lambda: Complex64,
    pub left: BlockOp,
    pub middle: BlockOp,
    pub right: BlockOp,
    /// `||left middle right - target||_F / max(||target-source||_F, 1)`.
    pub residual: f64,
}

impl FactorizationResult {
    /// Dense product of the three factors.
    pub fn dense_product(&self) -> OperatorRep {
        self.left
            .dense()
            .compose(&self.middle.dense())
            .expect("factor tags agree")
            .compose(&self.right.dense())
            .expect("factor tags agree")
    }

    /// For the Frobenius-Schur kinds the outer factors are unit-triangular:
    /// diagonal blocks equal to the identity and one vanishing off-diagonal
    /// block. Returns the largest violation. The `Jh*` kinds place a
    /// symplectic permutation in one outer factor, so this measure only
    /// applies to the `FrobeniusSchur*` kinds.
    pub fn unit_triangular_defect(&self) -> f64 {
        let id_defect = |m: &OperatorRep| {
            let id = operator_core::CMat::identity(m.dim_domain());
            m.matrix().sub(&id).max_abs()
        };
        let mut worst: f64 = 0.0;
        for block in [&self.left, &self.right] {
            worst = worst.max(id_defect(block.a()));
            worst = worst.max(id_defect(block.d()));
            let b_mass = block.b().matrix().max_abs();
            let c_mass = block.c().matrix().max_abs();
            worst = worst.max(b_mass.min(c_mass));
        }
        worst
    }
}

fn residual_against(left: &BlockOp, middle: &BlockOp, right: &BlockOp, target: &OperatorRep, scale: f64) -> f64 {
    let prod = left
        .dense()
        .compose(&middle.dense())
        .expect("tags agree")
        .compose(&right.dense())
        .expect("tags agree");
    prod.matrix().sub(target.matrix()).frobenius_norm() / scale.max(1.0)
}

/// Frobenius-Schur factorization of `m - lambda`.
pub fn frobenius_schur_factorize(
    m: &BlockOp,
    lambda: Complex64,
    kind: SchurKind,
) -> Result<FactorizationResult> {
    let x1 = m.x1().clone();
    let x2 = m.x2().clone();
    let id1 = OperatorRep::identity(x1.clone());
    let id2 = OperatorRep::identity(x2.clone());
    let zero12 = OperatorRep::zeros(x2.clone(), x1.clone()); // X2 -> X1 slot (b)
    let zero21 = OperatorRep::zeros(x1.clone(), x2.clone()); // X1 -> X2 slot (c)
    let target = m.dense().shift(lambda)?;
    let scale = m.dense().frobenius_norm();

    let (left, middle, right, fk) = match kind {
        SchurKind::First => {
            let (r, _margin) = resolvent_inverse(m.d(), lambda)?;
            let s1 = schur_complement(m, lambda, SchurKind::First)?;
            let br = m.b().compose(&r)?;
            let rc = r.compose(m.c())?;
            let d_shift = m.d().shift(lambda)?;
            let left = BlockOp::new(id1.clone(), br, zero21.clone(), id2.clone())?;
            let middle = BlockOp::new(s1.matrix, zero12.clone(), zero21.clone(), d_shift)?;
            let right = BlockOp::new(id1, zero12, rc, id2)?;
            (left, middle, right, FactorizationKind::FrobeniusSchurFirst)
        }
        SchurKind::Second => {
            let (r, _margin) = resolvent_inverse(m.a(), lambda)?;
            let s2 = schur_complement(m, lambda, SchurKind::Second)?;
            let cr = m.c().compose(&r)?;
            let rb = r.compose(m.b())?;
            let a_shift = m.a().shift(lambda)?;
            let left = BlockOp::new(id1.clone(), zero12.clone(), cr, id2.clone())?;
            let middle = BlockOp::new(a_shift, zero12.clone(), zero21.clone(), s2.matrix)?;
            let right = BlockOp::new(id1, rb, zero21, id2)?;
            (left, middle, right, FactorizationKind::FrobeniusSchurSecond)
        }
    };
    let residual = residual_against(&left, &middle, &right, &target, scale);
    Ok(FactorizationResult {
        kind: fk,
        lambda,
        left,
        middle,
        right,
        residual,
    })
}

/// Scalar helper used in tests and reports: `s1 = a - l - b (d - l)^{-1} c`.
pub fn scalar_first_schur_complement(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
    lambda: Complex64,
) -> Complex64 {
    a - lambda - b * c / (d - lambda)
}

/// Assemble a 1x1-block [`BlockOp`] from four scalars.
pub fn scalar_block_op(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> BlockOp {
    let tag = operator_core::BasisTag::Abstract(1);
    let one = |z: Complex64| {
        OperatorRep::new(
            operator_core::CMat::diag(&[z]),
            tag.clone(),
            tag.clone(),
            1,
        )
        .unwrap()
    };
    BlockOp::new(one(a), one(b), one(c), one(d)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use operator_core::c64;

    #[test]
    fn scalar_first_complement_matches_arithmetic() {
        // a=2, b=1, c=1, d=3, lambda=0: s1 = 2 - 1*(1/3)*1 = 5/3
        let m = scalar_block_op(c64(2.0, 0.0), c64(1.0, 0.0), c64(1.0, 0.0), c64(3.0, 0.0));
        let eval = schur_complement(&m, c64(0.0, 0.0), SchurKind::First).unwrap();
        let got = eval.matrix.matrix()[(0, 0)];
        assert!((got - c64(5.0 / 3.0, 0.0)).norm() < 1e-15);
        assert!(eval.resolvent_margin > 0.0);
        let f = frobenius_schur_factorize(&m, c64(0.0, 0.0), SchurKind::First).unwrap();
        assert!(f.residual < 1e-15);
        assert_eq!(f.middle.a().matrix()[(0, 0)], got);
    }

    #[test]
    fn decoupled_blocks_give_identity_outer_factors() {
        // b = c = 0: middle = diag(a - l, d - l), left = right = identity
        let m = scalar_block_op(c64(2.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0), c64(3.0, 0.0));
        let f = frobenius_schur_factorize(&m, c64(0.0, 1.0), SchurKind::First).unwrap();
        assert!(f.unit_triangular_defect() < 1e-15);
        assert!(f.residual < 1e-15);
        assert!((f.middle.a().matrix()[(0, 0)] - c64(2.0, -1.0)).norm() < 1e-15);
        assert!((f.middle.d().matrix()[(0, 0)] - c64(3.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn lambda_in_spectrum_reports_margin() {
        let m = scalar_block_op(c64(2.0, 0.0), c64(1.0, 0.0), c64(1.0, 0.0), c64(3.0, 0.0));
        match frobenius_schur_factorize(&m, c64(3.0, 0.0), SchurKind::First) {
            Err(BlockError::LambdaInSpectrum { margin, .. }) => assert!(margin < 1e-8),
            other => panic!("expected LambdaInSpectrum, got {other:?}"),
        }
    }
}
