//! General 2x2 block operator matrices.

use crate::error::{BlockError, Result};
use operator_core::{BasisTag, CMat, OperatorRep};

/// `[[a, b], [c, d]]` on `X1 x X2` with `a: X1->X1`, `b: X2->X1`,
/// `c: X1->X2`, `d: X2->X2`.
///
/// Deliberately accepts arbitrary (possibly non-Hamiltonian) blocks; the
/// Frobenius-Schur machinery applies to any of them. Structural requirements
/// live in [`crate::HamiltonianOp`].
#[derive(Clone, Debug)]
pub struct BlockOp {
    a: OperatorRep,
    b: OperatorRep,
    c: OperatorRep,
    d: OperatorRep,
}

impl BlockOp {
    pub fn new(a: OperatorRep, b: OperatorRep, c: OperatorRep, d: OperatorRep) -> Result<Self> {
        let x1 = a.domain().clone();
        let x2 = d.domain().clone();
        let check = |name: &str, dom: &BasisTag, cod: &BasisTag, op: &OperatorRep| -> Result<()> {
            if op.domain() != dom || op.codomain() != cod {
                return Err(BlockError::BasisMismatch {
                    left: format!("{name}: {} -> {}", op.domain(), op.codomain()),
                    right: format!("expected {dom} -> {cod}"),
                });
            }
            Ok(())
        };
        check("a", &x1, &x1, &a)?;
        check("b", &x2, &x1, &b)?;
        check("c", &x1, &x2, &c)?;
        check("d", &x2, &x2, &d)?;
        Ok(BlockOp { a, b, c, d })
    }

    pub fn a(&self) -> &OperatorRep {
        &self.a
    }

    pub fn b(&self) -> &OperatorRep {
        &self.b
    }

    pub fn c(&self) -> &OperatorRep {
        &self.c
    }

    pub fn d(&self) -> &OperatorRep {
        &self.d
    }

    pub fn x1(&self) -> &BasisTag {
        self.a.domain()
    }

    pub fn x2(&self) -> &BasisTag {
        self.d.domain()
    }

    /// Dense assembled form on `Product(X1, X2)`.
    pub fn dense(&self) -> OperatorRep {
        let tag = BasisTag::Product(vec![self.x1().clone(), self.x2().clone()]);
        let mat = CMat::from_blocks(
            self.a.matrix(),
            self.b.matrix(),
            self.c.matrix(),
            self.d.matrix(),
        );
        let trunc = self
            .a
            .truncation()
            .max(self.b.truncation())
            .max(self.c.truncation())
            .max(self.d.truncation());
        OperatorRep::new(mat, tag.clone(), tag, trunc).expect("block dims consistent")
    }

    pub fn dim(&self) -> usize {
        self.x1().dim() + self.x2().dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use operator_core::c64;

    #[test]
    fn rejects_incompatible_blocks() {
        let a = OperatorRep::identity(BasisTag::Abstract(2));
        let b = OperatorRep::zeros(BasisTag::Abstract(3), BasisTag::Abstract(2));
        let c = OperatorRep::zeros(BasisTag::Abstract(2), BasisTag::Abstract(3));
        let d_bad = OperatorRep::identity(BasisTag::Abstract(4));
        assert!(BlockOp::new(a, b, c, d_bad).is_err());
    }

    #[test]
    fn dense_layout() {
        let a = OperatorRep::identity(BasisTag::Abstract(1)).scale(c64(2.0, 0.0));
        let b = OperatorRep::identity(BasisTag::Abstract(1)).scale(c64(3.0, 0.0));
        let c = OperatorRep::identity(BasisTag::Abstract(1)).scale(c64(4.0, 0.0));
        let d = OperatorRep::identity(BasisTag::Abstract(1)).scale(c64(5.0, 0.0));
        let m = BlockOp::new(a, b, c, d).unwrap().dense();
        assert_eq!(m.matrix()[(0, 0)], c64(2.0, 0.0));
        assert_eq!(m.matrix()[(0, 1)], c64(3.0, 0.0));
        assert_eq!(m.matrix()[(1, 0)], c64(4.0, 0.0));
        assert_eq!(m.matrix()[(1, 1)], c64(5.0, 0.0));
    }
}
