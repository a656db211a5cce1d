//! Hamiltonian operator matrices `[[A, B], [C, -A*]]` with Hermitian `B`, `C`.

use crate::block::BlockOp;
use crate::error::{BlockError, Result};
use operator_core::{BasisTag, Complex64, OperatorRep};

/// Which product-domain shape is native for the criteria: the shape drives
/// whether the resolvent of `A` (diagonal case) or of `B`/`C` (off-diagonal
/// case) is the natural tool. At finite truncation both are available; this
/// is metadata preserved for reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainShape {
    /// `D(H) = D(A) x D(A*)`.
    Diagonal,
    /// `D(H) = D(C) x D(B)`.
    OffDiagonal,
}

#[derive(Clone, Debug)]
pub struct HamiltonianOp {
    a: OperatorRep,
    b: OperatorRep,
    c: OperatorRep,
    tol: f64,
    shape: DomainShape,
}

pub const DEFAULT_STRUCTURE_TOL: f64 = 1e-10;

impl HamiltonianOp {
    /// Validating constructor: `a` square on a common tag, `b` and `c`
    /// Hermitian within `tol` (relative Frobenius defect).
    pub fn new(a: OperatorRep, b: OperatorRep, c: OperatorRep, tol: f64) -> Result<Self> {
        let x = a.domain().clone();
        for (name, op) in [("a", &a), ("b", &b), ("c", &c)] {
            if op.domain() != &x || op.codomain() != &x {
                return Err(BlockError::BasisMismatch {
                    left: format!("{name}: {} -> {}", op.domain(), op.codomain()),
                    right: format!("expected {x} -> {x}"),
                });
            }
        }
        for (name, op) in [("b", &b), ("c", &c)] {
            let fro = op.frobenius_norm().max(1e-300);
            let defect = op.matrix().hermitian_defect() / fro;
            if defect > tol {
                return Err(BlockError::NotHermitian {
                    block: if name == "b" { "b" } else { "c" },
                    defect,
                    tol,
                });
            }
        }
        Ok(HamiltonianOp {
            a,
            b,
            c,
            tol,
            shape: DomainShape::Diagonal,
        })
    }

    pub fn with_default_tol(a: OperatorRep, b: OperatorRep, c: OperatorRep) -> Result<Self> {
        Self::new(a, b, c, DEFAULT_STRUCTURE_TOL)
    }

    /// Skip the Hermitian validation. Intended for corruption diagnostics:
    /// the criteria will then report honest nonzero deviations.
    pub fn new_unchecked(a: OperatorRep, b: OperatorRep, c: OperatorRep, tol: f64) -> Self {
        HamiltonianOp {
            a,
            b,
            c,
            tol,
            shape: DomainShape::Diagonal,
        }
    }

    pub fn with_shape(mut self, shape: DomainShape) -> Self {
        self.shape = shape;
        self
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

    /// Derived lower-right block `-A*`.
    pub fn d(&self) -> OperatorRep {
        self.a.adjoint().scale(operator_core::c64(-1.0, 0.0))
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn shape(&self) -> DomainShape {
        self.shape
    }

    pub fn space(&self) -> &BasisTag {
        self.a.domain()
    }

    pub fn block_dim(&self) -> usize {
        self.a.dim_domain()
    }

    pub fn dim(&self) -> usize {
        2 * self.block_dim()
    }

    pub fn as_block_op(&self) -> BlockOp {
        BlockOp::new(self.a.clone(), self.b.clone(), self.c.clone(), self.d())
            .expect("Hamiltonian blocks are shape-consistent")
    }

    pub fn dense(&self) -> OperatorRep {
        self.as_block_op().dense()
    }

    /// A default spectral parameter guaranteed to lie in the resolvent set of
    /// `a`: `i` scaled past the numerical range for Hermitian `a`, and a real
    /// shift past the operator norm otherwise.
    pub fn default_lambda(&self) -> Complex64 {
        if self.a.is_hermitian(self.tol.max(1e-12)) {
            operator_core::c64(0.0, 1.0)
        } else {
            operator_core::c64(1.0 + self.a.operator_norm(), 0.0)
        }
    }
}
