//! The mirrored Hamiltonian `[[A, A], [-A, -A]]` built from a Hermitian `A`.
//!
//! At finite truncation this operator is structurally valid and passes every
//! criterion; its role is as the sharpness witness for the relative-bound
//! hypotheses: when `A` is unbounded the corresponding operator is not
//! closed, and all four relative bounds tend to exactly 1. The divergence
//! diagnostics live in the relative-bounds layer.

use crate::error::{BlockError, Result};
use crate::hamiltonian::HamiltonianOp;
use operator_core::{c64, OperatorRep};

/// Build `H = [[A, A], [-A, -A]]` (so `B = A`, `C = -A`, and the derived
/// lower-right block `-A*` equals `-A`). Requires `A` Hermitian.
pub fn mirror_hamiltonian(a: &OperatorRep, tol: f64) -> Result<HamiltonianOp> {
    let fro = a.frobenius_norm().max(1e-300);
    let defect = a.matrix().hermitian_defect() / fro;
    if !a.is_square() || defect > tol {
        return Err(BlockError::NotHermitian {
            block: "a",
            defect,
            tol,
        });
    }
    HamiltonianOp::new(a.clone(), a.clone(), a.scale(c64(-1.0, 0.0)), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::symplectic_selfadjoint_direct;
    use operator_core::CMat;
    use std::f64::consts::PI;

    #[test]
    fn dense_layout_matches_hand_assembly() {
        let a = OperatorRep::from_matrix(CMat::diag(&[c64(PI, 0.0), c64(2.0 * PI, 0.0)]));
        let h = mirror_hamiltonian(&a, 1e-10).unwrap();
        let dense = h.dense();
        let m = dense.matrix();
        // [[A, A], [-A, -A]] blockwise
        for i in 0..2 {
            assert_eq!(m[(i, i)], a.matrix()[(i, i)]);
            assert_eq!(m[(i, 2 + i)], a.matrix()[(i, i)]);
            assert_eq!(m[(2 + i, i)], -a.matrix()[(i, i)]);
            assert_eq!(m[(2 + i, 2 + i)], -a.matrix()[(i, i)]);
        }
    }

    #[test]
    fn zero_input_gives_zero_operator() {
        let a = OperatorRep::from_matrix(CMat::zeros(2, 2));
        let h = mirror_hamiltonian(&a, 1e-10).unwrap();
        assert_eq!(h.dense().frobenius_norm(), 0.0);
    }

    #[test]
    fn finite_truncation_passes_direct_check() {
        let a = OperatorRep::from_matrix(CMat::diag(&[
            c64(1.0, 0.0),
            c64(2.0, 0.0),
            c64(3.0, 0.0),
        ]));
        let h = mirror_hamiltonian(&a, 1e-10).unwrap();
        let rep = symplectic_selfadjoint_direct(&h);
        assert!(rep.pass, "finite-dimensional mirror must pass, got {rep:?}");
    }

    #[test]
    fn non_hermitian_rejected() {
        let a = OperatorRep::from_matrix(CMat::from_real_rows(&[
            vec![0.0, 1.0],
            vec![0.0, 0.0],
        ]));
        assert!(mirror_hamiltonian(&a, 1e-10).is_err());
    }
}
