//! Mode decomposition of the plate Hamiltonian.
//!
//! The plate operators are diagonal in the transverse mode index: gathering
//! the coefficients `(u1_n, u2_n, u3_n, u4_n)` of mode `n >= 1` turns the
//! dense `(4N+2)`-dimensional Hamiltonian into `N` independent 4x4 blocks
//! `[[A_n, A_n + 1], [0, -A_n]]` with `A_n = [[0, n pi], [n pi, 0]]`, plus
//! one 2x2 block `[[0, 1], [0, 0]]` for the constant cosine mode. The
//! gathering is a permutation, so reassembly is bit-exact.

use crate::error::{PlateError, Result};
use crate::poly::Poly;
use block_matrix::HamiltonianOp;
use operator_core::{CMat, Complex64};

/// Off-pattern tolerance relative to the largest matrix entry.
const OFF_PATTERN_TOL: f64 = 1e-14;

#[derive(Clone, Debug)]
pub struct ModeSystem {
    /// Transverse mode index; 0 is the constant cosine mode (2x2 block).
    pub mode_n: usize,
    /// 4x4 block for `mode_n >= 1`, 2x2 for mode 0.
    pub h_matrix: CMat,
    /// Per-component polynomial forcing in `x` (length matches `h_matrix`).
    pub forcing: Vec<Poly>,
    /// Dense indices this block was gathered from.
    pub indices: Vec<usize>,
}

impl ModeSystem {
    pub fn dim(&self) -> usize {
        self.h_matrix.nrows()
    }

    pub fn with_forcing(mut self, forcing: Vec<Poly>) -> Self {
        assert_eq!(forcing.len(), self.dim());
        self.forcing = forcing;
        self
    }
}

/// Dense index of the sine coefficient `n` (1-based) in the plate space.
fn sine_index(n_modes: usize, n: usize) -> usize {
    debug_assert!(n >= 1 && n <= n_modes);
    let _ = n_modes;
    n - 1
}

/// Dense index of the cosine coefficient `n` (0-based) in the plate space.
fn cosine_index(n_modes: usize, n: usize) -> usize {
    debug_assert!(n <= n_modes);
    n_modes + n
}

/// Gather indices of mode `n` inside the doubled plate space.
pub fn mode_indices(n_modes: usize, mode_n: usize) -> Vec<usize> {
    let x_dim = 2 * n_modes + 1;
    if mode_n == 0 {
        vec![cosine_index(n_modes, 0), x_dim + cosine_index(n_modes, 0)]
    } else {
        vec![
            sine_index(n_modes, mode_n),
            cosine_index(n_modes, mode_n),
            x_dim + sine_index(n_modes, mode_n),
            x_dim + cosine_index(n_modes, mode_n),
        ]
    }
}

/// Split a plate Hamiltonian into its per-mode systems. Fails with
/// `StructureMismatch` when mass sits outside the mode pattern.
pub fn mode_decompose(h: &HamiltonianOp) -> Result<Vec<ModeSystem>> {
    let n_modes = h.a().truncation();
    let dense = h.dense();
    let m = dense.matrix();
    let dim = m.nrows();
    if dim != 4 * n_modes + 2 {
        return Err(PlateError::StructureMismatch {
            mass: f64::INFINITY,
            row: dim,
            col: 4 * n_modes + 2,
        });
    }
    // position -> mode block id, for the off-pattern scan
    let mut owner = vec![usize::MAX; dim];
    let mut systems = Vec::with_capacity(n_modes + 1);
    for mode in (0..=n_modes).rev() {
        let idx = mode_indices(n_modes, mode);
        for &i in &idx {
            owner[i] = mode;
        }
        let d = idx.len();
        let block = CMat::from_fn(d, d, |r, c| m[(idx[r], idx[c])]);
        systems.push(ModeSystem {
            mode_n: mode,
            h_matrix: block,
            forcing: vec![Poly::zero(); d],
            indices: idx,
        });
    }
    systems.reverse();
    let scale = m.max_abs().max(1.0);
    for r in 0..dim {
        for c in 0..dim {
            if owner[r] != owner[c] {
                let v = m[(r, c)].norm();
                if v > OFF_PATTERN_TOL * scale {
                    return Err(PlateError::StructureMismatch { mass: v, row: r, col: c });
                }
            }
        }
    }
    Ok(systems)
}

/// Scatter the mode blocks back into a dense matrix; exact inverse of the
/// gather when the input had the mode pattern.
pub fn reassemble(systems: &[ModeSystem], dim: usize) -> CMat {
    let mut m = CMat::zeros(dim, dim);
    for sys in systems {
        for (r, &ir) in sys.indices.iter().enumerate() {
            for (c, &ic) in sys.indices.iter().enumerate() {
                m[(ir, ic)] = sys.h_matrix[(r, c)];
            }
        }
    }
    m
}

/// Eigenvalues of one mode block via the general path.
pub fn mode_eigenvalues(sys: &ModeSystem) -> Result<Vec<Complex64>> {
    let op = operator_core::OperatorRep::from_matrix(sys.h_matrix.clone());
    let dec = op.eig()?;
    Ok(dec.eigenvalues)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::build_plate_hamiltonian;
    use operator_core::c64;
    use std::f64::consts::PI;

    #[test]
    fn n1_blocks_match_hand_assembly() {
        let h = build_plate_hamiltonian(1);
        let systems = mode_decompose(&h).unwrap();
        assert_eq!(systems.len(), 2);
        let zero_mode = &systems[0];
        assert_eq!(zero_mode.mode_n, 0);
        assert_eq!(zero_mode.h_matrix.nrows(), 2);
        assert_eq!(zero_mode.h_matrix[(0, 0)], c64(0.0, 0.0));
        assert_eq!(zero_mode.h_matrix[(0, 1)], c64(1.0, 0.0));
        assert_eq!(zero_mode.h_matrix[(1, 0)], c64(0.0, 0.0));
        assert_eq!(zero_mode.h_matrix[(1, 1)], c64(0.0, 0.0));
        let m1 = &systems[1];
        assert_eq!(m1.mode_n, 1);
        let b = &m1.h_matrix;
        // [[A1, A1 + I], [0, -A1]] with A1 = [[0, pi], [pi, 0]]
        let pi = c64(PI, 0.0);
        assert_eq!(b[(0, 1)], pi);
        assert_eq!(b[(1, 0)], pi);
        assert_eq!(b[(0, 2)], c64(1.0, 0.0));
        assert_eq!(b[(0, 3)], pi);
        assert_eq!(b[(1, 2)], pi);
        assert_eq!(b[(1, 3)], c64(1.0, 0.0));
        assert_eq!(b[(2, 3)], -pi);
        assert_eq!(b[(3, 2)], -pi);
        assert_eq!(b[(2, 0)], c64(0.0, 0.0));
    }

    #[test]
    fn reassembly_is_exact() {
        let h = build_plate_hamiltonian(5);
        let systems = mode_decompose(&h).unwrap();
        let dense = h.dense();
        let back = reassemble(&systems, dense.matrix().nrows());
        assert_eq!(&back, dense.matrix(), "permutation gather/scatter must be exact");
    }

    #[test]
    fn mode_block_spectra() {
        let h = build_plate_hamiltonian(3);
        let systems = mode_decompose(&h).unwrap();
        for sys in &systems {
            let vals = mode_eigenvalues(sys).unwrap();
            if sys.mode_n == 0 {
                assert!(vals.iter().all(|v| v.norm() < 1e-12));
            } else {
                let np = sys.mode_n as f64 * PI;
                let mut re: Vec<f64> = vals.iter().map(|v| v.re).collect();
                re.sort_by(|a, b| a.partial_cmp(b).unwrap());
                // algebraic multiplicity 2 at each of -n pi, +n pi
                assert!((re[0] + np).abs() < 1e-10 && (re[1] + np).abs() < 1e-10);
                assert!((re[2] - np).abs() < 1e-10 && (re[3] - np).abs() < 1e-10);
                assert!(vals.iter().all(|v| v.im.abs() < 1e-10));
            }
        }
    }

    #[test]
    fn off_pattern_mass_is_rejected() {
        let h = build_plate_hamiltonian(2);
        let mut dense = h.dense().matrix().clone();
        dense[(0, 4)] = c64(0.5, 0.0); // couple sine mode 1 to cosine mode 2
        // rebuild an unchecked Hamiltonian that carries the corrupted dense form
        let n = 2;
        let x_dim = 2 * n + 1;
        let a = operator_core::OperatorRep::new(
            dense.block(0, 0, x_dim, x_dim),
            crate::ops::plate_space(n),
            crate::ops::plate_space(n),
            n,
        )
        .unwrap();
        let b = operator_core::OperatorRep::new(
            dense.block(0, x_dim, x_dim, x_dim),
            crate::ops::plate_space(n),
            crate::ops::plate_space(n),
            n,
        )
        .unwrap();
        let c = operator_core::OperatorRep::zeros(crate::ops::plate_space(n), crate::ops::plate_space(n))
            .with_truncation(n);
        let bad = HamiltonianOp::new_unchecked(a, b, c, 1e-10);
        match mode_decompose(&bad) {
            Err(PlateError::StructureMismatch { .. }) => {}
            other => panic!("expected StructureMismatch, got {other:?}"),
        }
    }
}
