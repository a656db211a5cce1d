//! Truncation families built from the plate operators, for the
//! relative-bound machinery.
//!
//! All of these are mode-diagonal: the member at truncation `N` splits into
//! `N` two-by-two blocks plus the scalar constant-cosine mode, so resolvent
//! norms over the documented schedules (`N` up to 4096) cost `O(N)`. The
//! dense assemblies (used for consistency checks and the divergence witness)
//! are the basis-ordered operators from [`crate::ops`].

use crate::ops::{build_a, build_plate_hamiltonian, plate_space};
use operator_core::{c64, CMat, OperatorRep};
use relative_bounds::{BlockFamily, OperatorFamily};
use std::f64::consts::PI;

/// Per-mode `A` blocks: `[[0, n pi], [n pi, 0]]` for `n = 1..N` plus the
/// scalar zero block of the constant cosine mode.
fn a_mode_blocks(n: usize) -> Vec<CMat> {
    let mut blocks: Vec<CMat> = (1..=n)
        .map(|k| {
            let kp = c64(k as f64 * PI, 0.0);
            let mut m = CMat::zeros(2, 2);
            m[(0, 1)] = kp;
            m[(1, 0)] = kp;
            m
        })
        .collect();
    blocks.push(CMat::zeros(1, 1));
    blocks
}

/// `S = T = A(N)`: the family whose relative bound is exactly 1 in the
/// truncation limit.
pub fn plate_self_family() -> OperatorFamily {
    OperatorFamily::from_mode_fn("plate A vs A", |n| {
        a_mode_blocks(n).into_iter().map(|b| (b.clone(), b)).collect()
    })
    .with_dense(|n| {
        let a = build_a(n);
        (a.clone(), a)
    })
}

/// `S = 0`, `T = A(N)`.
pub fn plate_zero_family() -> OperatorFamily {
    OperatorFamily::from_mode_fn("zero vs plate A", |n| {
        a_mode_blocks(n)
            .into_iter()
            .map(|b| (CMat::zeros(b.nrows(), b.ncols()), b))
            .collect()
    })
    .with_dense(|n| {
        let a = build_a(n);
        (OperatorRep::zeros(plate_space(n), plate_space(n)), a)
    })
}

/// `S = I`, `T = A(N)`.
pub fn plate_identity_family() -> OperatorFamily {
    OperatorFamily::from_mode_fn("identity vs plate A", |n| {
        a_mode_blocks(n)
            .into_iter()
            .map(|b| (CMat::identity(b.nrows()), b))
            .collect()
    })
    .with_dense(|n| {
        let a = build_a(n);
        (OperatorRep::identity(plate_space(n)).with_truncation(n), a)
    })
}

/// Block family of the plate Hamiltonian: `(A, A + 1, 0)` per truncation.
pub fn plate_block_family() -> BlockFamily {
    BlockFamily::from_mode_fn("plate H blocks", |n| {
        a_mode_blocks(n)
            .into_iter()
            .map(|a| {
                let id = CMat::identity(a.nrows());
                let b = a.add(&id);
                let c = CMat::zeros(a.nrows(), a.ncols());
                (a, b, c)
            })
            .collect()
    })
    .with_dense(|n| {
        let h = build_plate_hamiltonian(n);
        (h.a().clone(), h.b().clone(), h.c().clone())
    })
}

/// Block family of the mirrored Hamiltonian `[[A, A], [-A, -A]]` over the
/// plate `A`: `(A, A, -A)` per truncation. The sharpness witness for the
/// strict relative-bound hypotheses.
pub fn mirror_block_family() -> BlockFamily {
    BlockFamily::from_mode_fn("mirrored plate blocks", |n| {
        a_mode_blocks(n)
            .into_iter()
            .map(|a| {
                let b = a.clone();
                let c = a.scale(c64(-1.0, 0.0));
                (a, b, c)
            })
            .collect()
    })
    .with_dense(|n| {
        let a = build_a(n);
        (a.clone(), a.clone(), a.scale(c64(-1.0, 0.0)))
    })
}

/// The mirrored Hamiltonian at truncation `n`.
pub fn mirror_plate_hamiltonian(n: usize) -> block_matrix::HamiltonianOp {
    let a = build_a(n);
    block_matrix::mirror_hamiltonian(&a, block_matrix::DEFAULT_STRUCTURE_TOL)
        .expect("plate A is Hermitian")
}
