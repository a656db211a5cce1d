//! Seeded random Hamiltonian fixtures for the property and acceptance suites.

use crate::hamiltonian::HamiltonianOp;
use operator_core::{c64, CMat, OperatorRep};
use rand::Rng;

pub fn random_cmat<R: Rng>(rng: &mut R, nr: usize, nc: usize) -> CMat {
    CMat::from_fn(nr, nc, |_, _| {
        c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
}

pub fn random_hermitian<R: Rng>(rng: &mut R, n: usize) -> CMat {
    random_cmat(rng, n, n).hermitian_part()
}

/// Structurally valid random Hamiltonian with the given block dimension.
pub fn random_hamiltonian<R: Rng>(rng: &mut R, block_dim: usize, tol: f64) -> HamiltonianOp {
    let a = OperatorRep::from_matrix(random_cmat(rng, block_dim, block_dim));
    let b = OperatorRep::from_matrix(random_hermitian(rng, block_dim));
    let c = OperatorRep::from_matrix(random_hermitian(rng, block_dim));
    HamiltonianOp::new(a, b, c, tol).expect("hermitian parts are hermitian")
}

/// A Hamiltonian whose `c` block carries a non-Hermitian corruption of the
/// given magnitude; built unchecked so the criteria can witness the damage.
pub fn corrupted_hamiltonian<R: Rng>(rng: &mut R, block_dim: usize, magnitude: f64, tol: f64) -> HamiltonianOp {
    let a = OperatorRep::from_matrix(random_cmat(rng, block_dim, block_dim));
    let b = OperatorRep::from_matrix(random_hermitian(rng, block_dim));
    let mut c = random_hermitian(rng, block_dim);
    // asymmetric bump
    let bump = c64(magnitude, magnitude / 2.0);
    let v = c[(0, block_dim - 1)];
    c[(0, block_dim - 1)] = v + bump;
    let c = OperatorRep::from_matrix(c);
    HamiltonianOp::new_unchecked(a, b, c, tol)
}
