//! Exact spectral discretization of the first-derivative pair and the plate
//! Hamiltonian.
//!
//! On `L2(0,1)` with the orthonormal families `sqrt(2) sin(n pi y)` (zero
//! boundary values) and `1, sqrt(2) cos(n pi y)`, differentiation maps one
//! family onto the other with coefficient `n pi` per mode, so the truncated
//! matrices are exact rather than approximate: every identity below holds to
//! machine precision at every truncation.

use block_matrix::HamiltonianOp;
use operator_core::{c64, BasisTag, CMat, OperatorRep};
use std::f64::consts::PI;

/// First derivative on the zero-boundary sine family, mapped into cosine
/// coordinates: `(N+1) x N` with `n pi` on the shifted diagonal and a zero
/// row for the constant cosine mode.
pub fn build_t0(n: usize) -> OperatorRep {
    assert!(n >= 1, "truncation must be positive");
    let mut m = CMat::zeros(n + 1, n);
    for k in 1..=n {
        m[(k, k - 1)] = c64(k as f64 * PI, 0.0);
    }
    OperatorRep::new(m, BasisTag::Sine(n), BasisTag::Cosine(n), n).expect("dims consistent")
}

/// Negative derivative on the cosine family, mapped into sine coordinates:
/// `N x (N+1)`, the exact transpose of [`build_t0`] (real entries).
pub fn build_t0_adjoint(n: usize) -> OperatorRep {
    assert!(n >= 1, "truncation must be positive");
    let mut m = CMat::zeros(n, n + 1);
    for k in 1..=n {
        m[(k - 1, k)] = c64(k as f64 * PI, 0.0);
    }
    OperatorRep::new(m, BasisTag::Cosine(n), BasisTag::Sine(n), n).expect("dims consistent")
}

/// The basis tag of the plate state slot: `Sine(N) (+) Cosine(N)`.
pub fn plate_space(n: usize) -> BasisTag {
    BasisTag::Product(vec![BasisTag::Sine(n), BasisTag::Cosine(n)])
}

/// `A = [[0, T0*], [T0, 0]]` on the plate space; Hermitian with spectrum
/// `{+-n pi : n <= N} U {0}`.
pub fn build_a(n: usize) -> OperatorRep {
    let t0 = build_t0(n);
    let t0a = build_t0_adjoint(n);
    let sine_dim = n;
    let dim = 2 * n + 1;
    let mut m = CMat::zeros(dim, dim);
    m.set_block(0, sine_dim, t0a.matrix());
    m.set_block(sine_dim, 0, t0.matrix());
    let tag = plate_space(n);
    OperatorRep::new(m, tag.clone(), tag, n).expect("dims consistent")
}

/// The plate Hamiltonian `H = [[A, A + 1], [0, -A]]`, a valid Hamiltonian
/// operator matrix with `B = A + 1` and `C = 0` (both Hermitian). Dense
/// dimension `4N + 2`.
pub fn build_plate_hamiltonian(n: usize) -> HamiltonianOp {
    let a = build_a(n);
    let id = OperatorRep::identity(plate_space(n)).with_truncation(n);
    let b = a.add(&id).expect("same space");
    let c = OperatorRep::zeros(plate_space(n), plate_space(n)).with_truncation(n);
    HamiltonianOp::with_default_tol(a, b, c).expect("plate blocks are Hermitian")
}
