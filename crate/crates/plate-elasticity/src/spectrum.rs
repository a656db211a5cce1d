//! Spectrum of the plate Hamiltonian against its closed-form reference.
//!
//! The discretization is exact, so at truncation `N` the spectrum is exactly
//! `{+-n pi : 1 <= n <= N} U {0}`, every eigenvalue with algebraic
//! multiplicity 2, and the set is symmetric about the imaginary axis. The
//! computation goes through the mode split: per-block solves keep the doubled
//! eigenvalue of the defective mode-0 block exact instead of smearing it at
//! square-root-of-epsilon scale as a monolithic solve would.

use crate::error::Result;
use crate::modes::{mode_decompose, mode_eigenvalues};
use crate::ops::build_a;
use block_matrix::HamiltonianOp;
use operator_core::{CMat, Complex64, OperatorRep};
use serde::Serialize;
use std::f64::consts::PI;

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub n_modes: usize,
    /// Computed eigenvalues, sorted by real part then imaginary part.
    pub computed: Vec<Complex64>,
    /// Reference values `{+-n pi (x2)} U {0 (x2)}`, sorted.
    pub reference: Vec<f64>,
    pub max_abs_error: f64,
    /// Clusters of computed eigenvalues with their multiplicities.
    pub multiplicities: Vec<(f64, usize)>,
    /// Multiset distance between the spectrum and its reflection across the
    /// imaginary axis.
    pub symmetry_defect: f64,
}

fn sort_key(a: &Complex64, b: &Complex64) -> std::cmp::Ordering {
    a.re.partial_cmp(&b.re)
        .unwrap()
        .then(a.im.partial_cmp(&b.im).unwrap())
}

/// Reference spectrum, sorted ascending with multiplicity 2 per value.
pub fn reference_spectrum(n_modes: usize) -> Vec<f64> {
    let mut vals = Vec::with_capacity(4 * n_modes + 2);
    for n in (1..=n_modes).rev() {
        let v = -(n as f64) * PI;
        vals.push(v);
        vals.push(v);
    }
    vals.push(0.0);
    vals.push(0.0);
    for n in 1..=n_modes {
        let v = n as f64 * PI;
        vals.push(v);
        vals.push(v);
    }
    vals
}

/// Multiset distance between `s` and `-conj(s)` under sorted pairing.
pub fn symmetry_defect(spectrum: &[Complex64]) -> f64 {
    let mut a: Vec<Complex64> = spectrum.to_vec();
    let mut b: Vec<Complex64> = spectrum.iter().map(|z| Complex64::new(-z.re, z.im)).collect();
    a.sort_by(sort_key);
    b.sort_by(sort_key);
    a.iter()
        .zip(&b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn spectrum(h: &HamiltonianOp) -> Result<SpectrumReport> {
    let n_modes = h.a().truncation();
    let systems = mode_decompose(h)?;
    let mut computed = Vec::with_capacity(4 * n_modes + 2);
    for sys in &systems {
        computed.extend(mode_eigenvalues(sys)?);
    }
    computed.sort_by(sort_key);
    let reference = reference_spectrum(n_modes);
    let max_abs_error = computed
        .iter()
        .zip(&reference)
        .map(|(c, &r)| (c - Complex64::new(r, 0.0)).norm())
        .fold(0.0, f64::max);

    // cluster for the multiplicity table
    let cluster_tol = 1e-6 * (n_modes as f64 * PI).max(1.0);
    let mut multiplicities: Vec<(f64, usize)> = Vec::new();
    for z in &computed {
        match multiplicities.last_mut() {
            Some((center, count)) if (z.re - *center).abs() <= cluster_tol => *count += 1,
            _ => multiplicities.push((z.re, 1)),
        }
    }

    Ok(SpectrumReport {
        n_modes,
        symmetry_defect: symmetry_defect(&computed),
        computed,
        reference,
        max_abs_error,
        multiplicities,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HSquaredReport {
    pub n_modes: usize,
    /// `||H^2 - diag(A^2, A^2)||_F`.
    pub block_deviation: f64,
    /// Operator norm of the dense `H`.
    pub h_norm: f64,
    pub structure_pass: bool,
    /// Multiset distance between `sigma(H^2)` and `{z^2 : z in sigma(H)}`.
    pub mapping_defect: f64,
    /// Multiset distance between `sigma(H^2)` and `{(n pi)^2}` with doubling.
    pub reference_defect: f64,
    /// Smallest singular value of `H^2 + 1` (equals 1 exactly in theory).
    pub shifted_margin: f64,
}

/// Verify `H^2 = diag(A^2, A^2)`, the spectral-mapping identity, and the
/// bijectivity margin of `H^2 + 1`.
pub fn hsquared_check(h: &HamiltonianOp) -> Result<HSquaredReport> {
    let n_modes = h.a().truncation();
    let dense = h.dense();
    let h2 = dense.matrix().matmul(dense.matrix());
    let a = build_a(n_modes);
    let a2 = a.matrix().matmul(a.matrix());
    let dim = a2.nrows();
    let zero = CMat::zeros(dim, dim);
    let block = CMat::from_blocks(&a2, &zero, &zero, &a2);
    let block_deviation = h2.sub(&block).frobenius_norm();
    let h_norm = dense.operator_norm();
    let structure_pass = block_deviation <= 1e-12 * h_norm * h_norm;

    // sigma(H^2) via the Hermitian path (H^2 is block-diagonal Hermitian)
    let h2_op = OperatorRep::from_matrix(h2);
    let h2_vals = h2_op.hermitian_eig()?.real_eigenvalues_sorted();

    // {z^2 : z in sigma(H)} via the mode path
    let spec_h = spectrum(h)?;
    let mut squared: Vec<f64> = spec_h.computed.iter().map(|z| (z * z).re).collect();
    squared.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mapping_defect = h2_vals
        .iter()
        .zip(&squared)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);

    // reference: (n pi)^2 for n = 0..N, each four times except 0 twice
    let mut reference: Vec<f64> = Vec::with_capacity(4 * n_modes + 2);
    reference.push(0.0);
    reference.push(0.0);
    for n in 1..=n_modes {
        let v = (n as f64 * PI).powi(2);
        for _ in 0..4 {
            reference.push(v);
        }
    }
    reference.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let reference_defect = h2_vals
        .iter()
        .zip(&reference)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);

    // H^2 + 1 is Hermitian positive definite; its smallest singular value is
    // min eig + 1
    let shifted_margin = 1.0 + h2_vals.first().copied().unwrap_or(0.0);

    Ok(HSquaredReport {
        n_modes,
        block_deviation,
        h_norm,
        structure_pass,
        mapping_defect,
        reference_defect,
        shifted_margin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::build_plate_hamiltonian;

    #[test]
    fn spectrum_matches_reference_at_n16() {
        let h = build_plate_hamiltonian(16);
        let rep = spectrum(&h).unwrap();
        assert!(rep.max_abs_error <= 1e-9 * 16.0 * PI, "{}", rep.max_abs_error);
        assert!(rep.symmetry_defect <= 1e-9, "{}", rep.symmetry_defect);
        // every cluster has multiplicity 2
        assert!(rep.multiplicities.iter().all(|&(_, m)| m == 2));
        assert_eq!(rep.multiplicities.len(), 2 * 16 + 1);
    }

    #[test]
    fn hsquared_structure_at_n4() {
        let h = build_plate_hamiltonian(4);
        let rep = hsquared_check(&h).unwrap();
        assert_eq!(rep.block_deviation, 0.0, "H^2 equals diag(A^2, A^2) exactly");
        assert!(rep.structure_pass);
        assert!(rep.mapping_defect <= 1e-8, "{}", rep.mapping_defect);
        assert!(rep.reference_defect <= 1e-8, "{}", rep.reference_defect);
        assert!((rep.shifted_margin - 1.0).abs() <= 1e-9, "{}", rep.shifted_margin);
    }
}
