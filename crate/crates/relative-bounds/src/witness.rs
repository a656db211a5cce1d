//! Divergence diagnostics for the mirrored Hamiltonian `[[A, A], [-A, -A]]`.
//!
//! For a nested Hermitian family `A_N` take `x_N = sum_{n<=N} n^{-1} e_n`
//! (first `N` coordinates) and `u_N = (x_N, -x_N)`. Then `H_N u_N = 0`
//! identically while the graph-norm proxy `||A_N x_N||^2` diverges exactly
//! when the family's spectrum is unbounded; a bounded family yields slope 0.
//! This exhibits, at finite truncation, why the strict inequalities in the
//! relative-bound hypotheses cannot be dropped.

use crate::error::Result;
use crate::family::OperatorFamily;
use block_matrix::mirror_hamiltonian;
use operator_core::{c64, vec_norm, Complex64};
use serde::Serialize;

/// Slope of `||A x_N||^2` versus `N` above which a family counts as
/// closure-defective.
pub const DEFECT_SLOPE_TOL: f64 = 1e-2;

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub family: String,
    pub n_schedule: Vec<usize>,
    /// `||A_N x_N||^2` per schedule entry.
    pub graph_norm_sq: Vec<f64>,
    /// `||H_N u_N||` per schedule entry (0 identically).
    pub image_norm: Vec<f64>,
    /// `||x_N||^2` per schedule entry (bounded: tends to pi^2/6 for the
    /// harmonic coefficients).
    pub x_norm_sq: Vec<f64>,
    /// Endpoint slope of `graph_norm_sq` against `N`.
    pub divergence_slope: f64,
    pub slope_threshold: f64,
    pub closure_defective: bool,
}

/// Run the witness over the family's base operators at the given schedule.
/// The family must be Hermitian and nested (checked).
pub fn nonclosedness_witness(family: &OperatorFamily, n_schedule: &[usize]) -> Result<WitnessReport> {
    if n_schedule.is_empty() || n_schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(crate::error::BoundsError::InvalidSchedule(
            "witness schedule must be nonempty and strictly increasing".into(),
        ));
    }
    family.check_nested(n_schedule, 1e-10)?;

    let mut graph_norm_sq = Vec::new();
    let mut image_norm = Vec::new();
    let mut x_norm_sq = Vec::new();
    for &n in n_schedule {
        let (_, a) = family.dense_pair(n);
        let dim = a.dim_domain();
        let modes = n.min(dim);
        let mut x = vec![Complex64::new(0.0, 0.0); dim];
        for (k, slot) in x.iter_mut().take(modes).enumerate() {
            *slot = c64(1.0 / (k + 1) as f64, 0.0);
        }
        let ax = a.matrix().matvec(&x);
        graph_norm_sq.push(ax.iter().map(|z| z.norm_sqr()).sum::<f64>());
        x_norm_sq.push(x.iter().map(|z| z.norm_sqr()).sum::<f64>());

        let h = mirror_hamiltonian(&a, 1e-10)?;
        let mut u = Vec::with_capacity(2 * dim);
        u.extend_from_slice(&x);
        u.extend(x.iter().map(|z| -z));
        let hu = h.dense().matrix().matvec(&u);
        image_norm.push(vec_norm(&hu));
    }

    let n_first = n_schedule[0] as f64;
    let n_last = *n_schedule.last().unwrap() as f64;
    let divergence_slope = if n_last > n_first {
        (graph_norm_sq.last().unwrap() - graph_norm_sq[0]) / (n_last - n_first)
    } else {
        0.0
    };
    Ok(WitnessReport {
        family: family.label().to_string(),
        n_schedule: n_schedule.to_vec(),
        graph_norm_sq,
        image_norm,
        x_norm_sq,
        divergence_slope,
        slope_threshold: DEFECT_SLOPE_TOL,
        closure_defective: divergence_slope > DEFECT_SLOPE_TOL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use operator_core::{BasisTag, CMat, OperatorRep};

    #[test]
    fn bounded_identity_family_is_not_defective() {
        let fam = OperatorFamily::from_dense_fn("identity", |n| {
            let id = OperatorRep::identity(BasisTag::Abstract(n));
            (id.clone(), id)
        });
        let rep = nonclosedness_witness(&fam, &[10, 40]).unwrap();
        assert!(!rep.closure_defective, "slope {}", rep.divergence_slope);
        assert!(rep.image_norm.iter().all(|&v| v == 0.0));
        // ||x||^2 = sum n^{-2} is bounded by pi^2/6
        assert!(rep.x_norm_sq.iter().all(|&v| v < 1.6450));
    }

    #[test]
    fn integer_diagonal_family_has_unit_slope() {
        let fam = OperatorFamily::diag_modes("diag(n)");
        let rep = nonclosedness_witness(&fam, &[50, 100]).unwrap();
        // ||A x_N||^2 = sum_{n<=N} (n / n)^2 = N, so the slope is exactly 1
        assert!((rep.divergence_slope - 1.0).abs() < 1e-12);
        assert!(rep.closure_defective);
        assert!(rep.image_norm.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn non_nested_family_is_rejected() {
        let fam = OperatorFamily::from_dense_fn("shifting", |n| {
            // spectrum {n, ..., 2n-1} is NOT contained in the next member's
            let d = CMat::diag(
                &(0..n)
                    .map(|k| operator_core::c64((n + k) as f64, 0.0))
                    .collect::<Vec<_>>(),
            );
            let op = OperatorRep::from_matrix(d);
            (op.clone(), op)
        });
        assert!(nonclosedness_witness(&fam, &[4, 8]).is_err());
    }
}
