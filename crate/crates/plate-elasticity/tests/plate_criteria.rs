//! The symplectic self-adjointness criteria applied to plate instances, and
//! the relative-bound hypothesis machinery on the plate and mirrored
//! families.

use block_matrix::{
    diag_domain_criterion, frobenius_schur_factorize, jh_factorization, offdiag_domain_criterion,
    range_criterion, symplectic_selfadjoint_direct, HamiltonianOp, SchurKind,
};
use operator_core::c64;
use plate_elasticity::{
    build_plate_hamiltonian, mirror_block_family, mirror_plate_hamiltonian, plate_block_family,
    plate_identity_family, plate_self_family, plate_zero_family,
};
use relative_bounds::{
    nonclosedness_witness, perturbation_hypothesis_report, relative_bound_estimate,
};
use std::f64::consts::PI;

#[test]
fn plate_direct_and_range_at_n8() {
    let h = build_plate_hamiltonian(8);
    let direct = symplectic_selfadjoint_direct(&h);
    assert!(direct.pass);
    assert_eq!(direct.defect_abs, 0.0);
    let range = range_criterion(&h).unwrap();
    // blocks decouple: both margins are exactly 1 up to solver accuracy
    assert!(range.margin_plus >= 1.0 - 1e-10, "{}", range.margin_plus);
    assert!(range.margin_minus >= 1.0 - 1e-10, "{}", range.margin_minus);
    assert!(range.pass);
}

#[test]
fn plate_criteria_at_lambda_i() {
    let h = build_plate_hamiltonian(16);
    let lambda = c64(0.0, 1.0);
    let diag = diag_domain_criterion(&h, lambda).unwrap();
    assert!(diag.deviation_2 <= 1e-12, "{}", diag.deviation_2);
    assert!(diag.deviation_3 <= 1e-12, "{}", diag.deviation_3);
    let off = offdiag_domain_criterion(&h, lambda).unwrap();
    assert!(off.deviation_2 <= 1e-12, "{}", off.deviation_2);
    assert!(off.deviation_3 <= 1e-12, "{}", off.deviation_3);
}

#[test]
fn plate_jh_and_fs_factorizations_at_n8() {
    let h = build_plate_hamiltonian(8);
    let lambda = c64(0.0, 1.0);
    let pair = jh_factorization(&h, lambda).unwrap();
    assert!(pair.minus.residual <= 1e-12, "{}", pair.minus.residual);
    assert!(pair.plus.residual <= 1e-12, "{}", pair.plus.residual);
    // second-kind Frobenius-Schur factorization of the block form at lambda = i
    let f = frobenius_schur_factorize(&h.as_block_op(), lambda, SchurKind::Second).unwrap();
    assert!(f.residual <= 1e-12, "{}", f.residual);
    assert!(f.unit_triangular_defect() <= 1e-14);
}

#[test]
fn swapped_roles_offdiag_criterion() {
    // H' = J H J^{-1} reshaped as a Hamiltonian: (A', B', C') = (-A*, -C, -B);
    // for the plate this gives B' = 0, C' = -(A + 1)
    let n = 8;
    let h = build_plate_hamiltonian(n);
    let a_p = h.a().adjoint().scale(c64(-1.0, 0.0));
    let b_p = h.c().scale(c64(-1.0, 0.0));
    let c_p = h.b().scale(c64(-1.0, 0.0));
    let swapped = HamiltonianOp::with_default_tol(a_p.clone(), b_p, c_p).unwrap();
    // cross-check the reshaping against the dense recomputation J H J^{-1}
    let j = block_matrix::unit_symplectic(h.space());
    let jhj = j
        .compose(&h.dense())
        .unwrap()
        .compose(&j.inverse().unwrap())
        .unwrap();
    let dev = jhj
        .matrix()
        .sub(swapped.dense().matrix())
        .frobenius_norm();
    assert!(dev <= 1e-12 * jhj.frobenius_norm().max(1.0), "{dev}");
    let rep = offdiag_domain_criterion(&swapped, c64(0.0, 1.0)).unwrap();
    assert!(rep.deviation_2 <= 1e-12 && rep.deviation_3 <= 1e-12);
    assert!(symplectic_selfadjoint_direct(&swapped).pass);
}

#[test]
fn plate_hypothesis_report_small_schedules() {
    let n0 = 8;
    let h = build_plate_hamiltonian(n0);
    let rep = perturbation_hypothesis_report(
        &h,
        &plate_block_family(),
        &[10.0, 100.0, 1000.0],
        &[8, 64, 256],
    )
    .unwrap();
    // C = 0: relative bound exactly 0; B = A + 1 over A* = A: bound -> 1
    assert!(rep.bound_c_on_a.classification.is_zero());
    assert_eq!(rep.bound_c_on_a.extrapolated_bound, 0.0);
    assert!(rep.bound_b_on_astar.extrapolated_bound > 0.9);
    assert!(rep.bound_b_on_astar.classification.at_most_one());
    assert!(rep.a_self_adjoint);
    // plate A has symmetric spectrum: neither A nor -A accretive
    assert!(!rep.a_or_neg_a_accretive);
    assert!(rep.status("selfadjoint_mixed_1").unwrap().satisfied);
    assert_eq!(
        rep.status("selfadjoint_mixed_1").unwrap().conclusion_pass,
        Some(true)
    );
    assert!(rep.status("rel_bound_zero_c").unwrap().satisfied);
    assert!(!rep.status("accretive_mixed_1").unwrap().satisfied);
    assert!(rep.sound);
}

#[test]
fn mirror_family_no_strict_hypothesis_applies() {
    let n0 = 8;
    let h = mirror_plate_hamiltonian(n0);
    let rep = perturbation_hypothesis_report(
        &h,
        &mirror_block_family(),
        &[10.0, 100.0, 1000.0],
        &[8, 64, 256],
    )
    .unwrap();
    // all four bounds sit in the band at 1: nothing strict applies
    for est in [
        &rep.bound_c_on_a,
        &rep.bound_b_on_astar,
        &rep.bound_a_on_c,
        &rep.bound_astar_on_b,
    ] {
        assert!(
            est.classification.at_most_one() && !est.classification.strictly_lt_one(),
            "{}: bound {} classified {:?}",
            est.label,
            est.extrapolated_bound,
            est.classification
        );
    }
    for name in [
        "both_lt_one_diag",
        "both_lt_one_offdiag",
        "rel_bound_zero_c",
        "rel_bound_zero_b",
        "accretive_mixed_1",
        "accretive_mixed_2",
        "selfadjoint_mixed_1",
        "selfadjoint_mixed_2",
        "offdiag_mixed_1",
        "offdiag_mixed_2",
    ] {
        assert!(!rep.status(name).unwrap().satisfied, "{name} must not apply");
    }
    // yet the finite truncation itself is symplectic self-adjoint
    assert!(rep.direct_pass);
    assert!(rep.sound);
}

#[test]
fn witness_divergence_on_plate_family() {
    let rep = nonclosedness_witness(&plate_self_family(), &[25, 50, 100]).unwrap();
    for (k, &n) in rep.n_schedule.iter().enumerate() {
        let expect = PI * PI * n as f64;
        assert!(
            (rep.graph_norm_sq[k] - expect).abs() <= 1e-10 * expect,
            "N={n}: {} vs {expect}",
            rep.graph_norm_sq[k]
        );
        assert_eq!(rep.image_norm[k], 0.0, "H u_N must vanish exactly");
    }
    assert!(rep.closure_defective);
    assert!((rep.divergence_slope - PI * PI).abs() <= 1e-8);
    // ||x_N||^2 converges to pi^2/6
    assert!(rep.x_norm_sq.iter().all(|&v| v < PI * PI / 6.0 + 1e-6));
}

#[test]
fn adjoint_laws_on_the_derivative_pair() {
    // S = T0*, T = T0: the product S T is the sine-side Laplacian, while the
    // sum is shape-incompatible (N x (N+1) against (N+1) x N)
    let n = 8;
    let s = plate_elasticity::build_t0_adjoint(n);
    let t = plate_elasticity::build_t0(n);
    let rep = block_matrix::adjoint_law_checks(&s, &t).unwrap();
    assert_eq!(rep.product_deviation, Some(0.0), "diagonal structure is exact");
    assert!(rep.sum_deviation.is_none());
    assert!(rep.pass);
}

#[test]
fn plate_a_is_not_accretive() {
    // spectrum {+-n pi} U {0}: the Hermitian part's smallest eigenvalue is -N pi
    let a = plate_elasticity::build_a(8);
    let rep = relative_bounds::accretivity_check(&a).unwrap();
    assert!((rep.min_real_part + 8.0 * PI).abs() <= 1e-10, "{}", rep.min_real_part);
    assert!(!rep.is_accretive);
    let neg = relative_bounds::accretivity_check(&a.scale(c64(-1.0, 0.0))).unwrap();
    assert!(!neg.is_accretive);
}

#[test]
fn i_is_a_resolvent_point_of_the_plate_hamiltonian() {
    // sigma(H) is real, so i is in the resolvent set with eigenvalue distance
    // exactly 1. H is not normal, though: the singular-value margin of H - i
    // is set by the constant-mode Jordan block [[-i, 1], [0, -i]], whose
    // smallest singular value is (sqrt(5) - 1)/2. The margin is therefore
    // uniformly positive in N but strictly below the eigenvalue distance.
    let golden = (5.0f64.sqrt() - 1.0) / 2.0;
    for n in [8usize, 16] {
        let h = build_plate_hamiltonian(n);
        let shifted = h.dense().shift(c64(0.0, 1.0)).unwrap();
        let margin = shifted.smallest_singular_value();
        assert!((margin - golden).abs() <= 1e-10, "N={n}: {margin} vs {golden}");
        // eigenvalue distance from the mode path
        let spectrum_report = plate_elasticity::spectrum(&h).unwrap();
        let dist = spectrum_report
            .computed
            .iter()
            .map(|z| (z - c64(0.0, 1.0)).norm())
            .fold(f64::INFINITY, f64::min);
        assert!((dist - 1.0).abs() <= 1e-10, "{dist}");
    }
}

#[test]
fn zero_and_identity_plate_families() {
    let est = relative_bound_estimate(&plate_zero_family(), &[10.0, 100.0], &[8, 32]).unwrap();
    assert_eq!(est.extrapolated_bound, 0.0);
    let est = relative_bound_estimate(&plate_identity_family(), &[10.0, 100.0], &[8, 32]).unwrap();
    // 0 in sigma(A): a(lambda, N) = 1/lambda exactly
    assert!((est.n_limit[0] - 0.1).abs() <= 1e-12);
    assert!((est.extrapolated_bound - 0.01).abs() <= 1e-12);
}
