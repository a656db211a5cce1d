//! Hypothesis evaluation for the perturbation-type sufficient conditions.
//!
//! Each sufficient condition combines relative-bound classifications of the
//! four pairings (C over A, B over A*, A over C, A* over B) with a side
//! condition on `A` (none, accretivity of `A` or `-A`, or self-adjointness).
//! Whenever a condition's hypotheses are met numerically, the conclusion
//! (symplectic self-adjointness of `H`) is cross-checked against the direct
//! criterion; a satisfied condition with a failing conclusion would be a
//! soundness bug, so the report carries that flag explicitly.

use crate::accretive::accretivity_check;
use crate::error::{BoundsError, Result};
use crate::estimate::{relative_bound_estimate, RelBoundEstimate};
use crate::family::OperatorFamily;
use block_matrix::{symplectic_selfadjoint_direct, HamiltonianOp};
use operator_core::{c64, BasisTag, CMat, OperatorRep};
use serde::Serialize;
use std::sync::Arc;

type DenseBlocksGen = dyn Fn(usize) -> (OperatorRep, OperatorRep, OperatorRep) + Send + Sync;
type ModeBlocksGen = dyn Fn(usize) -> Vec<(CMat, CMat, CMat)> + Send + Sync;

#[derive(Clone)]
enum Backing {
    Dense(Arc<DenseBlocksGen>),
    Modes(Arc<ModeBlocksGen>),
}

/// Family of Hamiltonian block triples `(A_N, B_N, C_N)`.
#[derive(Clone)]
pub struct BlockFamily {
    label: String,
    backing: Backing,
    dense_override: Option<Arc<DenseBlocksGen>>,
}

impl BlockFamily {
    pub fn from_dense_fn(
        label: impl Into<String>,
        f: impl Fn(usize) -> (OperatorRep, OperatorRep, OperatorRep) + Send + Sync + 'static,
    ) -> Self {
        BlockFamily {
            label: label.into(),
            backing: Backing::Dense(Arc::new(f)),
            dense_override: None,
        }
    }

    /// Per-mode triples `(A_k, B_k, C_k)`; the member at truncation `N` is
    /// the blockwise direct sum.
    pub fn from_mode_fn(
        label: impl Into<String>,
        f: impl Fn(usize) -> Vec<(CMat, CMat, CMat)> + Send + Sync + 'static,
    ) -> Self {
        BlockFamily {
            label: label.into(),
            backing: Backing::Modes(Arc::new(f)),
            dense_override: None,
        }
    }

    /// Authoritative dense assembly for a mode-backed family; the mode split
    /// must be a unitary permutation of it.
    pub fn with_dense(
        mut self,
        f: impl Fn(usize) -> (OperatorRep, OperatorRep, OperatorRep) + Send + Sync + 'static,
    ) -> Self {
        self.dense_override = Some(Arc::new(f));
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dense_triple(&self, n: usize) -> (OperatorRep, OperatorRep, OperatorRep) {
        if let Some(f) = &self.dense_override {
            return f(n);
        }
        match &self.backing {
            Backing::Dense(f) => f(n),
            Backing::Modes(f) => {
                let blocks = f(n);
                let dim: usize = blocks.iter().map(|(a, _, _)| a.nrows()).sum();
                let mut am = CMat::zeros(dim, dim);
                let mut bm = CMat::zeros(dim, dim);
                let mut cm = CMat::zeros(dim, dim);
                let mut at = 0;
                for (a, b, c) in &blocks {
                    am.set_block(at, at, a);
                    bm.set_block(at, at, b);
                    cm.set_block(at, at, c);
                    at += a.nrows();
                }
                let tag = BasisTag::Abstract(dim);
                let mk = |m: CMat| OperatorRep::new(m, tag.clone(), tag.clone(), n).unwrap();
                (mk(am), mk(bm), mk(cm))
            }
        }
    }

    /// The four pair families the hypotheses quantify over.
    pub fn pair_c_on_a(&self) -> OperatorFamily {
        self.pair("C over A", |a, b, c| {
            let _ = b;
            (c, a)
        })
    }

    pub fn pair_b_on_astar(&self) -> OperatorFamily {
        self.pair("B over A*", |a, b, c| {
            let _ = c;
            let astar = a.adjoint();
            (b, astar)
        })
    }

    pub fn pair_a_on_c(&self) -> OperatorFamily {
        self.pair("A over C", |a, b, c| {
            let _ = b;
            (a, c)
        })
    }

    pub fn pair_astar_on_b(&self) -> OperatorFamily {
        self.pair("A* over B", |a, b, c| {
            let _ = c;
            (a.adjoint(), b)
        })
    }

    fn pair(
        &self,
        pairing: &str,
        select: impl Fn(CMat, CMat, CMat) -> (CMat, CMat) + Send + Sync + Copy + 'static,
    ) -> OperatorFamily {
        let label = format!("{}: {}", self.label, pairing);
        match &self.backing {
            Backing::Dense(f) => {
                let f = Arc::clone(f);
                OperatorFamily::from_dense_fn(label, move |n| {
                    let (a, b, c) = f(n);
                    let tag = a.domain().clone();
                    let (s, t) = select(
                        a.matrix().clone(),
                        b.matrix().clone(),
                        c.matrix().clone(),
                    );
                    (
                        OperatorRep::new(s, tag.clone(), tag.clone(), n).unwrap(),
                        OperatorRep::new(t, tag.clone(), tag, n).unwrap(),
                    )
                })
            }
            Backing::Modes(f) => {
                let f = Arc::clone(f);
                OperatorFamily::from_mode_fn(label, move |n| {
                    f(n)
                        .into_iter()
                        .map(|(a, b, c)| select(a, b, c))
                        .collect()
                })
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HypothesisStatus {
    /// Functional name of the sufficient condition.
    pub name: &'static str,
    /// Human-readable statement of the hypotheses.
    pub hypotheses: String,
    pub satisfied: bool,
    /// Direct-check outcome, evaluated when the hypotheses hold.
    pub conclusion_pass: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HypothesisReport {
    pub family: String,
    pub bound_c_on_a: RelBoundEstimate,
    pub bound_b_on_astar: RelBoundEstimate,
    pub bound_a_on_c: RelBoundEstimate,
    pub bound_astar_on_b: RelBoundEstimate,
    pub a_self_adjoint: bool,
    pub a_or_neg_a_accretive: bool,
    pub direct_deviation: f64,
    pub direct_pass: bool,
    pub criteria: Vec<HypothesisStatus>,
    /// No satisfied condition had a failing conclusion.
    pub sound: bool,
}

impl HypothesisReport {
    pub fn status(&self, name: &str) -> Option<&HypothesisStatus> {
        self.criteria.iter().find(|s| s.name == name)
    }
}

/// Evaluate every perturbation-type sufficient condition for `h`, using
/// `family` as the truncation family of its blocks.
pub fn perturbation_hypothesis_report(
    h: &HamiltonianOp,
    family: &BlockFamily,
    lambda_schedule: &[f64],
    n_schedule: &[usize],
) -> Result<HypothesisReport> {
    // the family must reproduce the blocks of `h` at its own truncation
    let base_n = h.a().truncation();
    let (fa, fb, fc) = family.dense_triple(base_n);
    let dev = |x: &OperatorRep, y: &OperatorRep| -> f64 {
        if x.dim_domain() != y.dim_domain() || x.dim_codomain() != y.dim_codomain() {
            return f64::INFINITY;
        }
        x.matrix().sub(y.matrix()).frobenius_norm() / x.frobenius_norm().max(1.0)
    };
    let worst = dev(&fa, h.a()).max(dev(&fb, h.b())).max(dev(&fc, h.c()));
    if worst > 1e-12 {
        return Err(BoundsError::FamilyInconsistent {
            label: family.label().to_string(),
            n: base_n,
            deviation: worst,
        });
    }

    let bound_c_on_a = relative_bound_estimate(&family.pair_c_on_a(), lambda_schedule, n_schedule)?;
    let bound_b_on_astar =
        relative_bound_estimate(&family.pair_b_on_astar(), lambda_schedule, n_schedule)?;
    let bound_a_on_c = relative_bound_estimate(&family.pair_a_on_c(), lambda_schedule, n_schedule)?;
    let bound_astar_on_b =
        relative_bound_estimate(&family.pair_astar_on_b(), lambda_schedule, n_schedule)?;

    let a = h.a();
    let a_self_adjoint = a.is_hermitian(1e-10);
    let acc_a = accretivity_check(a)?;
    let acc_neg = accretivity_check(&a.scale(c64(-1.0, 0.0)))?;
    let a_or_neg_a_accretive = acc_a.is_accretive || acc_neg.is_accretive;

    let direct = symplectic_selfadjoint_direct(h);

    let ca = bound_c_on_a.classification;
    let bas = bound_b_on_astar.classification;
    let ac = bound_a_on_c.classification;
    let asb = bound_astar_on_b.classification;

    let defs: Vec<(&'static str, String, bool)> = vec![
        (
            "both_lt_one_diag",
            "rel-bound(C; A) < 1 and rel-bound(B; A*) < 1".into(),
            ca.strictly_lt_one() && bas.strictly_lt_one(),
        ),
        (
            "both_lt_one_offdiag",
            "rel-bound(A; C) < 1 and rel-bound(A*; B) < 1".into(),
            ac.strictly_lt_one() && asb.strictly_lt_one(),
        ),
        (
            "rel_bound_zero_c",
            "rel-bound(C; A) = 0".into(),
            ca.is_zero(),
        ),
        (
            "rel_bound_zero_b",
            "rel-bound(B; A*) = 0".into(),
            bas.is_zero(),
        ),
        (
            "accretive_mixed_1",
            "A or -A accretive, rel-bound(C; A) < 1, rel-bound(B; A*) <= 1".into(),
            a_or_neg_a_accretive && ca.strictly_lt_one() && bas.at_most_one(),
        ),
        (
            "accretive_mixed_2",
            "A or -A accretive, rel-bound(C; A) <= 1, rel-bound(B; A*) < 1".into(),
            a_or_neg_a_accretive && ca.at_most_one() && bas.strictly_lt_one(),
        ),
        (
            "selfadjoint_mixed_1",
            "A self-adjoint, rel-bound(C; A) < 1, rel-bound(B; A*) <= 1".into(),
            a_self_adjoint && ca.strictly_lt_one() && bas.at_most_one(),
        ),
        (
            "selfadjoint_mixed_2",
            "A self-adjoint, rel-bound(C; A) <= 1, rel-bound(B; A*) < 1".into(),
            a_self_adjoint && ca.at_most_one() && bas.strictly_lt_one(),
        ),
        (
            "offdiag_mixed_1",
            "rel-bound(A; C) < 1 and rel-bound(A*; B) <= 1".into(),
            ac.strictly_lt_one() && asb.at_most_one(),
        ),
        (
            "offdiag_mixed_2",
            "rel-bound(A; C) <= 1 and rel-bound(A*; B) < 1".into(),
            ac.at_most_one() && asb.strictly_lt_one(),
        ),
    ];

    let criteria: Vec<HypothesisStatus> = defs
        .into_iter()
        .map(|(name, hypotheses, satisfied)| HypothesisStatus {
            name,
            hypotheses,
            satisfied,
            conclusion_pass: satisfied.then_some(direct.pass),
        })
        .collect();

    let sound = criteria
        .iter()
        .all(|s| !s.satisfied || s.conclusion_pass == Some(true));

    Ok(HypothesisReport {
        family: family.label().to_string(),
        bound_c_on_a,
        bound_b_on_astar,
        bound_a_on_c,
        bound_astar_on_b,
        a_self_adjoint,
        a_or_neg_a_accretive,
        direct_deviation: direct.deviation,
        direct_pass: direct.pass,
        criteria,
        sound,
    })
}
