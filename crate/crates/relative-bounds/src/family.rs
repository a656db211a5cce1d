//! Families of operator pairs observed through nested truncations.
//!
//! A family stands in for a single pair `(S, T)` of possibly unbounded
//! operators: `generator(N)` produces the truncation-`N` matrices. Families
//! whose members are mode-diagonal (direct sums of small fixed-size blocks)
//! can declare that structure; resolvent norms then reduce to a maximum over
//! blocks, which keeps the documented schedules (`N` up to 4096) cheap. The
//! dense and mode paths agree exactly because the mode split is a unitary
//! permutation.

use crate::error::{BoundsError, Result};
use operator_core::{c64, eig, svd, BasisTag, CMat, Complex64, OperatorRep};
use std::sync::Arc;

/// Relative singular-value margin below which a shift counts as spectrum.
pub const RESOLVENT_MARGIN_TOL: f64 = 1e-8;

type DenseGen = dyn Fn(usize) -> (OperatorRep, OperatorRep) + Send + Sync;
type ModeGen = dyn Fn(usize) -> Vec<(CMat, CMat)> + Send + Sync;

#[derive(Clone)]
enum Backing {
    Dense(Arc<DenseGen>),
    Modes(Arc<ModeGen>),
}

#[derive(Clone)]
pub struct OperatorFamily {
    label: String,
    backing: Backing,
    dense_override: Option<Arc<DenseGen>>,
}

impl OperatorFamily {
    pub fn from_dense_fn(
        label: impl Into<String>,
        f: impl Fn(usize) -> (OperatorRep, OperatorRep) + Send + Sync + 'static,
    ) -> Self {
        OperatorFamily {
            label: label.into(),
            backing: Backing::Dense(Arc::new(f)),
            dense_override: None,
        }
    }

    /// `f(N)` returns the per-mode blocks `(S_k, T_k)`; the family member at
    /// truncation `N` is the direct sum of the blocks.
    pub fn from_mode_fn(
        label: impl Into<String>,
        f: impl Fn(usize) -> Vec<(CMat, CMat)> + Send + Sync + 'static,
    ) -> Self {
        OperatorFamily {
            label: label.into(),
            backing: Backing::Modes(Arc::new(f)),
            dense_override: None,
        }
    }

    /// Declare the authoritative dense assembly for a mode-backed family.
    /// The mode split is required to be a unitary permutation of this dense
    /// form, so norms and spectra agree between the two paths; coordinates
    /// (used by the divergence witness) follow the dense form.
    pub fn with_dense(
        mut self,
        f: impl Fn(usize) -> (OperatorRep, OperatorRep) + Send + Sync + 'static,
    ) -> Self {
        self.dense_override = Some(Arc::new(f));
        self
    }

    /// Constant family: the same pair at every truncation.
    pub fn constant(label: impl Into<String>, s: OperatorRep, t: OperatorRep) -> Self {
        OperatorFamily::from_dense_fn(label, move |_| (s.clone(), t.clone()))
    }

    pub fn is_mode_backed(&self) -> bool {
        matches!(self.backing, Backing::Modes(_))
    }

    /// `S_N = T_N = diag(1, 2, ..., N)`.
    pub fn diag_modes(label: impl Into<String>) -> Self {
        OperatorFamily::from_mode_fn(label, |n| {
            (1..=n)
                .map(|k| {
                    let d = CMat::diag(&[c64(k as f64, 0.0)]);
                    (d.clone(), d)
                })
                .collect()
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Dense pair at truncation `N` (assembles mode blocks when needed).
    pub fn dense_pair(&self, n: usize) -> (OperatorRep, OperatorRep) {
        if let Some(f) = &self.dense_override {
            return f(n);
        }
        match &self.backing {
            Backing::Dense(f) => f(n),
            Backing::Modes(f) => {
                let blocks = f(n);
                let dim: usize = blocks.iter().map(|(_, t)| t.nrows()).sum();
                let mut s = CMat::zeros(dim, dim);
                let mut t = CMat::zeros(dim, dim);
                let mut at = 0;
                for (sb, tb) in &blocks {
                    s.set_block(at, at, sb);
                    t.set_block(at, at, tb);
                    at += tb.nrows();
                }
                let tag = BasisTag::Abstract(dim);
                (
                    OperatorRep::new(s, tag.clone(), tag.clone(), n).expect("mode dims consistent"),
                    OperatorRep::new(t, tag.clone(), tag, n).expect("mode dims consistent"),
                )
            }
        }
    }

    /// `a(lambda, N) = || S_N (T_N - i lambda)^{-1} ||_2`.
    pub fn resolvent_norm_at(&self, n: usize, lambda: f64) -> Result<f64> {
        let shift = c64(0.0, lambda);
        match &self.backing {
            Backing::Dense(f) => {
                let (s, t) = f(n);
                resolvent_norm(&s, &t, shift).map_err(|e| attach_n(e, n))
            }
            Backing::Modes(f) => {
                let mut worst: f64 = 0.0;
                for (sb, tb) in f(n) {
                    let v = resolvent_norm_mats(&sb, &tb, shift).map_err(|e| attach_n(e, n))?;
                    worst = worst.max(v);
                }
                Ok(worst)
            }
        }
    }

    /// Spectrum of the base operator `T_N` (sorted ascending real parts; the
    /// base operators of the built-in families are Hermitian).
    pub fn base_spectrum(&self, n: usize) -> Result<Vec<f64>> {
        match &self.backing {
            Backing::Dense(f) => {
                let (_, t) = f(n);
                let fro = t.frobenius_norm().max(1e-300);
                let defect = t.matrix().hermitian_defect() / fro;
                if defect > 1e-10 {
                    return Err(BoundsError::NotHermitian {
                        label: self.label.clone(),
                        n,
                        defect,
                    });
                }
                let (vals, _) = eig::hermitian_eig(&t.matrix().hermitian_part())?;
                Ok(vals)
            }
            Backing::Modes(f) => {
                let mut vals = Vec::new();
                for (_, tb) in f(n) {
                    let fro = tb.frobenius_norm().max(1e-300);
                    if tb.hermitian_defect() / fro > 1e-10 {
                        return Err(BoundsError::NotHermitian {
                            label: self.label.clone(),
                            n,
                            defect: tb.hermitian_defect() / fro,
                        });
                    }
                    let (mut v, _) = eig::hermitian_eig(&tb.hermitian_part())?;
                    vals.append(&mut v);
                }
                vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
                Ok(vals)
            }
        }
    }

    /// Verify nestedness of base spectra along the schedule: every eigenvalue
    /// at truncation `N` must reappear at `N' > N` within `tol`.
    pub fn check_nested(&self, schedule: &[usize], tol: f64) -> Result<()> {
        for w in schedule.windows(2) {
            let (n, n_next) = (w[0], w[1]);
            let small = self.base_spectrum(n)?;
            let large = self.base_spectrum(n_next)?;
            let scale = large.iter().fold(1.0f64, |m, v| m.max(v.abs()));
            // multiset containment with multiplicity via two sorted walks
            let mut used = vec![false; large.len()];
            for &v in &small {
                let mut best = f64::INFINITY;
                let mut best_j = None;
                for (j, &u) in large.iter().enumerate() {
                    if used[j] {
                        continue;
                    }
                    let d = (u - v).abs();
                    if d < best {
                        best = d;
                        best_j = Some(j);
                    }
                }
                match best_j {
                    Some(j) if best <= tol * scale => used[j] = true,
                    _ => {
                        return Err(BoundsError::NotNested {
                            label: self.label.clone(),
                            n,
                            n_next,
                            value: v,
                            distance: best,
                        })
                    }
                }
            }
        }
        Ok(())
    }
}

fn attach_n(e: BoundsError, n: usize) -> BoundsError {
    match e {
        BoundsError::LambdaInSpectrum { lambda, margin, .. } => {
            BoundsError::LambdaInSpectrum { lambda, n, margin }
        }
        other => other,
    }
}

/// `|| S (T - lambda)^{-1} ||_2` with a resolvent-margin guard.
pub fn resolvent_norm(s: &OperatorRep, t: &OperatorRep, lambda: Complex64) -> Result<f64> {
    resolvent_norm_mats(s.matrix(), t.matrix(), lambda)
}

pub fn resolvent_norm_mats(s: &CMat, t: &CMat, lambda: Complex64) -> Result<f64> {
    let shifted = t.shift(lambda);
    let svals = svd::singular_values(&shifted)?;
    let smax = svals.first().copied().unwrap_or(0.0);
    let smin = svals.last().copied().unwrap_or(0.0);
    if smin <= RESOLVENT_MARGIN_TOL * smax.max(1.0) {
        return Err(BoundsError::LambdaInSpectrum {
            lambda: format!("{lambda}"),
            n: 0,
            margin: smin,
        });
    }
    if s.max_abs() == 0.0 {
        return Ok(0.0);
    }
    let inv = operator_core::lu::inverse(&shifted)?;
    let prod = s.matmul(&inv);
    Ok(svd::singular_values(&prod)?
        .first()
        .copied()
        .unwrap_or(0.0))
}
