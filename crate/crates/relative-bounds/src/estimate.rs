//! The relative-bound estimator.
//!
//! The relative bound of `S` with respect to `T` is estimated operationally
//! as the double limit `lim_{lambda -> inf} sup_N ||S_N (T_N - i lambda)^{-1}||`,
//! evaluated on finite schedules. The limit order matters and is fixed as
//! sup-over-N first, then large-lambda: reversing it collapses the mirrored
//! sharpness family to 0.
//!
//! On a finite grid the per-lambda sup over N is approximated by the last
//! grid value of the (monotone, for nested families) N-tail, with the last
//! increment reported as the tail gap. Lambdas whose tail has not converged
//! (gap above [`TAIL_GAP_TOL`]) underestimate the sup and are excluded from
//! the final minimum over lambda unless no lambda converged, in which case
//! the fallback is flagged.

use crate::error::{BoundsError, Result};
use crate::family::OperatorFamily;
use serde::Serialize;

/// Absolute tail-gap threshold for treating a per-lambda N-tail as converged,
/// aligned with the classification band width.
pub const TAIL_GAP_TOL: f64 = 0.05;

/// Classification band: below this counts as relative bound 0.
pub const ZERO_BAND: f64 = 0.05;

/// Half-width of the band around 1 inside which a bound is reported as
/// "at most 1" but not "strictly below 1".
pub const ONE_BAND: f64 = 0.05;

/// Default truncation schedule.
pub const DEFAULT_N_SCHEDULE: [usize; 4] = [64, 256, 1024, 4096];

/// Default spectral-parameter schedule (purely imaginary shifts `i lambda`).
pub const DEFAULT_LAMBDA_SCHEDULE: [f64; 4] = [1e1, 1e2, 1e3, 1e4];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundClass {
    /// Below the zero band (0.05).
    Zero,
    /// At least 0.05, below 0.95.
    LessThanOne,
    /// Inside [0.95, 1.05]: at most 1 within the band, not strictly below.
    ApproxOne,
    /// Above 1.05.
    GreaterThanOne,
}

impl BoundClass {
    pub fn classify(bound: f64) -> Self {
        if bound < ZERO_BAND {
            BoundClass::Zero
        } else if bound < 1.0 - ONE_BAND {
            BoundClass::LessThanOne
        } else if bound <= 1.0 + ONE_BAND {
            BoundClass::ApproxOne
        } else {
            BoundClass::GreaterThanOne
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, BoundClass::Zero)
    }

    /// Numerically certified strictly below 1.
    pub fn strictly_lt_one(self) -> bool {
        matches!(self, BoundClass::Zero | BoundClass::LessThanOne)
    }

    /// At most 1 (within the band).
    pub fn at_most_one(self) -> bool {
        !matches!(self, BoundClass::GreaterThanOne)
    }

    pub fn describe(self) -> &'static str {
        match self {
            BoundClass::Zero => "0 (below the 0.05 band)",
            BoundClass::LessThanOne => "<1",
            BoundClass::ApproxOne => "~1: at most 1 within the band, not strictly <1",
            BoundClass::GreaterThanOne => ">1",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelBoundEstimate {
    pub label: String,
    pub lambda_schedule: Vec<f64>,
    pub n_schedule: Vec<usize>,
    /// `grid[i][j] = a(lambda_i, N_j)`.
    pub grid: Vec<Vec<f64>>,
    /// Per-lambda tail value of the monotone N-sequence.
    pub n_limit: Vec<f64>,
    /// Per-lambda last increment of the N-sequence.
    pub tail_gap: Vec<f64>,
    pub tail_converged: Vec<bool>,
    /// Minimum of `n_limit` over tail-converged lambdas.
    pub extrapolated_bound: f64,
    /// True when no lambda converged and the minimum ranged over all of them.
    pub used_unconverged_fallback: bool,
    /// `a(lambda, N)` nondecreasing in `N` for every lambda.
    pub monotone_in_n: bool,
    /// `n_limit` nonincreasing in lambda.
    pub nonincreasing_in_lambda: bool,
    pub classification: BoundClass,
}

pub fn relative_bound_estimate(
    family: &OperatorFamily,
    lambda_schedule: &[f64],
    n_schedule: &[usize],
) -> Result<RelBoundEstimate> {
    if lambda_schedule.is_empty() || n_schedule.is_empty() {
        return Err(BoundsError::InvalidSchedule("schedules must be nonempty".into()));
    }
    if lambda_schedule.windows(2).any(|w| w[0] >= w[1]) || lambda_schedule[0] <= 0.0 {
        return Err(BoundsError::InvalidSchedule(
            "lambda schedule must be positive and strictly increasing".into(),
        ));
    }
    if n_schedule.windows(2).any(|w| w[0] >= w[1]) || n_schedule[0] == 0 {
        return Err(BoundsError::InvalidSchedule(
            "N schedule must be positive and strictly increasing".into(),
        ));
    }

    let mut grid = Vec::with_capacity(lambda_schedule.len());
    for &lam in lambda_schedule {
        let mut row = Vec::with_capacity(n_schedule.len());
        for &n in n_schedule {
            row.push(family.resolvent_norm_at(n, lam)?);
        }
        grid.push(row);
    }

    let mut n_limit = Vec::new();
    let mut tail_gap = Vec::new();
    let mut tail_converged = Vec::new();
    for row in &grid {
        let last = *row.last().unwrap();
        let gap = if row.len() >= 2 {
            last - row[row.len() - 2]
        } else {
            0.0
        };
        n_limit.push(last);
        tail_gap.push(gap);
        tail_converged.push(gap.abs() <= TAIL_GAP_TOL);
    }

    let slack = 1e-9;
    let monotone_in_n = grid
        .iter()
        .all(|row| row.windows(2).all(|w| w[1] >= w[0] - slack * w[0].abs().max(1.0)));
    let nonincreasing_in_lambda = n_limit
        .windows(2)
        .all(|w| w[1] <= w[0] + slack * w[0].abs().max(1.0));

    let converged_min = n_limit
        .iter()
        .zip(&tail_converged)
        .filter(|(_, &c)| c)
        .map(|(&v, _)| v)
        .fold(f64::INFINITY, f64::min);
    let (extrapolated_bound, used_unconverged_fallback) = if converged_min.is_finite() {
        (converged_min, false)
    } else {
        (
            n_limit.iter().copied().fold(f64::INFINITY, f64::min),
            true,
        )
    };

    Ok(RelBoundEstimate {
        label: family.label().to_string(),
        lambda_schedule: lambda_schedule.to_vec(),
        n_schedule: n_schedule.to_vec(),
        grid,
        n_limit,
        tail_gap,
        tail_converged,
        extrapolated_bound,
        used_unconverged_fallback,
        monotone_in_n,
        nonincreasing_in_lambda,
        classification: BoundClass::classify(extrapolated_bound),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use operator_core::{c64, BasisTag, CMat, OperatorRep};

    #[test]
    fn zero_family_reports_exact_zero() {
        let fam = OperatorFamily::from_dense_fn("zero vs diag", |n| {
            let t = CMat::diag(&(1..=n).map(|k| c64(k as f64, 0.0)).collect::<Vec<_>>());
            (
                OperatorRep::zeros(BasisTag::Abstract(n), BasisTag::Abstract(n)),
                OperatorRep::from_matrix(t),
            )
        });
        let est = relative_bound_estimate(&fam, &[10.0, 100.0], &[4, 8]).unwrap();
        assert_eq!(est.extrapolated_bound, 0.0);
        assert_eq!(est.classification, BoundClass::Zero);
        assert!(!est.used_unconverged_fallback);
        assert!(est.monotone_in_n);
    }

    #[test]
    fn identity_family_decays_like_inverse_lambda() {
        let fam = OperatorFamily::from_dense_fn("identity vs diag", |n| {
            let t = CMat::diag(&(1..=n).map(|k| c64(k as f64, 0.0)).collect::<Vec<_>>());
            (
                OperatorRep::identity(BasisTag::Abstract(n)),
                OperatorRep::from_matrix(t),
            )
        });
        // ||(T - i lam)^{-1}|| = 1 / sqrt(1 + lam^2) for T = diag(1..n)
        let est = relative_bound_estimate(&fam, &[10.0, 100.0], &[4, 8]).unwrap();
        let expect = 1.0 / (1.0f64 + 100.0 * 100.0).sqrt();
        assert!((est.extrapolated_bound - expect).abs() < 1e-12);
        assert!(est.classification.is_zero());
        assert!(est.nonincreasing_in_lambda);
    }

    #[test]
    fn diag_self_family_tends_to_one() {
        // S = T = diag(1..N): a(lam, N) = N / sqrt(N^2 + lam^2) -> 1
        let fam = OperatorFamily::diag_modes("diag self");
        let est = relative_bound_estimate(&fam, &[2.0, 4.0], &[64, 256, 1024]).unwrap();
        assert!(est.extrapolated_bound > 0.98 && est.extrapolated_bound <= 1.0);
        assert_eq!(est.classification, BoundClass::ApproxOne);
        assert!(est.monotone_in_n);
    }

    #[test]
    fn schedules_validated() {
        let fam = OperatorFamily::diag_modes("diag");
        assert!(relative_bound_estimate(&fam, &[], &[4]).is_err());
        assert!(relative_bound_estimate(&fam, &[1.0, 1.0], &[4]).is_err());
        assert!(relative_bound_estimate(&fam, &[1.0], &[4, 4]).is_err());
    }
}
