//! Numerical relative-bound and accretivity machinery for operator pairs
//! observed through nested finite truncations.
//!
//! The relative bound of `S` with respect to `T` is read operationally as
//! `lim_{lambda -> inf} sup_N ||S_N (T_N - i lambda)^{-1}||` on finite
//! schedules, with explicit tail-gap reporting; classifications carry a
//! documented decision band (see [`estimate`]). Grid points are independent
//! pure computations and deterministic given the schedules.

pub mod accretive;
pub mod error;
pub mod estimate;
pub mod family;
pub mod hypothesis;
pub mod witness;

pub use accretive::{
    accretive_resolvent_inequality, accretivity_check, AccretivityReport, ResolventGapReport,
};
pub use error::{BoundsError, Result};
pub use estimate::{
    relative_bound_estimate, BoundClass, RelBoundEstimate, DEFAULT_LAMBDA_SCHEDULE,
    DEFAULT_N_SCHEDULE, ONE_BAND, TAIL_GAP_TOL, ZERO_BAND,
};
pub use family::{resolvent_norm, OperatorFamily, RESOLVENT_MARGIN_TOL};
pub use hypothesis::{
    perturbation_hypothesis_report, BlockFamily, HypothesisReport, HypothesisStatus,
};
pub use witness::{nonclosedness_witness, WitnessReport, DEFECT_SLOPE_TOL};
