//! The simply-supported rectangular plate bending problem as a Hamiltonian
//! system, discretized exactly in the transverse sine/cosine families.
//!
//! The governing fourth-order equation turns into a first-order evolution
//! `du/dx = H u + f` whose generator splits into independent per-mode blocks;
//! at truncation `N` the spectrum is exactly `{+-n pi} U {0}` with algebraic
//! multiplicity 2, the constant mode carries the single Jordan block, and
//! polynomial manufactured solutions make the evolution and displacement
//! reconstruction checkable to roundoff.

pub mod error;
pub mod families;
pub mod ivp;
pub mod jordan;
pub mod manufactured;
pub mod modes;
pub mod ops;
pub mod poly;
pub mod problem;
pub mod reconstruct;
pub mod spectrum;

pub use error::{PlateError, Result};
pub use families::{
    mirror_block_family, mirror_plate_hamiltonian, plate_block_family, plate_identity_family,
    plate_self_family, plate_zero_family,
};
pub use ivp::{gauss_legendre, solve_mode_ivp, Forcing, ModeTrajectory};
pub use jordan::{jordan_chains, JordanChainReport, RANK_TOL};
pub use manufactured::{manufactured_fields, ManufacturedSolution, MAX_PROFILE_DEGREE};
pub use modes::{mode_decompose, mode_eigenvalues, mode_indices, reassemble, ModeSystem};
pub use ops::{build_a, build_plate_hamiltonian, build_t0, build_t0_adjoint, plate_space};
pub use poly::Poly;
pub use problem::{EdgeData, PlateProblem, StateVector};
pub use reconstruct::{pde_residual, reconstruct_displacement, Displacement, COLLOCATION_POINTS};
pub use spectrum::{
    hsquared_check, reference_spectrum, spectrum, symmetry_defect, HSquaredReport, SpectrumReport,
};
