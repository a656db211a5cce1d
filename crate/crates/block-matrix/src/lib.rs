//! 2x2 block operator matrices on finite spectral truncations: the unit
//! symplectic operator, Frobenius-Schur factorizations and Schur complements,
//! and the full family of symplectic self-adjointness criteria with
//! machine-checkable deviations.

pub mod adjoint_laws;
pub mod block;
pub mod criteria;
pub mod error;
pub mod hamiltonian;
pub mod mirror;
pub mod random;
pub mod schur;
pub mod symplectic;

pub use adjoint_laws::{adjoint_law_checks, AdjointLawReport, ADJOINT_LAW_TOL};
pub use block::BlockOp;
pub use criteria::{
    diag_domain_criterion, jh_factorization, offdiag_domain_criterion, CriterionReport,
    JhFactorizationPair,
};
pub use error::{BlockError, Result};
pub use hamiltonian::{DomainShape, HamiltonianOp, DEFAULT_STRUCTURE_TOL};
pub use mirror::mirror_hamiltonian;
pub use schur::{
    frobenius_schur_factorize, resolvent_inverse, schur_complement, scalar_block_op,
    FactorizationKind, FactorizationResult, SchurComplementEval, SchurKind,
    RESOLVENT_MARGIN_TOL,
};
pub use symplectic::{range_criterion, symplectic_selfadjoint_direct, unit_symplectic, DirectReport, RangeReport};
