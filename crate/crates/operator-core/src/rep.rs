//! Basis-tagged operator representations.
//!
//! An [`OperatorRep`] is a dense complex matrix together with domain and
//! codomain basis tags and the truncation index it was built at — the finite
//! stand-in for an unbounded operator observed through a spectral truncation.
//! All bases are orthonormal, so the adjoint is the conjugate transpose.

use crate::basis::BasisTag;
use crate::eig::{general_eig, hermitian_eig};
use crate::error::{CoreError, Result};
use crate::expm;
use crate::lu::Lu;
use crate::matrix::{c64, vec_norm, CMat};
use crate::svd;
use num_complex::Complex64;

/// Default relative tolerance for Hermitian-structure checks.
pub const DEFAULT_HERMITIAN_TOL: f64 = 1e-10;

/// Relative eigenpair residual the solvers are held to.
pub const EIG_RESIDUAL_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct OperatorRep {
    mat: CMat,
    domain: BasisTag,
    codomain: BasisTag,
    truncation: usize,
}

impl OperatorRep {
    pub fn new(mat: CMat, domain: BasisTag, codomain: BasisTag, truncation: usize) -> Result<Self> {
        if mat.ncols() != domain.dim() || mat.nrows() != codomain.dim() {
            return Err(CoreError::DimensionError {
                expected: format!("{}x{} ({} -> {})", codomain.dim(), domain.dim(), domain, codomain),
                got: format!("{}x{}", mat.nrows(), mat.ncols()),
            });
        }
        if truncation == 0 {
            return Err(CoreError::DimensionError {
                expected: "positive truncation index".into(),
                got: "0".into(),
            });
        }
        Ok(OperatorRep {
            mat,
            domain,
            codomain,
            truncation,
        })
    }

    /// Square operator on an anonymous basis; truncation = dimension.
    pub fn from_matrix(mat: CMat) -> Self {
        let (nr, nc) = (mat.nrows(), mat.ncols());
        OperatorRep {
            mat,
            domain: BasisTag::Abstract(nc),
            codomain: BasisTag::Abstract(nr),
            truncation: nr.max(nc).max(1),
        }
    }

    pub fn identity(tag: BasisTag) -> Self {
        let d = tag.dim();
        OperatorRep {
            mat: CMat::identity(d),
            domain: tag.clone(),
            codomain: tag,
            truncation: d.max(1),
        }
    }

    pub fn zeros(domain: BasisTag, codomain: BasisTag) -> Self {
        let t = domain.dim().max(codomain.dim()).max(1);
        OperatorRep {
            mat: CMat::zeros(codomain.dim(), domain.dim()),
            domain,
            codomain,
            truncation: t,
        }
    }

    pub fn matrix(&self) -> &CMat {
        &self.mat
    }

    pub fn into_matrix(self) -> CMat {
        self.mat
    }

    pub fn domain(&self) -> &BasisTag {
        &self.domain
    }

    pub fn codomain(&self) -> &BasisTag {
        &self.codomain
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn with_truncation(mut self, n: usize) -> Self {
        self.truncation = n.max(1);
        self
    }

    pub fn dim_domain(&self) -> usize {
        self.mat.ncols()
    }

    pub fn dim_codomain(&self) -> usize {
        self.mat.nrows()
    }

    pub fn is_square(&self) -> bool {
        self.mat.is_square() && self.domain == self.codomain
    }

    /// Conjugate transpose with domain and codomain swapped.
    pub fn adjoint(&self) -> OperatorRep {
        OperatorRep {
            mat: self.mat.adjoint(),
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            truncation: self.truncation,
        }
    }

    /// `self \compose rhs` (apply `rhs` first). Codomain of `rhs` must equal
    /// the domain of `self`.
    pub fn compose(&self, rhs: &OperatorRep) -> Result<OperatorRep> {
        if rhs.codomain != self.domain {
            return Err(CoreError::BasisMismatch {
                left: self.domain.to_string(),
                right: rhs.codomain.to_string(),
            });
        }
        Ok(OperatorRep {
            mat: self.mat.matmul(&rhs.mat),
            domain: rhs.domain.clone(),
            codomain: self.codomain.clone(),
            truncation: self.truncation.max(rhs.truncation),
        })
    }

    pub fn add(&self, rhs: &OperatorRep) -> Result<OperatorRep> {
        if self.domain != rhs.domain || self.codomain != rhs.codomain {
            return Err(CoreError::BasisMismatch {
                left: format!("{} -> {}", self.domain, self.codomain),
                right: format!("{} -> {}", rhs.domain, rhs.codomain),
            });
        }
        Ok(OperatorRep {
            mat: self.mat.add(&rhs.mat),
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            truncation: self.truncation.max(rhs.truncation),
        })
    }

    pub fn sub(&self, rhs: &OperatorRep) -> Result<OperatorRep> {
        self.add(&rhs.scale(c64(-1.0, 0.0)))
    }

    pub fn scale(&self, s: Complex64) -> OperatorRep {
        OperatorRep {
            mat: self.mat.scale(s),
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            truncation: self.truncation,
        }
    }

    /// `self - lambda I` (square operators only).
    pub fn shift(&self, lambda: Complex64) -> Result<OperatorRep> {
        if !self.is_square() {
            return Err(CoreError::DimensionError {
                expected: "square operator".into(),
                got: format!("{} -> {}", self.domain, self.codomain),
            });
        }
        Ok(OperatorRep {
            mat: self.mat.shift(lambda),
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            truncation: self.truncation,
        })
    }

    pub fn inverse(&self) -> Result<OperatorRep> {
        let inv = Lu::new(&self.mat)?.inverse()?;
        Ok(OperatorRep {
            mat: inv,
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            truncation: self.truncation,
        })
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.mat.frobenius_norm()
    }

    /// Largest singular value.
    pub fn operator_norm(&self) -> f64 {
        if self.mat.nrows() == 0 || self.mat.ncols() == 0 {
            return 0.0;
        }
        svd::singular_values(&self.mat)
            .expect("Jacobi SVD converges")
            .first()
            .copied()
            .unwrap_or(0.0)
    }

    /// Smallest singular value.
    pub fn smallest_singular_value(&self) -> f64 {
        if self.mat.nrows() == 0 || self.mat.ncols() == 0 {
            return 0.0;
        }
        svd::singular_values(&self.mat)
            .expect("Jacobi SVD converges")
            .last()
            .copied()
            .unwrap_or(0.0)
    }

    /// All singular values, descending.
    pub fn singular_values(&self) -> Vec<f64> {
        svd::singular_values(&self.mat).expect("Jacobi SVD converges")
    }

    pub fn is_hermitian(&self, rel_tol: f64) -> bool {
        self.is_square() && self.mat.is_hermitian(rel_tol)
    }

    /// General (Schur-path) eigendecomposition.
    pub fn eig(&self) -> Result<SpectralDecomposition> {
        if !self.mat.is_square() {
            return Err(CoreError::DimensionError {
                expected: "square matrix".into(),
                got: format!("{}x{}", self.mat.nrows(), self.mat.ncols()),
            });
        }
        let (values, vectors) = general_eig(&self.mat)?;
        Ok(SpectralDecomposition::build(&self.mat, values, vectors, false))
    }

    /// Hermitian fast path; rejects non-Hermitian input.
    pub fn hermitian_eig(&self) -> Result<SpectralDecomposition> {
        let fro = self.mat.frobenius_norm().max(1e-300);
        let defect = self.mat.hermitian_defect() / fro;
        if !self.mat.is_square() || defect > DEFAULT_HERMITIAN_TOL {
            return Err(CoreError::NotHermitian {
                defect,
                tol: DEFAULT_HERMITIAN_TOL,
            });
        }
        let herm = self.mat.hermitian_part();
        let (values, vectors) = hermitian_eig(&herm)?;
        let cvals: Vec<Complex64> = values.iter().map(|&v| c64(v, 0.0)).collect();
        Ok(SpectralDecomposition::build(&self.mat, cvals, vectors, true))
    }

    pub fn expm(&self) -> Result<OperatorRep> {
        if !self.mat.is_square() {
            return Err(CoreError::DimensionError {
                expected: "square matrix".into(),
                got: format!("{}x{}", self.mat.nrows(), self.mat.ncols()),
            });
        }
        Ok(OperatorRep {
            mat: expm::expm(&self.mat)?,
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            truncation: self.truncation,
        })
    }
}

/// Eigenvalues, right eigenvectors and per-pair residuals.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<Complex64>,
    pub right_vectors: CMat,
    pub is_hermitian_path: bool,
    /// `||M v - lambda v|| / (||M||_F max(||v||, eps))` per eigenpair.
    pub residuals: Vec<f64>,
}

impl SpectralDecomposition {
    fn build(m: &CMat, eigenvalues: Vec<Complex64>, right_vectors: CMat, hermitian: bool) -> Self {
        let scale = m.frobenius_norm().max(1e-300);
        let residuals = eigenvalues
            .iter()
            .enumerate()
            .map(|(j, &l)| {
                let v = right_vectors.column(j);
                let mv = m.matvec(&v);
                let r: Vec<Complex64> = mv.iter().zip(&v).map(|(a, b)| a - l * b).collect();
                vec_norm(&r) / (scale * vec_norm(&v).max(f64::EPSILON))
            })
            .collect();
        SpectralDecomposition {
            eigenvalues,
            right_vectors,
            is_hermitian_path: hermitian,
            residuals,
        }
    }

    /// Real parts, sorted ascending. Intended for Hermitian-path results.
    pub fn real_eigenvalues_sorted(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.eigenvalues.iter().map(|z| z.re).collect();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}
