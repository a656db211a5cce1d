//! Dense complex matrices in row-major storage.
//!
//! This is the raw numerical layer underneath [`crate::OperatorRep`]; it knows
//! nothing about bases. All algorithms in this crate (LU, SVD, eigensolvers,
//! matrix exponential) operate on `CMat`.

use num_complex::Complex64;
use std::fmt;
use std::ops::{Index, IndexMut};

/// Shorthand constructor for a complex scalar.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Dense complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct CMat {
    nrows: usize,
    ncols: usize,
    data: Vec<Complex64>,
}

impl fmt::Debug for CMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMat {}x{} [", self.nrows, self.ncols)?;
        for i in 0..self.nrows.min(8) {
            write!(f, "  ")?;
            for j in 0..self.ncols.min(8) {
                let z = self[(i, j)];
                write!(f, "{:+.3e}{:+.3e}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl CMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        CMat {
            nrows,
            ncols,
            data: vec![Complex64::new(0.0, 0.0); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = CMat::zeros(nrows, ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Build from rows given as `(re, im)` pairs; rows must have equal length.
    pub fn from_rows(rows: &[Vec<(f64, f64)>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        CMat::from_fn(nrows, ncols, |i, j| c64(rows[i][j].0, rows[i][j].1))
    }

    /// Build from real rows.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        CMat::from_fn(nrows, ncols, |i, j| c64(rows[i][j], 0.0))
    }

    pub fn diag(entries: &[Complex64]) -> Self {
        let n = entries.len();
        let mut m = CMat::zeros(n, n);
        for (i, &z) in entries.iter().enumerate() {
            m[(i, i)] = z;
        }
        m
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.nrows
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [Complex64] {
        &mut self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub(crate) fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.nrows).map(|i| self[(i, j)]).collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMat {
        CMat::from_fn(self.ncols, self.nrows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> CMat {
        CMat::from_fn(self.ncols, self.nrows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> CMat {
        CMat::from_fn(self.nrows, self.ncols, |i, j| self[(i, j)].conj())
    }

    pub fn add(&self, other: &CMat) -> CMat {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &CMat) -> CMat {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> CMat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    /// `self - lambda * I` (square only).
    pub fn shift(&self, lambda: Complex64) -> CMat {
        assert!(self.is_square(), "shift requires a square matrix");
        let mut out = self.clone();
        for i in 0..self.nrows {
            out[(i, i)] -= lambda;
        }
        out
    }

    /// Matrix product, accumulated in ascending-k order (i,k,j loops).
    pub fn matmul(&self, other: &CMat) -> CMat {
        assert_eq!(
            self.ncols, other.nrows,
            "matmul dimension mismatch: {}x{} * {}x{}",
            self.nrows, self.ncols, other.nrows, other.ncols
        );
        let mut out = CMat::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self[(i, k)];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let src = other.row(k);
                let dst = out.row_mut(i);
                for (d, s) in dst.iter_mut().zip(src) {
                    *d += a * s;
                }
            }
        }
        out
    }

    pub fn matvec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.ncols, x.len());
        (0..self.nrows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(Complex64::new(0.0, 0.0), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Maximum absolute column sum.
    pub fn one_norm(&self) -> f64 {
        (0..self.ncols)
            .map(|j| (0..self.nrows).map(|i| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Hermitian part `(M + M*)/2`.
    pub fn hermitian_part(&self) -> CMat {
        assert!(self.is_square());
        let adj = self.adjoint();
        self.add(&adj).scale(c64(0.5, 0.0))
    }

    /// Frobenius distance to the own adjoint (0 for Hermitian matrices).
    pub fn hermitian_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.sub(&self.adjoint()).frobenius_norm()
    }

    pub fn is_hermitian(&self, rel_tol: f64) -> bool {
        self.is_square() && self.hermitian_defect() <= rel_tol * self.frobenius_norm().max(1e-300)
    }

    /// Copy `block` into `self` with upper-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &CMat) {
        assert!(r0 + block.nrows <= self.nrows && c0 + block.ncols <= self.ncols);
        for i in 0..block.nrows {
            for j in 0..block.ncols {
                self[(r0 + i, c0 + j)] = block[(i, j)];
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, nrows: usize, ncols: usize) -> CMat {
        assert!(r0 + nrows <= self.nrows && c0 + ncols <= self.ncols);
        CMat::from_fn(nrows, ncols, |i, j| self[(r0 + i, c0 + j)])
    }

    /// Assemble `[[a, b], [c, d]]`.
    pub fn from_blocks(a: &CMat, b: &CMat, c: &CMat, d: &CMat) -> CMat {
        assert_eq!(a.nrows, b.nrows);
        assert_eq!(c.nrows, d.nrows);
        assert_eq!(a.ncols, c.ncols);
        assert_eq!(b.ncols, d.ncols);
        let mut out = CMat::zeros(a.nrows + c.nrows, a.ncols + b.ncols);
        out.set_block(0, 0, a);
        out.set_block(0, a.ncols, b);
        out.set_block(a.nrows, 0, c);
        out.set_block(a.nrows, a.ncols, d);
        out
    }
}

impl Index<(usize, usize)> for CMat {
    type Output = Complex64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        debug_assert!(i < self.nrows && j < self.ncols);
        &self.data[i * self.ncols + j]
    }
}

impl IndexMut<(usize, usize)> for CMat {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        debug_assert!(i < self.nrows && j < self.ncols);
        &mut self.data[i * self.ncols + j]
    }
}

/// Euclidean norm of a complex vector.
pub fn vec_norm(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Inner product `<x, y> = sum conj(x_i) y_i` (conjugate-linear in the first slot).
pub fn vec_dot(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter()
        .zip(y)
        .fold(Complex64::new(0.0, 0.0), |acc, (a, b)| acc + a.conj() * b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matmul_identity() {
        let m = CMat::from_rows(&[
            vec![(1.0, 2.0), (3.0, -1.0)],
            vec![(0.0, 0.5), (2.0, 0.0)],
        ]);
        let id = CMat::identity(2);
        assert_eq!(id.matmul(&m), m);
        assert_eq!(m.matmul(&id), m);
    }

    #[test]
    fn adjoint_involution() {
        let m = CMat::from_rows(&[
            vec![(1.0, 2.0), (3.0, -1.0), (0.0, 1.0)],
            vec![(0.0, 0.5), (2.0, 0.0), (-1.0, -1.0)],
        ]);
        assert_eq!(m.adjoint().adjoint(), m);
    }

    #[test]
    fn block_roundtrip() {
        let a = CMat::identity(2);
        let b = CMat::zeros(2, 3);
        let c = CMat::zeros(3, 2);
        let d = CMat::identity(3).scale(c64(2.0, 0.0));
        let m = CMat::from_blocks(&a, &b, &c, &d);
        assert_eq!(m.block(0, 0, 2, 2), a);
        assert_eq!(m.block(2, 2, 3, 3), d);
    }
}
