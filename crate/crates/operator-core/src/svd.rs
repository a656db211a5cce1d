//! Singular value decomposition by one-sided (Hestenes) Jacobi rotations.
//!
//! Column pairs are rotated until mutually orthogonal; the column norms are
//! then the singular values. Slower than bidiagonalization but delivers
//! singular values to high relative accuracy, which the resolvent-margin and
//! rank decisions downstream depend on.

use crate::error::{CoreError, Result};
use crate::matrix::{c64, CMat};
use num_complex::Complex64;

const MAX_SWEEPS: usize = 60;
const ORTHO_TOL: f64 = 1e-15;

pub struct Svd {
    /// Left singular vectors (columns); zero columns for zero singular values.
    pub u: CMat,
    /// Singular values, descending.
    pub values: Vec<f64>,
    /// Right singular vectors (columns).
    pub v: CMat,
}

/// Singular values only (descending). Cheaper than [`svd`].
pub fn singular_values(m: &CMat) -> Result<Vec<f64>> {
    if m.nrows() < m.ncols() {
        return singular_values(&m.adjoint());
    }
    let (cols, _v) = jacobi_columns(m, false)?;
    let mut vals: Vec<f64> = cols_norms(&cols);
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(vals)
}

/// Full decomposition `M = U diag(values) V^*`.
pub fn svd(m: &CMat) -> Result<Svd> {
    if m.nrows() < m.ncols() {
        let t = svd(&m.adjoint())?;
        return Ok(Svd {
            u: t.v,
            values: t.values,
            v: t.u,
        });
    }
    let (cols, v) = jacobi_columns(m, true)?;
    let v = v.expect("vectors requested");
    let norms = cols_norms(&cols);
    let n = m.ncols();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| norms[b].partial_cmp(&norms[a]).unwrap());
    let mut u = CMat::zeros(m.nrows(), n);
    let mut vv = CMat::zeros(n, n);
    let mut values = Vec::with_capacity(n);
    for (slot, &j) in order.iter().enumerate() {
        let s = norms[j];
        values.push(s);
        if s > 0.0 {
            for i in 0..m.nrows() {
                u[(i, slot)] = cols[(i, j)] / s;
            }
        }
        for i in 0..n {
            vv[(i, slot)] = v[(i, j)];
        }
    }
    Ok(Svd { u, values, v: vv })
}

fn cols_norms(cols: &CMat) -> Vec<f64> {
    (0..cols.ncols())
        .map(|j| {
            (0..cols.nrows())
                .map(|i| cols[(i, j)].norm_sqr())
                .sum::<f64>()
                .sqrt()
        })
        .collect()
}

/// Rotate columns of `m` until pairwise orthogonal. Returns the rotated
/// matrix (columns are `u_j * sigma_j`) and, if requested, the accumulated
/// right-rotation matrix V.
///
/// Works on the transpose internally so every column of `m` is a contiguous
/// slice.
fn jacobi_columns(m: &CMat, want_v: bool) -> Result<(CMat, Option<CMat>)> {
    let nc = m.ncols();
    let mut at = m.transpose(); // row p of `at` is column p of `m`
    let mut vt = if want_v { Some(CMat::identity(nc)) } else { None };
    if nc < 2 {
        return Ok((at.transpose(), vt.map(|v| v.transpose())));
    }
    for sweep in 0..MAX_SWEEPS {
        let mut norms2: Vec<f64> = (0..nc)
            .map(|p| at.row(p).iter().map(|z| z.norm_sqr()).sum())
            .collect();
        // columns at roundoff scale carry no reliable direction; freeze them
        let scale2 = norms2.iter().copied().fold(0.0, f64::max);
        let floor2 = scale2 * (f64::EPSILON * f64::EPSILON);
        let mut worst: f64 = 0.0;
        for p in 0..nc - 1 {
            for q in p + 1..nc {
                let alpha = norms2[p];
                let beta = norms2[q];
                if alpha <= floor2 || beta <= floor2 {
                    continue;
                }
                let (rp, rq) = two_rows(&mut at, p, q);
                let mut gamma = Complex64::new(0.0, 0.0);
                for (x, y) in rp.iter().zip(rq.iter()) {
                    gamma += x.conj() * y;
                }
                let gn = gamma.norm();
                let rel = gn / (alpha * beta).sqrt();
                worst = worst.max(rel);
                if rel <= ORTHO_TOL {
                    continue;
                }
                let phase = gamma / gn; // e^{i phi}
                let zeta = (beta - alpha) / (2.0 * gn);
                let t = zeta.signum_or_one() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                // columns (p,q) <- (p,q) * [[c, s*phase],[-s*conj(phase), c]]
                let sp = c64(s, 0.0) * phase;
                rotate_pair(rp, rq, c, sp);
                if let Some(vm) = vt.as_mut() {
                    let (vp, vq) = two_rows(vm, p, q);
                    rotate_pair(vp, vq, c, sp);
                }
                // rotation preserves the pair's total energy; recompute cheaply
                let np: f64 = at.row(p).iter().map(|z| z.norm_sqr()).sum();
                norms2[q] = (alpha + beta - np).max(0.0);
                norms2[p] = np;
            }
        }
        if worst <= ORTHO_TOL {
            return Ok((at.transpose(), vt.map(|v| v.transpose())));
        }
        if sweep == MAX_SWEEPS - 1 {
            return Err(CoreError::ConvergenceFailure {
                algorithm: "one-sided Jacobi SVD",
                iterations: MAX_SWEEPS,
                residual: worst,
            });
        }
    }
    Ok((at.transpose(), vt.map(|v| v.transpose())))
}

/// `(row_p, row_q)` as disjoint mutable slices (`p < q`).
fn two_rows(m: &mut CMat, p: usize, q: usize) -> (&mut [Complex64], &mut [Complex64]) {
    debug_assert!(p < q);
    let ncols = m.ncols();
    let data = m.data_mut();
    let (head, tail) = data.split_at_mut(q * ncols);
    (
        &mut head[p * ncols..(p + 1) * ncols],
        &mut tail[..ncols],
    )
}

#[inline]
fn rotate_pair(rp: &mut [Complex64], rq: &mut [Complex64], c: f64, sp: Complex64) {
    let spc = sp.conj();
    for (x, y) in rp.iter_mut().zip(rq.iter_mut()) {
        let ap = *x;
        let aq = *y;
        *x = ap.scale(c) - aq * spc;
        *y = ap * sp + aq.scale(c);
    }
}

trait SignumOrOne {
    fn signum_or_one(self) -> f64;
}

impl SignumOrOne for f64 {
    fn signum_or_one(self) -> f64 {
        if self >= 0.0 {
            1.0
        } else {
            -1.0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_values() {
        let m = CMat::diag(&[c64(3.0, 0.0), c64(0.5, 0.0)]);
        let vals = singular_values(&m).unwrap();
        assert!((vals[0] - 3.0).abs() < 1e-14);
        assert!((vals[1] - 0.5).abs() < 1e-14);
    }

    #[test]
    fn reconstruction() {
        let m = CMat::from_rows(&[
            vec![(1.0, 2.0), (0.0, -1.0), (3.0, 0.0)],
            vec![(2.0, 0.0), (1.0, 1.0), (0.0, 0.0)],
            vec![(0.0, 1.0), (4.0, 0.0), (1.0, -2.0)],
            vec![(1.0, 0.0), (0.0, 0.0), (2.0, 2.0)],
        ]);
        let d = svd(&m).unwrap();
        let sigma = CMat::diag(&d.values.iter().map(|&s| c64(s, 0.0)).collect::<Vec<_>>());
        let rec = d.u.matmul(&sigma).matmul(&d.v.adjoint());
        assert!(rec.sub(&m).frobenius_norm() < 1e-12 * m.frobenius_norm());
        // V unitary
        let vtv = d.v.adjoint().matmul(&d.v);
        assert!(vtv.sub(&CMat::identity(3)).frobenius_norm() < 1e-12);
    }

    #[test]
    fn wide_matrix() {
        let m = CMat::from_rows(&[vec![(1.0, 0.0), (0.0, 2.0), (2.0, -1.0)]]);
        let d = svd(&m).unwrap();
        let expected = (1.0f64 + 4.0 + 5.0).sqrt();
        assert!((d.values[0] - expected).abs() < 1e-13);
        let sigma_full = {
            let mut s = CMat::zeros(1, 3);
            s[(0, 0)] = c64(d.values[0], 0.0);
            s
        };
        let _ = sigma_full;
    }

    #[test]
    fn rank_deficient() {
        // rank-1 matrix
        let m = CMat::from_real_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        let vals = singular_values(&m).unwrap();
        assert!(vals[1] < 1e-14 * vals[0].max(1.0));
    }
}
