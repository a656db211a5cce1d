//! Eigensolvers for dense complex matrices.
//!
//! Two paths, per the crate contract:
//! - `hermitian_eig`: two-sided complex Jacobi. Real eigenvalues sorted
//!   ascending, unitary eigenvectors, high accuracy.
//! - `general_eig`: Householder Hessenberg reduction followed by an implicit
//!   single-shift QR iteration (complex Schur form), eigenvectors by
//!   back-substitution on the triangular factor. Handles non-normal and
//!   defective matrices; residuals are reported per eigenpair.

use crate::error::{CoreError, Result};
use crate::matrix::{c64, vec_norm, CMat};
use num_complex::Complex64;

const JACOBI_MAX_SWEEPS: usize = 60;
const QR_MAX_ITERS_PER_EIG: usize = 50;

/// Eigenvalues (real, ascending) and unitary eigenvector matrix of a
/// Hermitian matrix. The caller is responsible for the Hermitian check.
pub fn hermitian_eig(m: &CMat) -> Result<(Vec<f64>, CMat)> {
    assert!(m.is_square());
    let n = m.nrows();
    let mut a = m.clone();
    let mut v = CMat::identity(n);
    if n == 0 {
        return Ok((vec![], v));
    }
    let scale = a.frobenius_norm().max(1e-300);
    let target = 1e-15 * scale;
    let mut converged = false;
    let mut last_off = 0.0;
    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n - 1 {
            for q in p + 1..n {
                off += 2.0 * a[(p, q)].norm_sqr();
            }
        }
        last_off = off.sqrt();
        if last_off <= target {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let gn = apq.norm();
                if gn <= 1e-300 || gn <= 1e-18 * scale {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let phase = apq / gn;
                let zeta = (aqq - app) / (2.0 * gn);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
                } else {
                    -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let sp = c64(s, 0.0) * phase; // s * e^{i phi}
                // columns p,q of A (A <- A J)
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp.scale(c) - akq * sp.conj();
                    a[(k, q)] = akp * sp + akq.scale(c);
                }
                // rows p,q of A (A <- J^* A)
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk.scale(c) - aqk * sp;
                    a[(q, k)] = apk * sp.conj() + aqk.scale(c);
                }
                // re-symmetrize the rotated 2x2 corner exactly
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                a[(p, p)] = c64(a[(p, p)].re, 0.0);
                a[(q, q)] = c64(a[(q, q)].re, 0.0);
                // eigenvectors V <- V J
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp.scale(c) - vkq * sp.conj();
                    v[(k, q)] = vkp * sp + vkq.scale(c);
                }
            }
        }
    }
    if !converged && last_off > target {
        return Err(CoreError::ConvergenceFailure {
            algorithm: "Hermitian Jacobi",
            iterations: JACOBI_MAX_SWEEPS,
            residual: last_off,
        });
    }
    let mut vals: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| vals[i].partial_cmp(&vals[j]).unwrap());
    let sorted_vals: Vec<f64> = order.iter().map(|&i| vals[i]).collect();
    let mut sorted_v = CMat::zeros(n, n);
    for (slot, &j) in order.iter().enumerate() {
        for i in 0..n {
            sorted_v[(i, slot)] = v[(i, j)];
        }
    }
    vals = sorted_vals;
    Ok((vals, sorted_v))
}

/// Complex Schur decomposition `A = Z T Z^*` with `T` upper triangular.
pub struct Schur {
    pub t: CMat,
    pub z: CMat,
}

/// Givens rotation `[[c, conj(s)], [-s, c]]` mapping `(a, b)` to `(r, 0)`.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    let an = a.norm();
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, Complex64::new(0.0, 0.0));
    }
    if an == 0.0 {
        return (0.0, b / bn);
    }
    let h = an.hypot(bn);
    let c = an / h;
    let s = b * (a.conj() / (an * h));
    (c, s)
}

fn wilkinson_shift(t: &CMat, hi: usize) -> Complex64 {
    if hi == 0 {
        return t[(0, 0)];
    }
    let a = t[(hi - 1, hi - 1)];
    let b = t[(hi - 1, hi)];
    let c = t[(hi, hi - 1)];
    let d = t[(hi, hi)];
    let half = (a - d) * c64(0.5, 0.0);
    let disc = (half * half + b * c).sqrt();
    let l1 = (a + d) * c64(0.5, 0.0) + disc;
    let l2 = (a + d) * c64(0.5, 0.0) - disc;
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

pub fn schur(m: &CMat) -> Result<Schur> {
    assert!(m.is_square());
    let n = m.nrows();
    let mut h = m.clone();
    let mut z = CMat::identity(n);
    if n <= 1 {
        return Ok(Schur { t: h, z });
    }
    hessenberg(&mut h, &mut z);
    let scale = h.frobenius_norm().max(1e-300);
    let ulp = f64::EPSILON;
    let mut hi = n - 1;
    let mut iters_this_eig = 0usize;
    let mut total_iters = 0usize;
    let max_total = QR_MAX_ITERS_PER_EIG * n * 2;
    while hi > 0 {
        // deflate converged subdiagonals at the bottom
        loop {
            let k = hi;
            let tst = h[(k - 1, k - 1)].norm() + h[(k, k)].norm();
            let tst = if tst == 0.0 { scale } else { tst };
            if h[(k, k - 1)].norm() <= ulp * tst {
                h[(k, k - 1)] = Complex64::new(0.0, 0.0);
                hi -= 1;
                iters_this_eig = 0;
                if hi == 0 {
                    break;
                }
            } else {
                break;
            }
        }
        if hi == 0 {
            break;
        }
        // window start: first l with negligible h[l, l-1]
        let mut lo = hi;
        while lo > 0 {
            let tst = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            let tst = if tst == 0.0 { scale } else { tst };
            if h[(lo, lo - 1)].norm() <= ulp * tst {
                h[(lo, lo - 1)] = Complex64::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            hi -= 1;
            iters_this_eig = 0;
            continue;
        }
        total_iters += 1;
        iters_this_eig += 1;
        if total_iters > max_total {
            return Err(CoreError::ConvergenceFailure {
                algorithm: "complex QR iteration",
                iterations: total_iters,
                residual: h[(hi, hi - 1)].norm(),
            });
        }
        let mu = if iters_this_eig % 12 == 0 {
            // exceptional shift to break symmetric stalls
            h[(hi, hi)] + c64(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            wilkinson_shift(&h, hi)
        };
        // implicit single-shift bulge chase over [lo, hi]
        let mut x = h[(lo, lo)] - mu;
        let mut zb = h[(lo + 1, lo)];
        for k in lo..hi {
            let (c, s) = givens(x, zb);
            let cs = c64(c, 0.0);
            let jstart = if k == lo { lo } else { k - 1 };
            for j in jstart..n {
                let t1 = h[(k, j)];
                let t2 = h[(k + 1, j)];
                h[(k, j)] = cs * t1 + s.conj() * t2;
                h[(k + 1, j)] = -s * t1 + cs * t2;
            }
            let iend = (k + 2).min(hi);
            for i in 0..=iend {
                let t1 = h[(i, k)];
                let t2 = h[(i, k + 1)];
                h[(i, k)] = cs * t1 + s * t2;
                h[(i, k + 1)] = -s.conj() * t1 + cs * t2;
            }
            for i in 0..n {
                let t1 = z[(i, k)];
                let t2 = z[(i, k + 1)];
                z[(i, k)] = cs * t1 + s * t2;
                z[(i, k + 1)] = -s.conj() * t1 + cs * t2;
            }
            if k + 1 < hi {
                x = h[(k + 1, k)];
                zb = h[(k + 2, k)];
            }
        }
    }
    // zero strict lower triangle
    for i in 0..n {
        for j in 0..i {
            h[(i, j)] = Complex64::new(0.0, 0.0);
        }
    }
    Ok(Schur { t: h, z })
}

/// Reduce to upper Hessenberg form in place, accumulating the similarity in `q`.
fn hessenberg(a: &mut CMat, q: &mut CMat) {
    let n = a.nrows();
    for k in 0..n.saturating_sub(2) {
        let m = n - k - 1;
        let mut x = vec![Complex64::new(0.0, 0.0); m];
        for i in 0..m {
            x[i] = a[(k + 1 + i, k)];
        }
        let xnorm = vec_norm(&x);
        if xnorm <= 1e-300 {
            continue;
        }
        let x0 = x[0];
        let alpha = if x0.norm() == 0.0 {
            c64(-xnorm, 0.0)
        } else {
            -(x0 / x0.norm()) * xnorm
        };
        let mut v = x;
        v[0] -= alpha;
        let vn2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vn2 <= 1e-300 {
            continue;
        }
        let tau = 2.0 / vn2;
        // left: rows k+1..n of columns k..n
        for j in k..n {
            let mut w = Complex64::new(0.0, 0.0);
            for i in 0..m {
                w += v[i].conj() * a[(k + 1 + i, j)];
            }
            w *= tau;
            for i in 0..m {
                let d = v[i] * w;
                a[(k + 1 + i, j)] -= d;
            }
        }
        // right: columns k+1..n of all rows
        for i in 0..n {
            let mut w = Complex64::new(0.0, 0.0);
            for j in 0..m {
                w += a[(i, k + 1 + j)] * v[j];
            }
            w *= tau;
            for j in 0..m {
                let d = w * v[j].conj();
                a[(i, k + 1 + j)] -= d;
            }
        }
        // accumulate Q <- Q P
        for i in 0..n {
            let mut w = Complex64::new(0.0, 0.0);
            for j in 0..m {
                w += q[(i, k + 1 + j)] * v[j];
            }
            w *= tau;
            for j in 0..m {
                let d = w * v[j].conj();
                q[(i, k + 1 + j)] -= d;
            }
        }
        a[(k + 1, k)] = alpha;
        for i in k + 2..n {
            a[(i, k)] = Complex64::new(0.0, 0.0);
        }
    }
}

/// Eigenvalues and right eigenvectors of a general complex matrix.
///
/// Eigenvectors come from back-substitution on the Schur factor; for
/// (numerically) defective eigenvalues the substituted denominators are
/// floored at machine precision, which keeps residuals small even though the
/// returned vectors may be nearly parallel.
pub fn general_eig(m: &CMat) -> Result<(Vec<Complex64>, CMat)> {
    let n = m.nrows();
    let dec = schur(m)?;
    let t = &dec.t;
    let scale = t.max_abs().max(1e-300);
    let floor = f64::EPSILON * scale;
    let mut vectors = CMat::zeros(n, n);
    let mut values = Vec::with_capacity(n);
    for idx in 0..n {
        let lambda = t[(idx, idx)];
        values.push(lambda);
        let mut y = vec![Complex64::new(0.0, 0.0); n];
        y[idx] = Complex64::new(1.0, 0.0);
        for j in (0..idx).rev() {
            let mut num = Complex64::new(0.0, 0.0);
            for k in j + 1..=idx {
                num += t[(j, k)] * y[k];
            }
            let mut den = t[(j, j)] - lambda;
            if den.norm() < floor {
                den = c64(floor, 0.0);
            }
            y[j] = -num / den;
        }
        // v = Z y, normalized
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        for i in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..=idx {
                acc += dec.z[(i, k)] * y[k];
            }
            v[i] = acc;
        }
        let nv = vec_norm(&v);
        if nv > 0.0 {
            for z in v.iter_mut() {
                *z /= nv;
            }
        }
        for i in 0..n {
            vectors[(i, idx)] = v[i];
        }
    }
    Ok((values, vectors))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(m: &CMat, lambda: Complex64, v: &[Complex64]) -> f64 {
        let mv = m.matvec(v);
        let r: Vec<Complex64> = mv.iter().zip(v).map(|(a, b)| a - lambda * b).collect();
        vec_norm(&r)
    }

    #[test]
    fn hermitian_diag() {
        let m = CMat::diag(&[c64(3.0, 0.0), c64(1.0, 0.0), c64(2.0, 0.0)]);
        let (vals, _) = hermitian_eig(&m).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-14);
        assert!((vals[1] - 2.0).abs() < 1e-14);
        assert!((vals[2] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn hermitian_residuals() {
        let m = CMat::from_rows(&[
            vec![(2.0, 0.0), (1.0, 1.0), (0.0, -2.0)],
            vec![(1.0, -1.0), (-1.0, 0.0), (0.5, 0.0)],
            vec![(0.0, 2.0), (0.5, 0.0), (4.0, 0.0)],
        ]);
        let (vals, vecs) = hermitian_eig(&m).unwrap();
        for (j, &l) in vals.iter().enumerate() {
            let v = vecs.column(j);
            let r = residual(&m, c64(l, 0.0), &v);
            assert!(r < 1e-12 * m.frobenius_norm(), "residual {r}");
        }
        assert!(vals.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn companion_cube_roots() {
        // companion matrix of z^3 - 1
        let m = CMat::from_real_rows(&[
            vec![0.0, 0.0, 1.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
        ]);
        let (vals, vecs) = general_eig(&m).unwrap();
        let mut got: Vec<(f64, f64)> = vals.iter().map(|z| (z.re, z.im)).collect();
        got.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut expect = vec![
            (-0.5, -(3.0f64).sqrt() / 2.0),
            (-0.5, (3.0f64).sqrt() / 2.0),
            (1.0, 0.0),
        ];
        expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (g, e) in got.iter().zip(&expect) {
            assert!((g.0 - e.0).abs() < 1e-12 && (g.1 - e.1).abs() < 1e-12);
        }
        for (j, &l) in vals.iter().enumerate() {
            let r = residual(&m, l, &vecs.column(j));
            assert!(r < 1e-12, "residual {r}");
        }
    }

    #[test]
    fn jordan_block_eigenvalues_exact() {
        // exactly triangular input deflates immediately
        let m = CMat::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]);
        let (vals, _) = general_eig(&m).unwrap();
        assert_eq!(vals.len(), 2);
        assert!(vals.iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn random_nonnormal_residuals() {
        // fixed pseudo-random 6x6
        let mut seed = 1234567u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        let m = CMat::from_fn(6, 6, |_, _| c64(next(), next()));
        let (vals, vecs) = general_eig(&m).unwrap();
        for (j, &l) in vals.iter().enumerate() {
            let r = residual(&m, l, &vecs.column(j));
            assert!(r < 1e-11 * m.frobenius_norm().max(1.0), "residual {r}");
        }
    }
}
