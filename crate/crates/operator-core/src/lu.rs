//! LU decomposition with partial pivoting for dense complex matrices.

use crate::error::{CoreError, Result};
use crate::matrix::CMat;
use num_complex::Complex64;

pub struct Lu {
    /// Packed L (unit lower, below diagonal) and U (upper).
    lu: CMat,
    /// Row permutation: `perm[i]` is the original row now in position `i`.
    perm: Vec<usize>,
    sign_swaps: usize,
    min_pivot: f64,
}

impl Lu {
    pub fn new(m: &CMat) -> Result<Lu> {
        if !m.is_square() {
            return Err(CoreError::DimensionError {
                expected: "square matrix".into(),
                got: format!("{}x{}", m.nrows(), m.ncols()),
            });
        }
        let n = m.nrows();
        let mut lu = m.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0usize;
        let mut min_pivot = f64::INFINITY;
        for k in 0..n {
            // pivot search
            let mut p = k;
            let mut best = lu[(k, k)].norm();
            for i in k + 1..n {
                let v = lu[(i, k)].norm();
                if v > best {
                    best = v;
                    p = i;
                }
            }
            if p != k {
                for j in 0..n {
                    let t = lu[(k, j)];
                    lu[(k, j)] = lu[(p, j)];
                    lu[(p, j)] = t;
                }
                perm.swap(k, p);
                swaps += 1;
            }
            let pivot = lu[(k, k)];
            let pn = pivot.norm();
            min_pivot = min_pivot.min(pn);
            if pn == 0.0 {
                continue; // singular; recorded via min_pivot
            }
            for i in k + 1..n {
                let factor = lu[(i, k)] / pivot;
                lu[(i, k)] = factor;
                if factor.norm() != 0.0 {
                    for j in k + 1..n {
                        let u = lu[(k, j)];
                        lu[(i, j)] -= factor * u;
                    }
                }
            }
        }
        if n == 0 {
            min_pivot = f64::INFINITY;
        }
        Ok(Lu {
            lu,
            perm,
            sign_swaps: swaps,
            min_pivot,
        })
    }

    pub fn min_pivot(&self) -> f64 {
        self.min_pivot
    }

    pub fn is_singular(&self) -> bool {
        self.min_pivot == 0.0
    }

    /// Solve `A X = B` for a multi-column right-hand side.
    pub fn solve(&self, b: &CMat) -> Result<CMat> {
        let n = self.lu.nrows();
        if b.nrows() != n {
            return Err(CoreError::DimensionError {
                expected: format!("{n} rows"),
                got: format!("{} rows", b.nrows()),
            });
        }
        if self.is_singular() {
            return Err(CoreError::Singular {
                pivot: self.min_pivot,
            });
        }
        let m = b.ncols();
        // apply permutation
        let mut x = CMat::zeros(n, m);
        for i in 0..n {
            for j in 0..m {
                x[(i, j)] = b[(self.perm[i], j)];
            }
        }
        // forward substitution (unit lower)
        for i in 1..n {
            for k in 0..i {
                let l = self.lu[(i, k)];
                if l.norm() != 0.0 {
                    for j in 0..m {
                        let s = x[(k, j)];
                        x[(i, j)] -= l * s;
                    }
                }
            }
        }
        // back substitution
        for i in (0..n).rev() {
            let d = self.lu[(i, i)];
            for k in i + 1..n {
                let u = self.lu[(i, k)];
                if u.norm() != 0.0 {
                    for j in 0..m {
                        let s = x[(k, j)];
                        x[(i, j)] -= u * s;
                    }
                }
            }
            for j in 0..m {
                x[(i, j)] /= d;
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<CMat> {
        self.solve(&CMat::identity(self.lu.nrows()))
    }

    pub fn determinant(&self) -> Complex64 {
        let n = self.lu.nrows();
        let mut det = Complex64::new(if self.sign_swaps % 2 == 0 { 1.0 } else { -1.0 }, 0.0);
        for i in 0..n {
            det *= self.lu[(i, i)];
        }
        det
    }
}

/// Convenience: solve `A X = B` in one call.
pub fn solve(a: &CMat, b: &CMat) -> Result<CMat> {
    Lu::new(a)?.solve(b)
}

/// Convenience: matrix inverse.
pub fn inverse(a: &CMat) -> Result<CMat> {
    Lu::new(a)?.inverse()
}

/// Convenience: determinant.
pub fn determinant(a: &CMat) -> Result<Complex64> {
    Ok(Lu::new(a)?.determinant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::c64;

    #[test]
    fn solve_small_system() {
        let a = CMat::from_rows(&[
            vec![(2.0, 0.0), (1.0, 1.0)],
            vec![(0.0, -1.0), (3.0, 0.0)],
        ]);
        let x_true = CMat::from_rows(&[vec![(1.0, 0.5)], vec![(-2.0, 1.0)]]);
        let b = a.matmul(&x_true);
        let x = solve(&a, &b).unwrap();
        assert!(x.sub(&x_true).frobenius_norm() < 1e-13);
    }

    #[test]
    fn inverse_residual() {
        let a = CMat::from_rows(&[
            vec![(4.0, 1.0), (1.0, 0.0), (0.0, 2.0)],
            vec![(1.0, -1.0), (3.0, 0.0), (1.0, 0.0)],
            vec![(0.0, 0.0), (1.0, 1.0), (5.0, 0.0)],
        ]);
        let inv = inverse(&a).unwrap();
        let res = a.matmul(&inv).sub(&CMat::identity(3)).frobenius_norm();
        assert!(res < 1e-13, "residual {res}");
    }

    #[test]
    fn determinant_diagonal() {
        let d = CMat::diag(&[c64(2.0, 0.0), c64(0.0, 3.0), c64(-1.0, 0.0)]);
        let det = determinant(&d).unwrap();
        assert!((det - c64(0.0, -6.0)).norm() < 1e-14);
    }

    #[test]
    fn singular_reported() {
        let a = CMat::from_real_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        let lu = Lu::new(&a).unwrap();
        assert!(lu.min_pivot() < 1e-14);
        assert!(lu.solve(&CMat::identity(2)).is_err());
    }
}
