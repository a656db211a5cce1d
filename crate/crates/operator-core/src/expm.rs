//! Matrix exponential by scaling and squaring with Pade approximants.
//!
//! Degree 3/5/7/9 approximants below their 1-norm thresholds, degree 13 with
//! norm-based scaling above. Works for defective inputs (no eigendecomposition
//! involved), which the per-mode evolution solves rely on.

use crate::error::Result;
use crate::lu;
use crate::matrix::{c64, CMat};

// 1-norm thresholds for the [m/m] approximants (Higham's theta values).
const THETA_3: f64 = 1.495585217958292e-2;
const THETA_5: f64 = 2.539398330063230e-1;
const THETA_7: f64 = 9.504178996162932e-1;
const THETA_9: f64 = 2.097847961257068;
const THETA_13: f64 = 5.371920351148152;

pub fn expm(a: &CMat) -> Result<CMat> {
    assert!(a.is_square(), "expm requires a square matrix");
    let norm = a.one_norm();
    let (u, v, squarings) = if norm < THETA_3 {
        let (u, v) = pade3(a);
        (u, v, 0)
    } else if norm < THETA_5 {
        let (u, v) = pade5(a);
        (u, v, 0)
    } else if norm < THETA_7 {
        let (u, v) = pade7(a);
        (u, v, 0)
    } else if norm < THETA_9 {
        let (u, v) = pade9(a);
        (u, v, 0)
    } else {
        let mut squarings = (norm / THETA_13).log2().ceil() as i32;
        if squarings < 0 {
            squarings = 0;
        }
        let scaled = a.scale(c64(2f64.powi(-squarings), 0.0));
        let (u, v) = pade13(&scaled);
        (u, v, squarings as u32)
    };
    // approximant is (V - U)^{-1} (V + U)
    let numer = v.add(&u);
    let denom = v.sub(&u);
    let mut result = lu::solve(&denom, &numer)?;
    for _ in 0..squarings {
        result = result.matmul(&result);
    }
    Ok(result)
}

fn poly_uv(a: &CMat, b: &[f64]) -> (CMat, CMat) {
    // U = A * sum b[2k+1] A^{2k}, V = sum b[2k] A^{2k}
    let n = a.nrows();
    let id = CMat::identity(n);
    let a2 = a.matmul(a);
    let mut even_pows = vec![id, a2];
    while 2 * (even_pows.len() - 1) < b.len() - 2 {
        let next = even_pows.last().unwrap().matmul(&even_pows[1]);
        even_pows.push(next);
    }
    let mut u_inner = CMat::zeros(n, n);
    let mut v = CMat::zeros(n, n);
    for (k, &coef) in b.iter().enumerate() {
        let pow = &even_pows[k / 2];
        if k % 2 == 1 {
            u_inner = u_inner.add(&pow.scale(c64(coef, 0.0)));
        } else {
            v = v.add(&pow.scale(c64(coef, 0.0)));
        }
    }
    (a.matmul(&u_inner), v)
}

fn pade3(a: &CMat) -> (CMat, CMat) {
    poly_uv(a, &[120.0, 60.0, 12.0, 1.0])
}

fn pade5(a: &CMat) -> (CMat, CMat) {
    poly_uv(a, &[30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0])
}

fn pade7(a: &CMat) -> (CMat, CMat) {
    poly_uv(
        a,
        &[
            17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0,
        ],
    )
}

fn pade9(a: &CMat) -> (CMat, CMat) {
    poly_uv(
        a,
        &[
            17643225600.0,
            8821612800.0,
            2075673600.0,
            302702400.0,
            30270240.0,
            2162160.0,
            110880.0,
            3960.0,
            90.0,
            1.0,
        ],
    )
}

fn pade13(a: &CMat) -> (CMat, CMat) {
    const B: [f64; 14] = [
        64764752532480000.0,
        32382376266240000.0,
        7771770303897600.0,
        1187353796428800.0,
        129060195264000.0,
        10559470521600.0,
        670442572800.0,
        33522128640.0,
        1323241920.0,
        40840800.0,
        960960.0,
        16380.0,
        182.0,
        1.0,
    ];
    let n = a.nrows();
    let id = CMat::identity(n);
    let a2 = a.matmul(a);
    let a4 = a2.matmul(&a2);
    let a6 = a4.matmul(&a2);

    let w = a6
        .scale(c64(B[13], 0.0))
        .add(&a4.scale(c64(B[11], 0.0)))
        .add(&a2.scale(c64(B[9], 0.0)));
    let tmp = a6
        .matmul(&w)
        .add(&a6.scale(c64(B[7], 0.0)))
        .add(&a4.scale(c64(B[5], 0.0)))
        .add(&a2.scale(c64(B[3], 0.0)))
        .add(&id.scale(c64(B[1], 0.0)));
    let u = a.matmul(&tmp);

    let w2 = a6
        .scale(c64(B[12], 0.0))
        .add(&a4.scale(c64(B[10], 0.0)))
        .add(&a2.scale(c64(B[8], 0.0)));
    let v = a6
        .matmul(&w2)
        .add(&a6.scale(c64(B[6], 0.0)))
        .add(&a4.scale(c64(B[4], 0.0)))
        .add(&a2.scale(c64(B[2], 0.0)))
        .add(&id.scale(c64(B[0], 0.0)));
    (u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn expm_zero_is_identity() {
        let z = CMat::zeros(3, 3);
        let e = expm(&z).unwrap();
        assert_eq!(e.sub(&CMat::identity(3)).frobenius_norm(), 0.0);
    }

    #[test]
    fn expm_nilpotent_exact() {
        let m = CMat::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]);
        let e = expm(&m).unwrap();
        let expect = CMat::from_real_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]]);
        assert!(e.sub(&expect).frobenius_norm() < 1e-15);
    }

    #[test]
    fn expm_diagonal_matches_scalar_exp() {
        let m = CMat::diag(&[c64(1.0, 0.0), c64(-2.0, 0.0), c64(0.0, PI)]);
        let e = expm(&m).unwrap();
        let expect = CMat::diag(&[
            c64(1.0f64.exp(), 0.0),
            c64((-2.0f64).exp(), 0.0),
            c64(PI.cos(), PI.sin()),
        ]);
        assert!(
            e.sub(&expect).frobenius_norm() < 1e-13 * expect.frobenius_norm(),
            "dev {}",
            e.sub(&expect).frobenius_norm()
        );
    }

    #[test]
    fn expm_inverse_identity() {
        let m = CMat::from_rows(&[
            vec![(0.3, 0.1), (2.0, -1.0), (0.0, 0.0)],
            vec![(0.5, 0.0), (-0.2, 0.4), (1.0, 1.0)],
            vec![(0.0, 0.3), (0.7, 0.0), (0.1, -0.5)],
        ]);
        let e = expm(&m).unwrap();
        let einv = expm(&m.scale(c64(-1.0, 0.0))).unwrap();
        let res = e.matmul(&einv).sub(&CMat::identity(3)).frobenius_norm();
        assert!(res < 1e-12, "residual {res}");
    }

    #[test]
    fn expm_large_norm_scaling_path() {
        // forces the degree-13 branch with squaring
        let m = CMat::diag(&[c64(10.0, 0.0), c64(-3.0, 7.0)]);
        let e = expm(&m).unwrap();
        let expect = CMat::diag(&[
            c64(10f64.exp(), 0.0),
            c64((-3.0f64).exp() * 7.0f64.cos(), (-3.0f64).exp() * 7.0f64.sin()),
        ]);
        assert!(e.sub(&expect).frobenius_norm() < 1e-11 * expect.frobenius_norm());
    }
}
