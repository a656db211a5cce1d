//! Per-mode evolution solves `du/dx = H_n u + f(x)`.
//!
//! Polynomial forcing is integrated exactly by augmenting the generator: with
//! `f(x) = sum_k c_k x^k` and the monomial carrier `p(x) = (1, x, ..., x^d)`
//! (`p_j' = j p_{j-1}`), the block matrix `W = [[H, C], [0, N]]` with
//! `C[:,k] = c_k` and `N` the weighted lower shift satisfies
//! `u(x) = [I 0] exp(x W) (u0; e_0)`, so a single matrix exponential per
//! evaluation point carries both the flow and the Duhamel integral. This also
//! covers the defective mode-0 block, which has no eigendecomposition.
//! Sampled forcing falls back to composite Gauss-Legendre quadrature with an
//! a-posteriori refinement check.

use crate::error::{PlateError, Result};
use crate::modes::ModeSystem;
use crate::poly::Poly;
use operator_core::{c64, expm, CMat, Complex64};
use std::sync::Arc;

/// Forcing for a mode solve.
#[derive(Clone)]
pub enum Forcing {
    Zero,
    /// One polynomial per state component.
    Polynomial(Vec<Poly>),
    /// Arbitrary sampled forcing with the quadrature order to use per panel.
    Sampled {
        f: Arc<dyn Fn(f64) -> Vec<Complex64> + Send + Sync>,
        order: usize,
    },
}

pub struct ModeTrajectory {
    pub mode_n: usize,
    h: CMat,
    u0: Vec<Complex64>,
    forcing: Forcing,
    pub x_end: f64,
}

pub fn solve_mode_ivp(
    sys: &ModeSystem,
    u0: &[Complex64],
    x_end: f64,
    forcing: Forcing,
) -> Result<ModeTrajectory> {
    assert_eq!(u0.len(), sys.dim(), "state dimension mismatch");
    if let Forcing::Polynomial(polys) = &forcing {
        assert_eq!(polys.len(), sys.dim(), "forcing dimension mismatch");
    }
    Ok(ModeTrajectory {
        mode_n: sys.mode_n,
        h: sys.h_matrix.clone(),
        u0: u0.to_vec(),
        forcing,
        x_end,
    })
}

impl ModeTrajectory {
    /// Evaluate the solution at `x`.
    pub fn eval(&self, x: f64) -> Result<Vec<Complex64>> {
        let d = self.h.nrows();
        match &self.forcing {
            Forcing::Zero => {
                let e = expm::expm(&self.h.scale(c64(x, 0.0)))?;
                Ok(e.matvec(&self.u0))
            }
            Forcing::Polynomial(polys) => {
                // monomial carrier p_j(x) = x^j: p_j' = j p_{j-1}, so the
                // augmented generator stays at the scale of the coefficients
                let deg = polys.iter().map(Poly::degree).max().unwrap_or(0);
                let aug = d + deg + 1;
                let mut w = CMat::zeros(aug, aug);
                w.set_block(0, 0, &self.h);
                for k in 0..=deg {
                    for (i, p) in polys.iter().enumerate() {
                        let ck = p.coeffs().get(k).copied().unwrap_or(0.0);
                        w[(i, d + k)] = c64(ck, 0.0);
                    }
                }
                for k in 1..=deg {
                    w[(d + k, d + k - 1)] = c64(k as f64, 0.0);
                }
                let e = expm::expm(&w.scale(c64(x, 0.0)))?;
                let mut z0 = vec![Complex64::new(0.0, 0.0); aug];
                z0[..d].copy_from_slice(&self.u0);
                z0[d] = c64(1.0, 0.0);
                let z = e.matvec(&z0);
                Ok(z[..d].to_vec())
            }
            Forcing::Sampled { f, order } => {
                let coarse = self.duhamel_quadrature(x, f, *order, 1)?;
                let fine = self.duhamel_quadrature(x, f, *order, 2)?;
                let err: f64 = coarse
                    .iter()
                    .zip(&fine)
                    .map(|(a, b)| (a - b).norm_sqr())
                    .sum::<f64>()
                    .sqrt();
                let scale = fine.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(1.0);
                let tol = 1e-10;
                if err > tol * scale {
                    return Err(PlateError::QuadratureFailure {
                        estimate: err / scale,
                        tol,
                    });
                }
                Ok(fine)
            }
        }
    }

    fn duhamel_quadrature(
        &self,
        x: f64,
        f: &Arc<dyn Fn(f64) -> Vec<Complex64> + Send + Sync>,
        order: usize,
        refine: usize,
    ) -> Result<Vec<Complex64>> {
        let e = expm::expm(&self.h.scale(c64(x, 0.0)))?;
        let mut u = e.matvec(&self.u0);
        let panels = refine * (1 + (x.abs() * self.h.one_norm() / 2.0).ceil() as usize);
        let (nodes, weights) = gauss_legendre(order.max(2));
        for p in 0..panels {
            let a = x * p as f64 / panels as f64;
            let b = x * (p + 1) as f64 / panels as f64;
            let half = (b - a) / 2.0;
            let mid = (a + b) / 2.0;
            for (t, wgt) in nodes.iter().zip(&weights) {
                let s = mid + half * t;
                let es = expm::expm(&self.h.scale(c64(x - s, 0.0)))?;
                let fs = f(s);
                let term = es.matvec(&fs);
                for (ui, ti) in u.iter_mut().zip(&term) {
                    *ui += c64(wgt * half, 0.0) * ti;
                }
            }
        }
        Ok(u)
    }

    /// Uniform samples `(x_i, u(x_i))`, endpoints included.
    pub fn sample(&self, points: usize) -> Result<Vec<(f64, Vec<Complex64>)>> {
        let n = points.max(2);
        (0..n)
            .map(|i| {
                let x = self.x_end * i as f64 / (n - 1) as f64;
                Ok((x, self.eval(x)?))
            })
            .collect()
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]` by Newton iteration on the
/// Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            // evaluate P_n and its derivative
            let (mut p0, mut p1) = (1.0f64, x);
            if n == 1 {
                p0 = x;
            }
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let (pn, pn1) = if n == 1 { (x, 1.0) } else { (p1, p0) };
            let dp = n as f64 * (x * pn - pn1) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (mut p0, mut p1) = (1.0f64, x);
        for k in 2..=n {
            let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
            p0 = p1;
            p1 = p2;
        }
        let (pn, pn1) = if n == 1 { (x, 1.0) } else { (p1, p0) };
        let dp = n as f64 * (x * pn - pn1) / (x * x - 1.0);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}
