//! Displacement recovery and the governing-equation residual.
//!
//! Per transverse mode `n`, the displacement coefficient solves the two-point
//! boundary value problem `w'' - (n pi)^2 w = u1` with `w(0)` and `w(h)`
//! prescribed. For polynomial `u1` the particular solution is the terminating
//! geometric series `-(1/k^2) (1 + D^2/k^2 + D^4/k^4 + ...) u1`; the
//! homogeneous correction is `A cosh(k x) + B sinh(k x)` fitted to the edge
//! data (`sinh(k h) != 0` whenever `n >= 1` and `h > 0`, so the fit is
//! well-posed there).

use crate::error::{PlateError, Result};
use crate::poly::Poly;
use serde::Serialize;
use std::f64::consts::PI;

pub const COLLOCATION_POINTS: usize = 33;

#[derive(Clone, Debug, Serialize)]
pub struct Displacement {
    pub mode_n: usize,
    pub kappa: f64,
    pub span_h: f64,
    /// Polynomial particular solution.
    pub particular: Poly,
    pub cosh_coeff: f64,
    pub sinh_coeff: f64,
    /// Max of `|w'' - kappa^2 w - u1|` on the collocation grid.
    pub residual: f64,
}

impl Displacement {
    pub fn eval(&self, x: f64) -> f64 {
        self.particular.eval(x)
            + self.cosh_coeff * (self.kappa * x).cosh()
            + self.sinh_coeff * (self.kappa * x).sinh()
    }

    pub fn eval_dx(&self, x: f64) -> f64 {
        self.particular.derivative().eval(x)
            + self.kappa
                * (self.cosh_coeff * (self.kappa * x).sinh()
                    + self.sinh_coeff * (self.kappa * x).cosh())
    }
}

/// Solve `w'' - (n pi)^2 w = u1`, `w(0) = w0`, `w(h) = wh`.
pub fn reconstruct_displacement(
    mode_n: usize,
    u1: &Poly,
    span_h: f64,
    w0: f64,
    wh: f64,
) -> Result<Displacement> {
    let kappa = mode_n as f64 * PI;
    let denominator = (kappa * span_h).sinh();
    if mode_n == 0 || span_h <= 0.0 || denominator.abs() < 1e-300 {
        return Err(PlateError::IllPosed {
            mode: mode_n,
            denominator,
        });
    }
    let k2 = kappa * kappa;
    // particular solution: -(1/k^2) sum_j D^{2j} u1 / k^{2j} (terminates)
    let mut series = Poly::zero();
    let mut term = u1.clone();
    let mut j = 0;
    while !term.is_zero() {
        series = series.add(&term.scale(1.0 / k2.powi(j)));
        term = term.nth_derivative(2);
        j += 1;
    }
    let particular = series.scale(-1.0 / k2);

    let cosh_coeff = w0 - particular.eval(0.0);
    let sinh_coeff = (wh - particular.eval(span_h) - cosh_coeff * (kappa * span_h).cosh())
        / denominator;

    let mut disp = Displacement {
        mode_n,
        kappa,
        span_h,
        particular,
        cosh_coeff,
        sinh_coeff,
        residual: 0.0,
    };
    // residual of the second-order equation on the collocation grid
    let p2 = disp.particular.nth_derivative(2);
    let mut worst: f64 = 0.0;
    for i in 0..COLLOCATION_POINTS {
        let x = span_h * i as f64 / (COLLOCATION_POINTS - 1) as f64;
        let w = disp.eval(x);
        let wpp = p2.eval(x)
            + k2 * (disp.cosh_coeff * (kappa * x).cosh() + disp.sinh_coeff * (kappa * x).sinh());
        worst = worst.max((wpp - k2 * w - u1.eval(x)).abs());
    }
    disp.residual = worst;
    Ok(disp)
}

/// Max residual of the plate equation
/// `D (w'''' - 2 (m pi)^2 w'' + (m pi)^4 w) - q_m` over all given modes on a
/// uniform collocation grid.
pub fn pde_residual(
    w_modes: &[(usize, Poly)],
    loads: &[(usize, Poly)],
    span_h: f64,
    rigidity_d: f64,
) -> f64 {
    let mut worst: f64 = 0.0;
    for (mode, w) in w_modes {
        let k2 = (*mode as f64 * PI).powi(2);
        let q = loads
            .iter()
            .find(|(m, _)| m == mode)
            .map(|(_, q)| q.clone())
            .unwrap_or_else(Poly::zero);
        let biharmonic = w
            .nth_derivative(4)
            .sub(&w.nth_derivative(2).scale(2.0 * k2))
            .add(&w.scale(k2 * k2))
            .scale(rigidity_d);
        let r = biharmonic.sub(&q);
        worst = worst.max(r.max_abs_on_grid(span_h, COLLOCATION_POINTS));
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_data_gives_zero_displacement() {
        let disp = reconstruct_displacement(1, &Poly::zero(), 1.0, 0.0, 0.0).unwrap();
        for i in 0..=10 {
            let x = i as f64 / 10.0;
            assert!(disp.eval(x).abs() < 1e-14);
        }
        assert!(disp.residual < 1e-14);
    }

    #[test]
    fn quadratic_manufactured_profile_recovered() {
        // u1 = phi'' - k^2 phi for phi = x^2 reconstructs exactly phi
        let phi = Poly::from_coeffs(vec![0.0, 0.0, 1.0]);
        let k2 = (PI).powi(2);
        let u1 = phi.nth_derivative(2).sub(&phi.scale(k2));
        let h = 1.0;
        let disp = reconstruct_displacement(1, &u1, h, phi.eval(0.0), phi.eval(h)).unwrap();
        for i in 0..=20 {
            let x = h * i as f64 / 20.0;
            assert!((disp.eval(x) - phi.eval(x)).abs() <= 1e-9, "at {x}");
        }
        assert!(disp.cosh_coeff.abs() < 1e-12 && disp.sinh_coeff.abs() < 1e-12);
        assert!(disp.residual <= 1e-9);
    }

    #[test]
    fn constant_load_with_zero_edges() {
        // u1 = c: w = -c/k^2 + A cosh + B sinh fitted to zero edges
        let c = 3.0;
        let n = 2;
        let k = n as f64 * PI;
        let h = 1.0;
        let disp = reconstruct_displacement(n, &Poly::constant(c), h, 0.0, 0.0).unwrap();
        assert!((disp.particular.eval(0.3) + c / (k * k)).abs() < 1e-13);
        assert!(disp.eval(0.0).abs() < 1e-12 && disp.eval(h).abs() < 1e-12);
        assert!(disp.residual <= 1e-9, "{}", disp.residual);
    }

    #[test]
    fn mode_zero_is_ill_posed() {
        assert!(matches!(
            reconstruct_displacement(0, &Poly::constant(1.0), 1.0, 0.0, 0.0),
            Err(PlateError::IllPosed { mode: 0, .. })
        ));
    }

    #[test]
    fn pde_residual_linear_perturbation_is_exact() {
        // perturbing w by eps*x adds exactly D k^4 eps x to the residual
        let m = 2usize;
        let k2 = (m as f64 * PI).powi(2);
        let d = 1.3;
        let eps = 1e-3;
        let h = 1.0;
        let phi = Poly::from_coeffs(vec![0.0, 0.0, 1.0]);
        let q = phi
            .nth_derivative(4)
            .sub(&phi.nth_derivative(2).scale(2.0 * k2))
            .add(&phi.scale(k2 * k2))
            .scale(d);
        let clean = pde_residual(&[(m, phi.clone())], &[(m, q.clone())], h, d);
        assert!(clean < 1e-10, "{clean}");
        let perturbed = phi.add(&Poly::from_coeffs(vec![0.0, eps]));
        let r = pde_residual(&[(m, perturbed)], &[(m, q)], h, d);
        let expect = d * k2 * k2 * eps * h;
        assert!((r - expect).abs() <= 1e-9 * expect, "{r} vs {expect}");
    }
}
