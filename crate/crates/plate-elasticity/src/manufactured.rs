//! Manufactured solutions for the plate equation.
//!
//! For a single transverse mode `m` and a polynomial profile `phi(x)`, the
//! displacement `w = phi(x) * sqrt(2) sin(m pi y)` generates exact coefficient
//! fields (writing `k = m pi`):
//!
//!   u1 = phi'' - k^2 phi          (sine slot)
//!   u2 = k (phi'' - k^2 phi)      (cosine slot)
//!   u3 = phi''' - k^2 phi'        (sine slot)
//!   u4 = -u2                      (cosine slot)
//!   q  = D (phi'''' - 2 k^2 phi'' + k^4 phi)
//!
//! and the trajectory satisfies `du/dx = H_m u + (0, 0, q/D, 0)` as a
//! polynomial identity, which makes these fields exact oracles for the
//! evolution solver and the displacement reconstruction.

use crate::error::{PlateError, Result};
use crate::poly::Poly;
use operator_core::{c64, Complex64};
use serde::Serialize;
use std::f64::consts::PI;

pub const MAX_PROFILE_DEGREE: usize = 12;

#[derive(Clone, Debug, Serialize)]
pub struct ManufacturedSolution {
    pub mode_m: usize,
    pub phi: Poly,
    pub span_h: f64,
    pub rigidity_d: f64,
    /// Coefficient polynomials `u1..u4`.
    pub fields: [Poly; 4],
    /// Load coefficient polynomial `q`.
    pub load: Poly,
}

pub fn manufactured_fields(
    mode_m: usize,
    phi: &Poly,
    span_h: f64,
    rigidity_d: f64,
) -> Result<ManufacturedSolution> {
    assert!(mode_m >= 1, "sine modes start at 1");
    if phi.degree() > MAX_PROFILE_DEGREE {
        return Err(PlateError::DegreeTooHigh {
            degree: phi.degree(),
            max: MAX_PROFILE_DEGREE,
        });
    }
    let k = mode_m as f64 * PI;
    let k2 = k * k;
    let d1 = phi.derivative();
    let d2 = d1.derivative();
    let d3 = d2.derivative();
    let d4 = d3.derivative();
    let u1 = d2.sub(&phi.scale(k2));
    let u2 = u1.scale(k);
    let u3 = d3.sub(&d1.scale(k2));
    let u4 = u2.scale(-1.0);
    let load = d4
        .sub(&d2.scale(2.0 * k2))
        .add(&phi.scale(k2 * k2))
        .scale(rigidity_d);
    Ok(ManufacturedSolution {
        mode_m,
        phi: phi.clone(),
        span_h,
        rigidity_d,
        fields: [u1, u2, u3, u4],
        load,
    })
}

impl ManufacturedSolution {
    pub fn state_at(&self, x: f64) -> Vec<Complex64> {
        self.fields.iter().map(|p| c64(p.eval(x), 0.0)).collect()
    }

    /// Per-component forcing `(0, 0, q/D, 0)`.
    pub fn forcing_polys(&self) -> Vec<Poly> {
        vec![
            Poly::zero(),
            Poly::zero(),
            self.load.scale(1.0 / self.rigidity_d),
            Poly::zero(),
        ]
    }

    /// Residual polynomials of `du/dx - (H_m u + f)`, built from the mode
    /// coupling `k = m pi` directly. All four must vanish identically.
    pub fn ode_residual_polys(&self) -> [Poly; 4] {
        let k = self.mode_m as f64 * PI;
        let [u1, u2, u3, u4] = &self.fields;
        let f3 = self.load.scale(1.0 / self.rigidity_d);
        // H_m rows: (k u2 + u3 + k u4, k u1 + k u3 + u4, -k u4 + f3, -k u3)
        let r1 = u1
            .derivative()
            .sub(&u2.scale(k).add(u3).add(&u4.scale(k)));
        let r2 = u2
            .derivative()
            .sub(&u1.scale(k).add(&u3.scale(k)).add(u4));
        let r3 = u3.derivative().sub(&u4.scale(-k).add(&f3));
        let r4 = u4.derivative().sub(&u3.scale(-k));
        [r1, r2, r3, r4]
    }

    pub fn max_ode_residual_coeff(&self) -> f64 {
        self.ode_residual_polys()
            .iter()
            .map(Poly::max_abs_coeff)
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_profile_fields() {
        // m = 1, phi = x^2: u1 = 2 - pi^2 x^2, q = D (0 - 4 pi^2 + pi^4 x^2)
        let phi = Poly::from_coeffs(vec![0.0, 0.0, 1.0]);
        let d = 2.5;
        let ms = manufactured_fields(1, &phi, 1.0, d).unwrap();
        let u1 = &ms.fields[0];
        assert!((u1.eval(0.0) - 2.0).abs() < 1e-14);
        let pi2 = PI * PI;
        assert!((u1.eval(1.0) - (2.0 - pi2)).abs() < 1e-12);
        let q = &ms.load;
        assert!((q.eval(0.0) - d * (-4.0 * pi2)).abs() < 1e-12);
        assert!((q.eval(1.0) - d * (-4.0 * pi2 + pi2 * pi2)).abs() < 1e-11);
    }

    #[test]
    fn zero_profile_gives_zero_fields() {
        let ms = manufactured_fields(2, &Poly::zero(), 1.0, 1.0).unwrap();
        assert!(ms.fields.iter().all(Poly::is_zero));
        assert!(ms.load.is_zero());
    }

    #[test]
    fn trajectory_satisfies_the_evolution_identity() {
        for m in 1..=3 {
            let phi = Poly::from_coeffs(vec![0.3, -1.0, 0.5, 2.0, 0.0, 1.0]);
            let ms = manufactured_fields(m, &phi, 1.0, 1.7).unwrap();
            let worst = ms.max_ode_residual_coeff();
            let scale = ms.fields.iter().map(Poly::max_abs_coeff).fold(1.0, f64::max);
            assert!(worst <= 1e-10 * scale, "mode {m}: residual {worst}");
        }
    }

    #[test]
    fn degree_cap_enforced() {
        let mut coeffs = vec![0.0; 14];
        coeffs[13] = 1.0;
        let phi = Poly::from_coeffs(coeffs);
        assert!(matches!(
            manufactured_fields(1, &phi, 1.0, 1.0),
            Err(PlateError::DegreeTooHigh { .. })
        ));
    }
}
