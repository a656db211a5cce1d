//! Real polynomials in one variable, coefficients in ascending degree order.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Poly(Vec<f64>);

impl Poly {
    pub fn zero() -> Self {
        Poly(vec![])
    }

    pub fn constant(c: f64) -> Self {
        Poly(vec![c]).trimmed()
    }

    /// `x`
    pub fn x() -> Self {
        Poly(vec![0.0, 1.0])
    }

    pub fn from_coeffs(c: impl Into<Vec<f64>>) -> Self {
        Poly(c.into()).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0.0) {
            self.0.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        if self.0.len() <= 1 {
            return Poly::zero();
        }
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
        .trimmed()
    }

    pub fn nth_derivative(&self, n: usize) -> Poly {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.derivative();
        }
        p
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&0.0) + other.0.get(k).unwrap_or(&0.0))
                .collect(),
        )
        .trimmed()
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, s: f64) -> Poly {
        Poly(self.0.iter().map(|&c| c * s).collect()).trimmed()
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0.0; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out).trimmed()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.0.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Max absolute value on a uniform grid over `[0, upper]`.
    pub fn max_abs_on_grid(&self, upper: f64, points: usize) -> f64 {
        (0..points)
            .map(|i| {
                let x = upper * i as f64 / (points - 1).max(1) as f64;
                self.eval(x).abs()
            })
            .fold(0.0, f64::max)
    }
}
