//! Plate problem data and its line-oriented config format.
//!
//! Grammar (one `key = value(s)` per line, `#` comments):
//!
//! ```text
//! n_modes    = 8
//! span_h     = 1.0
//! rigidity_D = 1.0
//! load.mode.3 = 0.0 0.0 1.0      # polynomial coefficients, ascending degree
//! edge.w0.3   = 0.0              # w_3(0)
//! edge.wh.3   = 0.25             # w_3(h)
//! edge.dw0.3  = 0.0              # optional derivative data, stored
//! edge.dwh.3  = 0.0
//! init.u.3    = 0 0 1 0          # optional per-mode initial state
//! ```
//!
//! Loads live in the sine family, so mode indices start at 1.

use crate::error::{PlateError, Result};
use crate::poly::Poly;
use operator_core::Complex64;
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Clone, Debug, Default, Serialize)]
pub struct EdgeData {
    pub w0: f64,
    pub wh: f64,
    pub dw0: Option<f64>,
    pub dwh: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PlateProblem {
    pub n_modes: usize,
    pub span_h: f64,
    pub rigidity_d: f64,
    /// Per-mode load coefficient polynomials (sine family, 1-based).
    pub loads: BTreeMap<usize, Poly>,
    pub edges: BTreeMap<usize, EdgeData>,
    /// Optional per-mode initial states for evolution solves.
    pub initial_states: BTreeMap<usize, [f64; 4]>,
}

impl PlateProblem {
    pub fn new(n_modes: usize, span_h: f64, rigidity_d: f64) -> Self {
        PlateProblem {
            n_modes,
            span_h,
            rigidity_d,
            loads: BTreeMap::new(),
            edges: BTreeMap::new(),
            initial_states: BTreeMap::new(),
        }
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref()).map_err(operator_core::CoreError::Io)?;
        Self::from_config_str(&text)
    }

    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut n_modes = None;
        let mut span_h = None;
        let mut rigidity_d = None;
        let mut loads = BTreeMap::new();
        let mut edges: BTreeMap<usize, EdgeData> = BTreeMap::new();
        let mut initial_states = BTreeMap::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| PlateError::ParseError {
                line: line_no,
                message: "expected 'key = value'".into(),
            })?;
            let key = key.trim();
            let value = value.trim();
            let parse_f64 = |s: &str| -> Result<f64> {
                s.parse().map_err(|_| PlateError::ParseError {
                    line: line_no,
                    message: format!("cannot parse number '{s}'"),
                })
            };
            let parse_f64_list = |s: &str| -> Result<Vec<f64>> {
                s.split_whitespace().map(parse_f64).collect()
            };
            let mode_of = |key: &str, prefix: &str| -> Result<usize> {
                key.strip_prefix(prefix)
                    .and_then(|m| m.parse::<usize>().ok())
                    .ok_or_else(|| PlateError::ParseError {
                        line: line_no,
                        message: format!("cannot parse mode index in '{key}'"),
                    })
            };

            if key == "n_modes" {
                n_modes = Some(value.parse::<usize>().map_err(|_| PlateError::ParseError {
                    line: line_no,
                    message: format!("cannot parse n_modes '{value}'"),
                })?);
            } else if key == "span_h" {
                span_h = Some(parse_f64(value)?);
            } else if key == "rigidity_D" {
                rigidity_d = Some(parse_f64(value)?);
            } else if key.starts_with("load.mode.") {
                let mode = mode_of(key, "load.mode.")?;
                loads.insert(mode, Poly::from_coeffs(parse_f64_list(value)?));
            } else if key.starts_with("edge.w0.") {
                let mode = mode_of(key, "edge.w0.")?;
                edges.entry(mode).or_default().w0 = parse_f64(value)?;
            } else if key.starts_with("edge.wh.") {
                let mode = mode_of(key, "edge.wh.")?;
                edges.entry(mode).or_default().wh = parse_f64(value)?;
            } else if key.starts_with("edge.dw0.") {
                let mode = mode_of(key, "edge.dw0.")?;
                edges.entry(mode).or_default().dw0 = Some(parse_f64(value)?);
            } else if key.starts_with("edge.dwh.") {
                let mode = mode_of(key, "edge.dwh.")?;
                edges.entry(mode).or_default().dwh = Some(parse_f64(value)?);
            } else if key.starts_with("init.u.") {
                let mode = mode_of(key, "init.u.")?;
                let v = parse_f64_list(value)?;
                if v.len() != 4 {
                    return Err(PlateError::ParseError {
                        line: line_no,
                        message: format!("init.u expects 4 components, got {}", v.len()),
                    });
                }
                initial_states.insert(mode, [v[0], v[1], v[2], v[3]]);
            } else {
                return Err(PlateError::ParseError {
                    line: line_no,
                    message: format!("unknown key '{key}'"),
                });
            }
        }

        let n_modes = n_modes.ok_or(PlateError::ParseError {
            line: 0,
            message: "missing required key n_modes".into(),
        })?;
        let span_h = span_h.ok_or(PlateError::ParseError {
            line: 0,
            message: "missing required key span_h".into(),
        })?;
        let rigidity_d = rigidity_d.ok_or(PlateError::ParseError {
            line: 0,
            message: "missing required key rigidity_D".into(),
        })?;
        if n_modes == 0 || span_h <= 0.0 || rigidity_d <= 0.0 {
            return Err(PlateError::ParseError {
                line: 0,
                message: "n_modes, span_h, rigidity_D must be positive".into(),
            });
        }
        for &mode in loads.keys().chain(edges.keys()).chain(initial_states.keys()) {
            if mode == 0 || mode > n_modes {
                return Err(PlateError::ParseError {
                    line: 0,
                    message: format!("mode index {mode} outside 1..={n_modes} (sine family)"),
                });
            }
        }
        Ok(PlateProblem {
            n_modes,
            span_h,
            rigidity_d,
            loads,
            edges,
            initial_states,
        })
    }
}

/// Coefficient state `(u1, u2, u3, u4)` on the plate space; components live
/// in the sine (N), cosine (N+1), sine, cosine slots. Total dimension 4N+2.
#[derive(Clone, Debug)]
pub struct StateVector {
    pub u1: Vec<Complex64>,
    pub u2: Vec<Complex64>,
    pub u3: Vec<Complex64>,
    pub u4: Vec<Complex64>,
}

impl StateVector {
    pub fn zeros(n_modes: usize) -> Self {
        StateVector {
            u1: vec![Complex64::new(0.0, 0.0); n_modes],
            u2: vec![Complex64::new(0.0, 0.0); n_modes + 1],
            u3: vec![Complex64::new(0.0, 0.0); n_modes],
            u4: vec![Complex64::new(0.0, 0.0); n_modes + 1],
        }
    }

    pub fn n_modes(&self) -> usize {
        self.u1.len()
    }

    pub fn dim(&self) -> usize {
        4 * self.n_modes() + 2
    }

    /// Flatten in the dense layout `[u1; u2; u3; u4]`.
    pub fn to_dense(&self) -> Vec<Complex64> {
        let mut v = Vec::with_capacity(self.dim());
        v.extend_from_slice(&self.u1);
        v.extend_from_slice(&self.u2);
        v.extend_from_slice(&self.u3);
        v.extend_from_slice(&self.u4);
        v
    }

    pub fn from_dense(n_modes: usize, v: &[Complex64]) -> Self {
        assert_eq!(v.len(), 4 * n_modes + 2);
        let n = n_modes;
        StateVector {
            u1: v[0..n].to_vec(),
            u2: v[n..2 * n + 1].to_vec(),
            u3: v[2 * n + 1..3 * n + 1].to_vec(),
            u4: v[3 * n + 1..].to_vec(),
        }
    }

    /// Gather the 4-vector of mode `n >= 1`.
    pub fn mode(&self, n: usize) -> [Complex64; 4] {
        [self.u1[n - 1], self.u2[n], self.u3[n - 1], self.u4[n]]
    }

    /// Scatter a 4-vector into mode `n >= 1`.
    pub fn set_mode(&mut self, n: usize, v: [Complex64; 4]) {
        self.u1[n - 1] = v[0];
        self.u2[n] = v[1];
        self.u3[n - 1] = v[2];
        self.u4[n] = v[3];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "\
# demo plate
n_modes = 4
span_h = 2.0
rigidity_D = 1.5
load.mode.1 = 0.0 0.0 1.0
edge.w0.1 = 0.0
edge.wh.1 = 4.0
init.u.2 = 0 0 1 0
";

    #[test]
    fn parses_the_documented_grammar() {
        let p = PlateProblem::from_config_str(EXAMPLE).unwrap();
        assert_eq!(p.n_modes, 4);
        assert_eq!(p.span_h, 2.0);
        assert_eq!(p.rigidity_d, 1.5);
        assert_eq!(p.loads[&1].coeffs(), &[0.0, 0.0, 1.0]);
        assert_eq!(p.edges[&1].wh, 4.0);
        assert_eq!(p.initial_states[&2], [0.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn unknown_key_names_line() {
        let err = PlateProblem::from_config_str("n_modes = 2\nspan_h = 1\nrigidity_D = 1\nbogus = 3\n")
            .unwrap_err()
            .to_string();
        assert!(err.contains("line 4"), "{err}");
    }

    #[test]
    fn sine_mode_zero_rejected() {
        let err = PlateProblem::from_config_str(
            "n_modes = 2\nspan_h = 1\nrigidity_D = 1\nload.mode.0 = 1.0\n",
        )
        .unwrap_err()
        .to_string();
        assert!(err.contains("sine"), "{err}");
    }

    #[test]
    fn state_vector_roundtrip_and_mode_access() {
        let mut s = StateVector::zeros(3);
        s.set_mode(2, [operator_core::c64(1.0, 0.0); 4]);
        let dense = s.to_dense();
        let back = StateVector::from_dense(3, &dense);
        assert_eq!(back.mode(2)[0], operator_core::c64(1.0, 0.0));
        assert_eq!(back.mode(1)[0], operator_core::c64(0.0, 0.0));
        assert_eq!(s.dim(), 14);
    }
}
