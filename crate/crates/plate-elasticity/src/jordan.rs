//! Jordan chains of the per-mode blocks.
//!
//! Rank decisions use singular values with a documented threshold relative to
//! the block scale; chains satisfy `(H - lambda) v_{j+1} = v_j` with the head
//! `v_1` an eigenvector. The constant mode carries the single nontrivial
//! Jordan block `[[0, 1], [0, 0]]`; the modes `n >= 1` are diagonalizable
//! with two independent eigenvectors at each of `+-n pi`.

use crate::error::{PlateError, Result};
use crate::modes::ModeSystem;
use operator_core::{svd, vec_norm, CMat, Complex64, OperatorRep};
use serde::Serialize;

/// Singular values below `RANK_TOL * ||block||` count as zero.
pub const RANK_TOL: f64 = 1e-8;

#[derive(Clone, Debug, Serialize)]
pub struct JordanChainReport {
    pub mode_n: usize,
    pub eigenvalue: Complex64,
    pub algebraic_multiplicity: usize,
    pub geometric_multiplicity: usize,
    /// Chains ordered head first: `chain[0]` is the eigenvector and
    /// `(H - lambda) chain[j+1] = chain[j]`.
    pub chains: Vec<Vec<Vec<Complex64>>>,
    /// Residual per chain and link: entry 0 is `||(H - lambda) chain[0]||`,
    /// entry `j >= 1` is `||(H - lambda) chain[j] - chain[j-1]||`, each
    /// relative to `max(||chain member||, 1)`.
    pub link_residuals: Vec<Vec<f64>>,
    pub max_residual: f64,
    pub rank_tolerance: f64,
}

/// Orthonormal basis of the kernel of `m` (columns), using the rank
/// threshold `tol` on singular values.
fn kernel_basis(m: &CMat, tol: f64) -> Vec<Vec<Complex64>> {
    let dec = svd::svd(m).expect("Jacobi SVD converges");
    let n = m.ncols();
    let mut basis = Vec::new();
    for (j, &s) in dec.values.iter().enumerate() {
        if s <= tol {
            basis.push(dec.v.column(j));
        }
    }
    // values are descending so trailing columns of V span the kernel
    let _ = n;
    basis
}

fn project_off(v: &mut [Complex64], basis: &[Vec<Complex64>]) {
    for b in basis {
        let coeff = operator_core::vec_dot(b, v);
        for (x, bb) in v.iter_mut().zip(b) {
            *x -= coeff * bb;
        }
    }
}

fn normalize(v: &mut [Complex64]) -> f64 {
    let n = vec_norm(v);
    if n > 0.0 {
        for x in v.iter_mut() {
            *x /= n;
        }
    }
    n
}

/// Compute the Jordan chains of `sys.h_matrix` at `lambda`.
pub fn jordan_chains(sys: &ModeSystem, lambda: Complex64) -> Result<JordanChainReport> {
    let h = &sys.h_matrix;
    let d = h.nrows();
    let scale = h.max_abs().max(1.0);
    let cluster_tol = 1e-6 * scale;

    let eigs = OperatorRep::from_matrix(h.clone()).eig()?;
    let algebraic = eigs
        .eigenvalues
        .iter()
        .filter(|z| (*z - lambda).norm() <= cluster_tol)
        .count();
    if algebraic == 0 {
        let nearest = eigs
            .eigenvalues
            .iter()
            .map(|z| (z - lambda).norm())
            .fold(f64::INFINITY, f64::min);
        return Err(PlateError::NotAnEigenvalue {
            value: format!("{lambda}"),
            mode: sys.mode_n,
            distance: nearest,
        });
    }

    let rank_tolerance = RANK_TOL * scale;
    let k = h.shift(lambda);

    // null spaces of K^p until the dimension saturates at the algebraic
    // multiplicity
    let mut powers = vec![CMat::identity(d)];
    let mut null_dims = vec![0usize];
    let mut null_bases: Vec<Vec<Vec<Complex64>>> = vec![vec![]];
    loop {
        let next = powers.last().unwrap().matmul(&k);
        let basis = kernel_basis(&next, rank_tolerance);
        let dim = basis.len();
        powers.push(next);
        null_bases.push(basis);
        null_dims.push(dim);
        if dim >= algebraic || null_dims.len() > d + 1 {
            break;
        }
        if null_dims.len() >= 2 && dim == null_dims[null_dims.len() - 2] {
            break; // stagnated
        }
    }
    let geometric = null_dims.get(1).copied().unwrap_or(0);
    let p_max = null_dims.len() - 1;

    // build chains from the top: at stage p we need
    // (dim N_p - dim N_{p-1}) - (already running chains) new tops
    let mut chains: Vec<Vec<Vec<Complex64>>> = Vec::new();
    let mut tops_at_level: Vec<Vec<Vec<Complex64>>> = vec![Vec::new(); p_max + 1];
    for p in (1..=p_max).rev() {
        let want = null_dims[p].saturating_sub(null_dims[p - 1]);
        let running = chains.iter().filter(|c| c.len() >= p).count();
        let new = want.saturating_sub(running);
        for _ in 0..new {
            // candidate in ker K^p independent of ker K^{p-1} and of the
            // K-images of existing longer chains at this level
            let mut constraints: Vec<Vec<Complex64>> = null_bases[p - 1].clone();
            for t in &tops_at_level[p] {
                let mut t = t.clone();
                normalize(&mut t);
                project_off(&mut t, &constraints);
                if normalize(&mut t) > 1e-8 {
                    constraints.push(t);
                }
            }
            let mut best: Option<(f64, Vec<Complex64>)> = None;
            for cand in &null_bases[p] {
                let mut v = cand.clone();
                project_off(&mut v, &constraints);
                let r = vec_norm(&v);
                if best.as_ref().map_or(true, |(b, _)| r > *b) {
                    best = Some((r, v));
                }
            }
            let (residual_mass, mut top) = best.expect("kernel basis nonempty");
            if residual_mass <= 1e-8 {
                continue; // numerically no independent direction left
            }
            normalize(&mut top);
            // descend: chain = [K^{p-1} top, ..., K top, top]
            let mut chain = vec![top.clone()];
            let mut cur = top.clone();
            for level in (1..p).rev() {
                cur = k.matvec(&cur);
                tops_at_level[level].push(cur.clone());
                chain.push(cur.clone());
            }
            chain.reverse();
            tops_at_level[p].push(top);
            chains.push(chain);
        }
    }
    // order: longest chains first, then by head norm for determinism
    chains.sort_by(|a, b| b.len().cmp(&a.len()));

    let mut link_residuals = Vec::new();
    let mut max_residual: f64 = 0.0;
    for chain in &chains {
        let mut res = Vec::new();
        for (j, v) in chain.iter().enumerate() {
            let kv = k.matvec(v);
            let r = if j == 0 {
                vec_norm(&kv)
            } else {
                let prev = &chain[j - 1];
                let diff: Vec<Complex64> = kv.iter().zip(prev).map(|(a, b)| a - b).collect();
                vec_norm(&diff)
            };
            let rel = r / vec_norm(v).max(1.0);
            max_residual = max_residual.max(rel);
            res.push(rel);
        }
        link_residuals.push(res);
    }

    Ok(JordanChainReport {
        mode_n: sys.mode_n,
        eigenvalue: lambda,
        algebraic_multiplicity: algebraic,
        geometric_multiplicity: geometric,
        chains,
        link_residuals,
        max_residual,
        rank_tolerance,
    })
}
