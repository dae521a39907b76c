//! Independent reference computations shared by the integration tests.
//! Everything here works on explicit index loops, not on the library's
//! contraction routines.
#![allow(dead_code)]

use std::sync::Arc;

use hqcert::chn::ChnEngine;
use hqcert::ncalg::{NCMatrix, NCPoly};
use hqcert::tensor::{decode, encode};
use hqcert::{ExactScalar, FChoice, HqMatrix, RFPair, TensorOp};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn pair(n: usize, q: i64, f: FChoice) -> RFPair {
    RFPair::standard(n, ExactScalar::from(q), f).unwrap()
}

pub fn engine(n: usize, q: i64, f: FChoice) -> ChnEngine {
    ChnEngine::new(Arc::new(HqMatrix::generic(Arc::new(pair(n, q, f)))))
}

/// Nonzero rationals with numerators and denominators up to 9.
pub fn random_rationals(seed: u64, count: usize) -> Vec<ExactScalar> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut num = 0;
            while num == 0 {
                num = rng.gen_range(-9..=9);
            }
            ExactScalar::new(num, rng.gen_range(1..=9))
        })
        .collect()
}

/// `Σ_v X^{u v}_{w v}`-style trace over every leg but the first, weighted by
/// `D` on each traced leg: `Σ ∏ D^{u_i}_{v_i} X^{(a,v)}_{(b,u)}`.
pub fn ftrace_keep_first(d: &TensorOp, x: &TensorOp) -> TensorOp {
    let n = x.dim();
    let k = x.legs();
    let rest = n.pow(k as u32 - 1);
    let mut out = TensorOp::zeros(n, 1);
    for a in 0..n {
        for b in 0..n {
            let mut acc = ExactScalar::zero();
            for u in 0..rest {
                let ud = decode(u, n, k - 1);
                for v in 0..rest {
                    let vd = decode(v, n, k - 1);
                    let mut w = ExactScalar::one();
                    for (ui, vi) in ud.iter().zip(&vd) {
                        w *= d.get(*ui, *vi);
                        if w.is_zero() {
                            break;
                        }
                    }
                    if w.is_zero() {
                        continue;
                    }
                    let row: Vec<usize> = std::iter::once(a).chain(vd.iter().copied()).collect();
                    let col: Vec<usize> = std::iter::once(b).chain(ud.iter().copied()).collect();
                    acc += &(&w * x.get(encode(&row, n), encode(&col, n)));
                }
            }
            out.set(a, b, acc);
        }
    }
    out
}

/// Full F-trace `tr(D^{⊗k} X)`.
pub fn ftrace_full(d: &TensorOp, x: &TensorOp) -> ExactScalar {
    let first = ftrace_keep_first(d, x);
    let n = x.dim();
    let mut acc = ExactScalar::zero();
    for u in 0..n {
        for v in 0..n {
            acc += &(d.get(u, v) * first.get(v, u));
        }
    }
    acc
}

/// Reference matrix product.
pub fn matmul(a: &TensorOp, b: &TensorOp) -> TensorOp {
    let size = a.size();
    let mut out = TensorOp::zeros(a.dim(), a.legs());
    for i in 0..size {
        for j in 0..size {
            let mut acc = ExactScalar::zero();
            for k in 0..size {
                acc += &(a.get(i, k) * b.get(k, j));
            }
            out.set(i, j, acc);
        }
    }
    out
}

/// Value of a polynomial under `M ↦ c·Id`.
pub fn at_scalar(hq: &HqMatrix, p: &NCPoly, c: &ExactScalar) -> ExactScalar {
    let values = hq.scalar_values(c);
    p.evaluate(|g| values.get(&g).cloned().unwrap_or_else(ExactScalar::zero))
}

/// Entrywise value of a polynomial matrix under `M ↦ c·Id`.
pub fn matrix_at_scalar(hq: &HqMatrix, m: &NCMatrix, c: &ExactScalar) -> TensorOp {
    let values = hq.scalar_values(c);
    m.evaluate(|g| values.get(&g).cloned().unwrap_or_else(ExactScalar::zero))
}

/// Rank of a list of polynomials, by plain Gaussian elimination on their
/// coefficient table.
pub fn poly_rank(polys: &[NCPoly]) -> usize {
    let mut words: Vec<Vec<u32>> = polys.iter().flat_map(|p| p.terms().map(|(w, _)| w.clone())).collect();
    words.sort();
    words.dedup();
    let mut rows: Vec<Vec<ExactScalar>> =
        polys.iter().map(|p| words.iter().map(|w| p.coefficient(w)).collect()).collect();
    let mut rank = 0;
    for col in 0..words.len() {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip().unwrap();
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = &row[col] * &inv;
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &(&factor * p);
                }
            }
        }
        rank += 1;
    }
    rank
}
