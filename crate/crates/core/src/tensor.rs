//! Dense exact operators on tensor powers `V^{⊗N}`.
//!
//! Rows and columns are indexed by multi-indices `(a_1, ..., a_N)` with
//! `a_i ∈ 0..n`, linearized lexicographically with leg 1 most significant.
//! Leg numbers in the public API are 1-based.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalars::ExactScalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorOp {
    dim: usize,
    legs: usize,
    entries: Vec<ExactScalar>,
}

/// Splits a linear index into its multi-index digits (leg 1 first).
pub fn decode(mut index: usize, dim: usize, legs: usize) -> Vec<usize> {
    let mut digits = vec![0; legs];
    for slot in digits.iter_mut().rev() {
        *slot = index % dim;
        index /= dim;
    }
    digits
}

pub fn encode(digits: &[usize], dim: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * dim + d)
}

impl TensorOp {
    pub fn zeros(dim: usize, legs: usize) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        let size = dim.pow(legs as u32);
        TensorOp { dim, legs, entries: vec![ExactScalar::zero(); size * size] }
    }

    pub fn identity(dim: usize, legs: usize) -> Self {
        let mut op = Self::zeros(dim, legs);
        for i in 0..op.size() {
            op.set(i, i, ExactScalar::one());
        }
        op
    }

    pub fn scalar(dim: usize, value: ExactScalar) -> Self {
        TensorOp { dim, legs: 0, entries: vec![value] }
    }

    /// Builds an operator from a row-major entry list of length `(n^N)^2`.
    pub fn from_entries(dim: usize, legs: usize, entries: Vec<ExactScalar>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Dimension("dimension must be positive".into()));
        }
        let size = dim.pow(legs as u32);
        if entries.len() != size * size {
            return Err(Error::Dimension(format!(
                "expected {} entries for n={dim}, legs={legs}, got {}",
                size * size,
                entries.len()
            )));
        }
        Ok(TensorOp { dim, legs, entries })
    }

    /// Builds an operator entry by entry from `(row multi-index, column multi-index)`.
    pub fn from_fn(dim: usize, legs: usize, mut f: impl FnMut(&[usize], &[usize]) -> ExactScalar) -> Self {
        let mut op = Self::zeros(dim, legs);
        let size = op.size();
        for r in 0..size {
            let rd = decode(r, dim, legs);
            for c in 0..size {
                let cd = decode(c, dim, legs);
                op.entries[r * size + c] = f(&rd, &cd);
            }
        }
        op
    }

    /// The flip `P(v⊗w) = w⊗v`.
    pub fn permutation_p(dim: usize) -> Self {
        Self::from_fn(dim, 2, |r, c| {
            if r[0] == c[1] && r[1] == c[0] {
                ExactScalar::one()
            } else {
                ExactScalar::zero()
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    /// Side length `n^N` of the matrix.
    pub fn size(&self) -> usize {
        self.dim.pow(self.legs as u32)
    }

    pub fn entries(&self) -> &[ExactScalar] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &ExactScalar {
        &self.entries[row * self.size() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: ExactScalar) {
        let size = self.size();
        self.entries[row * size + col] = value;
    }

    pub fn entry(&self, row: &[usize], col: &[usize]) -> &ExactScalar {
        self.get(encode(row, self.dim), encode(col, self.dim))
    }

    /// Nonzero entries of one row as `(column, value)`.
    pub fn row_nonzeros(&self, row: usize) -> impl Iterator<Item = (usize, &ExactScalar)> {
        let size = self.size();
        self.entries[row * size..(row + 1) * size]
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ExactScalar::is_zero)
    }

    /// The sole entry of a 0-leg operator.
    pub fn as_scalar(&self) -> Option<&ExactScalar> {
        (self.legs == 0).then(|| &self.entries[0])
    }

    fn check_same_shape(&self, other: &TensorOp) -> Result<()> {
        if self.dim != other.dim || self.legs != other.legs {
            return Err(Error::Dimension(format!(
                "shape mismatch: (n={}, legs={}) vs (n={}, legs={})",
                self.dim, self.legs, other.dim, other.legs
            )));
        }
        Ok(())
    }

    /// Exact matrix product `self · other`.
    pub fn compose(&self, other: &TensorOp) -> Result<TensorOp> {
        self.check_same_shape(other)?;
        let size = self.size();
        let rows_b: Vec<Vec<(usize, &ExactScalar)>> = (0..size).map(|k| other.row_nonzeros(k).collect()).collect();
        let mut out = TensorOp::zeros(self.dim, self.legs);
        for i in 0..size {
            for (k, a) in self.row_nonzeros(i) {
                for &(j, b) in &rows_b[k] {
                    out.entries[i * size + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Product of a sequence of same-shape operators, left to right.
    pub fn product<'a>(dim: usize, legs: usize, ops: impl IntoIterator<Item = &'a TensorOp>) -> Result<TensorOp> {
        let mut acc = TensorOp::identity(dim, legs);
        for op in ops {
            acc = acc.compose(op)?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &TensorOp) -> Result<TensorOp> {
        self.check_same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(TensorOp { dim: self.dim, legs: self.legs, entries })
    }

    pub fn sub(&self, other: &TensorOp) -> Result<TensorOp> {
        self.check_same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(TensorOp { dim: self.dim, legs: self.legs, entries })
    }

    pub fn scale(&self, s: &ExactScalar) -> TensorOp {
        let entries = self.entries.iter().map(|a| a * s).collect();
        TensorOp { dim: self.dim, legs: self.legs, entries }
    }

    /// Kronecker product `self ⊗ other`; legs of `self` come first.
    pub fn kron(&self, other: &TensorOp) -> Result<TensorOp> {
        if self.dim != other.dim {
            return Err(Error::Dimension("kron of operators on different spaces".into()));
        }
        let (sa, sb) = (self.size(), other.size());
        let mut out = TensorOp::zeros(self.dim, self.legs + other.legs);
        let size = sa * sb;
        for i in 0..sa {
            for (j, a) in self.row_nonzeros(i) {
                for k in 0..sb {
                    for (l, b) in other.row_nonzeros(k) {
                        out.entries[(i * sb + k) * size + j * sb + l] = a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Places `self` on the consecutive legs `at, at+1, ...` of a `total`-leg space.
    pub fn embed(&self, at: usize, total: usize) -> Result<TensorOp> {
        if at == 0 || at + self.legs > total + 1 {
            return Err(Error::Dimension(format!(
                "cannot place a {}-leg operator at leg {at} of {total}",
                self.legs
            )));
        }
        let legs: Vec<usize> = (at..at + self.legs).collect();
        self.embed_legs(&legs, total)
    }

    /// Places `self` on the listed legs (leg `j` of `self` goes to `legs[j]`),
    /// acting as the identity elsewhere.
    pub fn embed_legs(&self, legs: &[usize], total: usize) -> Result<TensorOp> {
        if legs.len() != self.legs {
            return Err(Error::Dimension("leg list length differs from operator legs".into()));
        }
        let mut seen = vec![false; total + 1];
        for &l in legs {
            if l == 0 || l > total || seen[l] {
                return Err(Error::Dimension(format!("invalid leg placement {legs:?} in {total} legs")));
            }
            seen[l] = true;
        }
        let free: Vec<usize> = (1..=total).filter(|l| !seen[*l]).collect();
        let n = self.dim;
        let mut out = TensorOp::zeros(n, total);
        let size = out.size();
        let inner = self.size();
        let nonzeros: Vec<(Vec<usize>, Vec<usize>, &ExactScalar)> = (0..inner)
            .flat_map(|r| self.row_nonzeros(r).map(move |(c, v)| (r, c, v)))
            .map(|(r, c, v)| (decode(r, n, self.legs), decode(c, n, self.legs), v))
            .collect();
        let mut row = vec![0; total];
        let mut col = vec![0; total];
        for f in 0..n.pow(free.len() as u32) {
            let fd = decode(f, n, free.len());
            for (slot, &l) in free.iter().enumerate() {
                row[l - 1] = fd[slot];
                col[l - 1] = fd[slot];
            }
            for (rd, cd, v) in &nonzeros {
                for (j, &l) in legs.iter().enumerate() {
                    row[l - 1] = rd[j];
                    col[l - 1] = cd[j];
                }
                out.entries[encode(&row, n) * size + encode(&col, n)] = (*v).clone();
            }
        }
        Ok(out)
    }

    /// `Id^{⊗k} ⊗ self`.
    pub fn shift_up(&self, k: usize) -> TensorOp {
        TensorOp::identity(self.dim, k).kron(self).expect("same dimension")
    }

    /// Relabels legs: leg `i` of `self` becomes leg `perm[i-1]` of the result.
    pub fn permute_legs(&self, perm: &[usize]) -> Result<TensorOp> {
        let legs = self.legs;
        let mut seen = vec![false; legs + 1];
        if perm.len() != legs || perm.iter().any(|&p| p == 0 || p > legs || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidParameter(format!("{perm:?} is not a permutation of 1..={legs}")));
        }
        let n = self.dim;
        let size = self.size();
        let relabel = |idx: usize| {
            let d = decode(idx, n, legs);
            let mut out = vec![0; legs];
            for (i, &p) in perm.iter().enumerate() {
                out[p - 1] = d[i];
            }
            encode(&out, n)
        };
        let map: Vec<usize> = (0..size).map(relabel).collect();
        let mut out = TensorOp::zeros(n, legs);
        for r in 0..size {
            for (c, v) in self.row_nonzeros(r) {
                out.entries[map[r] * size + map[c]] = v.clone();
            }
        }
        Ok(out)
    }

    /// Traces out the listed legs, keeping the remaining legs in their original order.
    pub fn partial_trace(&self, traced: &[usize]) -> Result<TensorOp> {
        let plan = TracePlan::new(self.dim, self.legs, traced)?;
        let mut out = TensorOp::zeros(self.dim, plan.kept.len());
        let out_size = out.size();
        for (r_out, c_out, pairs) in plan.iter() {
            let mut acc = ExactScalar::zero();
            for (r, c) in pairs {
                acc += self.get(r, c);
            }
            out.entries[r_out * out_size + c_out] = acc;
        }
        Ok(out)
    }

    pub fn trace(&self) -> ExactScalar {
        (0..self.size()).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.entries, self.size(), self.size())
    }

    pub fn inverse(&self) -> Option<TensorOp> {
        linalg::inverse(&self.entries, self.size()).map(|entries| TensorOp { dim: self.dim, legs: self.legs, entries })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&TensorOpFile::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<TensorOp> {
        serde_json::from_str::<TensorOpFile>(text)?.try_into()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<TensorOp> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}

/// Index bookkeeping for partial traces, shared with the noncommutative matrices.
pub(crate) struct TracePlan {
    dim: usize,
    legs: usize,
    pub(crate) kept: Vec<usize>,
    traced: Vec<usize>,
}

impl TracePlan {
    pub(crate) fn new(dim: usize, legs: usize, traced: &[usize]) -> Result<Self> {
        let mut mark = vec![false; legs + 1];
        for &l in traced {
            if l == 0 || l > legs || mark[l] {
                return Err(Error::Dimension(format!("cannot trace legs {traced:?} of a {legs}-leg operator")));
            }
            mark[l] = true;
        }
        let kept = (1..=legs).filter(|l| !mark[*l]).collect();
        let traced = (1..=legs).filter(|l| mark[*l]).collect();
        Ok(TracePlan { dim, legs, kept, traced })
    }

    /// For every output entry, the list of input `(row, col)` positions summed into it.
    pub(crate) fn iter(&self) -> impl Iterator<Item = (usize, usize, Vec<(usize, usize)>)> + '_ {
        let n = self.dim;
        let out_size = n.pow(self.kept.len() as u32);
        let inner = n.pow(self.traced.len() as u32);
        (0..out_size * out_size).map(move |idx| {
            let (r_out, c_out) = (idx / out_size, idx % out_size);
            let rd = decode(r_out, n, self.kept.len());
            let cd = decode(c_out, n, self.kept.len());
            let mut row = vec![0; self.legs];
            let mut col = vec![0; self.legs];
            for (j, &l) in self.kept.iter().enumerate() {
                row[l - 1] = rd[j];
                col[l - 1] = cd[j];
            }
            let pairs = (0..inner)
                .map(|t| {
                    let td = decode(t, n, self.traced.len());
                    for (j, &l) in self.traced.iter().enumerate() {
                        row[l - 1] = td[j];
                        col[l - 1] = td[j];
                    }
                    (encode(&row, n), encode(&col, n))
                })
                .collect();
            (r_out, c_out, pairs)
        })
    }
}

#[derive(Serialize, Deserialize)]
struct TensorOpFile {
    n: usize,
    legs: usize,
    entries: Vec<Vec<ExactScalar>>,
}

impl From<&TensorOp> for TensorOpFile {
    fn from(op: &TensorOp) -> Self {
        let size = op.size();
        TensorOpFile {
            n: op.dim,
            legs: op.legs,
            entries: op.entries.chunks(size).map(<[ExactScalar]>::to_vec).collect(),
        }
    }
}

impl TryFrom<TensorOpFile> for TensorOp {
    type Error = Error;

    fn try_from(file: TensorOpFile) -> Result<TensorOp> {
        let size = file.n.checked_pow(file.legs as u32).unwrap_or(0);
        if file.entries.len() != size || file.entries.iter().any(|row| row.len() != size) {
            return Err(Error::Dimension(format!("entries are not a {size}x{size} nested list")));
        }
        TensorOp::from_entries(file.n, file.legs, file.entries.into_iter().flatten().collect())
    }
}
