use crate::error::{Error, Result};
use crate::rmatrix::d_on_legs;
use crate::scalars::ExactScalar;
use crate::tensor::{decode, encode, TensorOp, TracePlan};

use super::poly::NCPoly;

/// Operator on `V^{⊗N}` whose entries are noncommutative polynomials.
///
/// Indexing follows [`TensorOp`]: row-major, lexicographic multi-indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NCMatrix {
    dim: usize,
    legs: usize,
    entries: Vec<NCPoly>,
}

impl NCMatrix {
    pub fn zeros(dim: usize, legs: usize) -> Self {
        let size = dim.pow(legs as u32);
        NCMatrix { dim, legs, entries: vec![NCPoly::zero(); size * size] }
    }

    pub fn from_entries(dim: usize, legs: usize, entries: Vec<NCPoly>) -> Result<Self> {
        let size = dim.pow(legs as u32);
        if entries.len() != size * size {
            return Err(Error::Dimension(format!("expected {} entries, got {}", size * size, entries.len())));
        }
        Ok(NCMatrix { dim, legs, entries })
    }

    /// Degree-0 embedding of a scalar operator.
    pub fn from_scalar(op: &TensorOp) -> Self {
        NCMatrix {
            dim: op.dim(),
            legs: op.legs(),
            entries: op.entries().iter().map(|c| NCPoly::constant(c.clone())).collect(),
        }
    }

    /// A 0-leg matrix holding one polynomial.
    pub fn from_poly(dim: usize, p: NCPoly) -> Self {
        NCMatrix { dim, legs: 0, entries: vec![p] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn size(&self) -> usize {
        self.dim.pow(self.legs as u32)
    }

    pub fn entries(&self) -> &[NCPoly] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<NCPoly> {
        self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &NCPoly {
        &self.entries[row * self.size() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, p: NCPoly) {
        let size = self.size();
        self.entries[row * size + col] = p;
    }

    pub fn entry(&self, row: &[usize], col: &[usize]) -> &NCPoly {
        self.get(encode(row, self.dim), encode(col, self.dim))
    }

    /// The polynomial of a 0-leg matrix.
    pub fn as_poly(&self) -> Option<&NCPoly> {
        (self.legs == 0).then(|| &self.entries[0])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NCPoly::is_zero)
    }

    /// `Some(d)` when every nonzero entry is homogeneous of degree `d`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.entries.iter().filter(|p| !p.is_zero()).map(NCPoly::homogeneous_degree);
        let d = degs.next()??;
        degs.all(|x| x == Some(d)).then_some(d)
    }

    fn check_shape(&self, dim: usize, legs: usize) -> Result<()> {
        if self.dim != dim || self.legs != legs {
            return Err(Error::Dimension(format!(
                "shape mismatch: (n={}, legs={}) vs (n={dim}, legs={legs})",
                self.dim, self.legs
            )));
        }
        Ok(())
    }

    fn nonzero_rows(&self) -> Vec<Vec<usize>> {
        let size = self.size();
        (0..size).map(|r| (0..size).filter(|&c| !self.get(r, c).is_zero()).collect()).collect()
    }

    /// Matrix product with noncommutative entry multiplication, `self · other`.
    pub fn mul(&self, other: &NCMatrix) -> Result<NCMatrix> {
        other.check_shape(self.dim, self.legs)?;
        let size = self.size();
        let rows_b = other.nonzero_rows();
        let one = ExactScalar::one();
        let mut out = NCMatrix::zeros(self.dim, self.legs);
        for i in 0..size {
            for k in 0..size {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &j in &rows_b[k] {
                    out.entries[i * size + j].add_product(a, other.get(k, j), &one);
                }
            }
        }
        Ok(out)
    }

    /// `op · self` for a scalar operator.
    pub fn lmul(&self, op: &TensorOp) -> Result<NCMatrix> {
        self.check_shape(op.dim(), op.legs())?;
        let size = self.size();
        let mut out = NCMatrix::zeros(self.dim, self.legs);
        for i in 0..size {
            for (k, t) in op.row_nonzeros(i) {
                for j in 0..size {
                    let x = self.get(k, j);
                    if !x.is_zero() {
                        out.entries[i * size + j].add_scaled(x, t);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self · op` for a scalar operator.
    pub fn rmul(&self, op: &TensorOp) -> Result<NCMatrix> {
        self.check_shape(op.dim(), op.legs())?;
        let size = self.size();
        let mut out = NCMatrix::zeros(self.dim, self.legs);
        for i in 0..size {
            for k in 0..size {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for (j, t) in op.row_nonzeros(k) {
                    out.entries[i * size + j].add_scaled(x, t);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &NCMatrix) -> Result<NCMatrix> {
        other.check_shape(self.dim, self.legs)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        Ok(NCMatrix { dim: self.dim, legs: self.legs, entries })
    }

    pub fn sub(&self, other: &NCMatrix) -> Result<NCMatrix> {
        other.check_shape(self.dim, self.legs)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect();
        Ok(NCMatrix { dim: self.dim, legs: self.legs, entries })
    }

    pub fn scale(&self, c: &ExactScalar) -> NCMatrix {
        NCMatrix { dim: self.dim, legs: self.legs, entries: self.entries.iter().map(|p| p.scale(c)).collect() }
    }

    /// Entrywise right multiplication `X^a_b · p`.
    pub fn mul_poly_right(&self, p: &NCPoly) -> NCMatrix {
        NCMatrix { dim: self.dim, legs: self.legs, entries: self.entries.iter().map(|x| x.mul(p)).collect() }
    }

    /// Entrywise left multiplication `p · X^a_b`.
    pub fn mul_poly_left(&self, p: &NCPoly) -> NCMatrix {
        NCMatrix { dim: self.dim, legs: self.legs, entries: self.entries.iter().map(|x| p.mul(x)).collect() }
    }

    /// Places `self` on consecutive legs starting at `at` of a `total`-leg space.
    pub fn embed(&self, at: usize, total: usize) -> Result<NCMatrix> {
        if at == 0 || at + self.legs > total + 1 {
            return Err(Error::Dimension(format!("cannot place {} legs at leg {at} of {total}", self.legs)));
        }
        let n = self.dim;
        let before = at - 1;
        let after = total - before - self.legs;
        let (sb, sa, inner) = (n.pow(before as u32), n.pow(after as u32), self.size());
        let size = n.pow(total as u32);
        let mut out = NCMatrix::zeros(n, total);
        for b in 0..sb {
            for r in 0..inner {
                for c in 0..inner {
                    let x = self.get(r, c);
                    if x.is_zero() {
                        continue;
                    }
                    for a in 0..sa {
                        let row = (b * inner + r) * sa + a;
                        let col = (b * inner + c) * sa + a;
                        out.entries[row * size + col] = x.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn partial_trace(&self, traced: &[usize]) -> Result<NCMatrix> {
        let plan = TracePlan::new(self.dim, self.legs, traced)?;
        let mut out = NCMatrix::zeros(self.dim, plan.kept.len());
        let out_size = out.size();
        let one = ExactScalar::one();
        for (r_out, c_out, pairs) in plan.iter() {
            let mut acc = NCPoly::zero();
            for (r, c) in pairs {
                acc.add_scaled(self.get(r, c), &one);
            }
            out.entries[r_out * out_size + c_out] = acc;
        }
        Ok(out)
    }

    /// `tr_{(S)}(∏_{i∈S} D_i · X)`.
    pub fn f_trace(&self, d: &TensorOp, legs: &[usize]) -> Result<NCMatrix> {
        self.lmul(&d_on_legs(d, legs, self.legs)?)?.partial_trace(legs)
    }

    /// Applies a scalar substitution of the generators to every entry.
    pub fn evaluate(&self, value: impl Fn(u32) -> ExactScalar) -> TensorOp {
        let entries = self.entries.iter().map(|p| p.evaluate(&value)).collect();
        TensorOp::from_entries(self.dim, self.legs, entries).expect("same shape")
    }

    /// Row/column multi-index pairs with their entries, for diagnostics.
    pub fn indexed_entries(&self) -> impl Iterator<Item = (Vec<usize>, Vec<usize>, &NCPoly)> {
        let size = self.size();
        self.entries
            .iter()
            .enumerate()
            .map(move |(i, p)| (decode(i / size, self.dim, self.legs), decode(i % size, self.dim, self.legs), p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen_matrix(n: usize, first: u32) -> NCMatrix {
        let entries = (0..n * n).map(|i| NCPoly::generator(first + i as u32)).collect();
        NCMatrix::from_entries(n, 1, entries).unwrap()
    }

    #[test]
    fn product_orders_generators() {
        let m = gen_matrix(2, 0);
        let sq = m.mul(&m).unwrap();
        // (M^2)^0_0 = M00 M00 + M01 M10
        let expected = NCPoly::from_terms([(vec![0, 0], ExactScalar::one()), (vec![1, 2], ExactScalar::one())]);
        assert_eq!(sq.get(0, 0), &expected);
        assert_eq!(sq.homogeneous_degree(), Some(2));
    }

    #[test]
    fn embed_then_trace_recovers_matrix() {
        let m = gen_matrix(2, 0);
        let on2 = m.embed(2, 3).unwrap();
        let back = on2.partial_trace(&[1, 3]).unwrap();
        assert_eq!(back, m.scale(&ExactScalar::from(4)));
        let id = NCMatrix::from_scalar(&TensorOp::identity(2, 1));
        assert_eq!(id.mul(&m).unwrap(), m);
        assert_eq!(m.lmul(&TensorOp::identity(2, 1)).unwrap(), m);
        assert_eq!(m.rmul(&TensorOp::identity(2, 1)).unwrap(), m);
    }

    #[test]
    fn scalar_multiplication_matches_degree_zero_product() {
        let m = gen_matrix(2, 0).embed(1, 2).unwrap();
        let p = TensorOp::permutation_p(2);
        let via_scalar = m.lmul(&p).unwrap().rmul(&p).unwrap();
        let pp = NCMatrix::from_scalar(&p);
        assert_eq!(via_scalar, pp.mul(&m).unwrap().mul(&pp).unwrap());
        assert_eq!(via_scalar, gen_matrix(2, 0).embed(2, 2).unwrap());
    }
}
