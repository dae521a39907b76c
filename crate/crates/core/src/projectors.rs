//! Towers of q-antisymmetrizers `A^{(k)}` and q-symmetrizers `S^{(k)}`.

use crate::error::{Error, Result};
use crate::scalars::{DeformationParam, ExactScalar};
use crate::tensor::TensorOp;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectorKind {
    Antisymmetrizer,
    Symmetrizer,
}

/// One unnormalized recursion step producing `(k+1)_q X^{(k+1)}` from `X^{(k)}`.
///
/// The right form sandwiches `q^{±k} Id ∓ k_q R̂_k` between `X^{(k)}` on legs `1..k`;
/// the left form uses `R̂_1` between `X^{(k)↑1}`.
pub fn recursion_step(
    r: &TensorOp,
    q: &DeformationParam,
    prev: &TensorOp,
    k: usize,
    kind: ProjectorKind,
    left: bool,
) -> Result<TensorOp> {
    let width = k + 1;
    let n = r.dim();
    let kq = q.q_number(k);
    let (diag, coeff) = match kind {
        ProjectorKind::Antisymmetrizer => (q.pow(k as i32), -kq),
        ProjectorKind::Symmetrizer => (q.pow(-(k as i32)), kq),
    };
    let (outer, r_pos) = if left { (prev.shift_up(1), r.embed(1, width)?) } else { (prev.embed(1, width)?, r.embed(k, width)?) };
    let middle = TensorOp::identity(n, width).scale(&diag).add(&r_pos.scale(&coeff))?;
    outer.compose(&middle)?.compose(&outer)
}

/// Incrementally built, cached list `X^{(1)}, X^{(2)}, ...`.
#[derive(Clone, Debug)]
pub struct ProjectorTower {
    kind: ProjectorKind,
    ops: Vec<TensorOp>,
}

impl ProjectorTower {
    pub fn new(kind: ProjectorKind, n: usize) -> Self {
        ProjectorTower { kind, ops: vec![TensorOp::identity(n, 1)] }
    }

    pub fn kind(&self) -> ProjectorKind {
        self.kind
    }

    /// Number of levels built so far.
    pub fn built(&self) -> usize {
        self.ops.len()
    }

    /// Returns `X^{(k)}`, extending the tower as needed. Both recursion forms are
    /// computed at every level and must agree; each new level is checked idempotent.
    pub fn get(&mut self, r: &TensorOp, q: &DeformationParam, k: usize) -> Result<TensorOp> {
        if k == 0 {
            return Err(Error::InvalidParameter("projector level must be at least 1".into()));
        }
        q.require_admissible(k)?;
        while self.ops.len() < k {
            let level = self.ops.len();
            let prev = &self.ops[level - 1];
            let right = recursion_step(r, q, prev, level, self.kind, false)?;
            let left = recursion_step(r, q, prev, level, self.kind, true)?;
            if left != right {
                return Err(Error::Consistency(format!(
                    "left and right recursions disagree at level {}",
                    level + 1
                )));
            }
            let norm = q.q_number(level + 1).recip().ok_or(Error::NotAdmissible(level + 1))?;
            let next = right.scale(&norm);
            if next.compose(&next)? != next {
                return Err(Error::Consistency(format!("level {} projector is not idempotent", level + 1)));
            }
            self.ops.push(next);
        }
        Ok(self.ops[k - 1].clone())
    }
}

/// `R̂_i X = X R̂_i = λ X` for `1 ≤ i < k`, with `λ = −q^{-1}` for the
/// antisymmetrizer and `λ = q` for the symmetrizer.
pub fn check_absorption(r: &TensorOp, q: &DeformationParam, x: &TensorOp, kind: ProjectorKind) -> Result<bool> {
    let k = x.legs();
    let lambda = match kind {
        ProjectorKind::Antisymmetrizer => -q.inv(),
        ProjectorKind::Symmetrizer => q.value().clone(),
    };
    let target = x.scale(&lambda);
    for i in 1..k {
        let ri = r.embed(i, k)?;
        if ri.compose(x)? != target || x.compose(&ri)? != target {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn antisymmetrizer(r: &TensorOp, q: &DeformationParam, k: usize) -> Result<TensorOp> {
    ProjectorTower::new(ProjectorKind::Antisymmetrizer, r.dim()).get(r, q, k)
}

pub fn symmetrizer(r: &TensorOp, q: &DeformationParam, k: usize) -> Result<TensorOp> {
    ProjectorTower::new(ProjectorKind::Symmetrizer, r.dim()).get(r, q, k)
}

/// Classical (anti)symmetrizer `(1/k!) Σ_σ (±1)^σ σ` on `k` legs, for `q = 1` cross-checks.
pub fn classical_projector(n: usize, k: usize, kind: ProjectorKind) -> TensorOp {
    let perms = permutations(k);
    let weight = ExactScalar::new(1, perms.len() as i64);
    let mut acc = TensorOp::zeros(n, k);
    for (perm, sign) in perms {
        let coeff = match kind {
            ProjectorKind::Symmetrizer => weight.clone(),
            ProjectorKind::Antisymmetrizer => &weight * &ExactScalar::from(sign),
        };
        let op = TensorOp::from_fn(n, k, |row, col| {
            if (0..k).all(|i| row[perm[i]] == col[i]) {
                coeff.clone()
            } else {
                ExactScalar::zero()
            }
        });
        acc = acc.add(&op).expect("same shape");
    }
    acc
}

fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    if k == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, sign) in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            // inserting the largest element at `pos` adds (len - pos) inversions
            let s = if (p.len() - pos) % 2 == 0 { sign } else { -sign };
            out.push((q, s));
        }
    }
    out
}
