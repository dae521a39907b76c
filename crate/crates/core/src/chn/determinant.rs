//! Rank-one factorization of the top antisymmetrizer, the quantum
//! determinant, the matrix `𝒟` and the Cayley–Hamilton theorem.

use crate::error::{Error, Result};
use crate::ncalg::{NCMatrix, NCPoly};
use crate::report::VerificationReport;
use crate::rmatrix::RFPair;
use crate::scalars::ExactScalar;
use crate::tensor::TensorOp;

use super::checks::count_outside;
use super::powers::{ChnEngine, PowerKind, SymKind};

/// `A^{(n)} = ε_up · ε_low` (column times row) with `ε_low · ε_up = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonPair {
    /// Covariant tensor `ε_{a₁…a_n}`, indexed by column multi-index.
    pub eps_low: Vec<ExactScalar>,
    /// Contravariant tensor `ε^{a₁…a_n}`, indexed by row multi-index.
    pub eps_up: Vec<ExactScalar>,
}

impl EpsilonPair {
    pub fn contraction(&self) -> ExactScalar {
        self.eps_low.iter().zip(&self.eps_up).map(|(a, b)| a * b).sum()
    }

    /// Outer product `ε_up ε_low` as an operator.
    pub fn outer(&self, dim: usize, legs: usize) -> TensorOp {
        let size = self.eps_up.len();
        let entries = (0..size * size).map(|i| &self.eps_up[i / size] * &self.eps_low[i % size]).collect();
        TensorOp::from_entries(dim, legs, entries).expect("square of matching size")
    }

    /// `(λ ε_low, λ^{-1} ε_up)`.
    pub fn rescaled(&self, lambda: &ExactScalar) -> Result<EpsilonPair> {
        let inv = lambda.recip().ok_or_else(|| Error::InvalidParameter("rescaling by zero".into()))?;
        Ok(EpsilonPair {
            eps_low: self.eps_low.iter().map(|x| x * lambda).collect(),
            eps_up: self.eps_up.iter().map(|x| x * &inv).collect(),
        })
    }
}

/// Factors a rank-one operator. The first nonzero entry in row-major order
/// fixes the gauge: its row gives `ε_low`, its column gives `ε_up`, and
/// `ε_up` is rescaled so that the contraction is 1.
pub fn epsilon_factor(a: &TensorOp) -> Result<EpsilonPair> {
    if a.rank() != 1 {
        return Err(Error::NotHeight(a.legs()));
    }
    let size = a.size();
    let pivot = a.entries().iter().position(|x| !x.is_zero()).expect("rank one");
    let (i0, j0) = (pivot / size, pivot % size);
    let eps_low: Vec<ExactScalar> = (0..size).map(|c| a.get(i0, c).clone()).collect();
    let eps_up: Vec<ExactScalar> = (0..size).map(|r| a.get(r, j0).clone()).collect();
    let raw = EpsilonPair { eps_low, eps_up };
    let contraction = raw.contraction();
    let inv = contraction.recip().ok_or(Error::DegenerateFactorization)?;
    let pair = EpsilonPair { eps_low: raw.eps_low, eps_up: raw.eps_up.iter().map(|x| x * &inv).collect() };
    if pair.outer(a.dim(), a.legs()) != *a {
        return Err(Error::Consistency("rank-one factorization does not reproduce the operator".into()));
    }
    Ok(pair)
}

fn require_height(pair: &RFPair) -> Result<()> {
    if !pair.is_even_of_height_n() {
        return Err(Error::NotHeight(pair.n()));
    }
    Ok(())
}

/// `ε_{a…} (M_{1̄→n̄})^{a…}_{b…} ε^{b…}`.
pub fn det_q_with(engine: &ChnEngine, eps: &EpsilonPair) -> Result<NCPoly> {
    let n = engine.n();
    let m = engine.hq().product(1, n, n)?;
    let size = m.size();
    let mut det = NCPoly::zero();
    for (a, la) in eps.eps_low.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (b, ub) in eps.eps_up.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            debug_assert!(a < size && b < size);
            det.add_scaled(m.get(a, b), &(la * ub));
        }
    }
    Ok(det)
}

/// Quantum determinant in the gauge fixed by [`epsilon_factor`].
pub fn det_q(engine: &ChnEngine) -> Result<NCPoly> {
    let pair = engine.hq().pair();
    require_height(pair)?;
    det_q_with(engine, &epsilon_factor(&pair.antisymmetrizer(pair.n())?)?)
}

/// `(M_{1̄→n̄})^{a…}_{b…} ε^{b…} − det_q ε^{a…}` for every row `a`.
pub fn det_eigen_residual(engine: &ChnEngine, eps: &EpsilonPair) -> Result<Vec<NCPoly>> {
    let n = engine.n();
    let m = engine.hq().product(1, n, n)?;
    let det = det_q_with(engine, eps)?;
    Ok((0..m.size())
        .map(|a| {
            let mut acc = det.scale(&-eps.eps_up[a].clone());
            for (b, ub) in eps.eps_up.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                acc.add_scaled(m.get(a, b), ub);
            }
            acc
        })
        .collect())
}

/// `𝒟_1 = tr_F(2..n)(A^{(n)})`.
pub fn d_script(pair: &RFPair) -> Result<TensorOp> {
    require_height(pair)?;
    let n = pair.n();
    let traced: Vec<usize> = (2..=n).collect();
    pair.f_trace(&pair.antisymmetrizer(n)?, &traced)
}

/// `M̃^{∧n} − det_q 𝒟`.
pub fn top_wedge_residual(engine: &ChnEngine) -> Result<NCMatrix> {
    let pair = engine.hq().pair();
    let d = NCMatrix::from_scalar(&d_script(pair)?).mul_poly_right(&det_q(engine)?);
    engine.power(PowerKind::TildeWedge, pair.n())?.sub(&d)
}

/// `Σ_{k<n} (−1)^{n−k} M̃^{←(n−k)} σ_k + n_q det_q 𝒟`.
pub fn cayley_hamilton_residual(engine: &ChnEngine) -> Result<NCMatrix> {
    let pair = engine.hq().pair();
    require_height(pair)?;
    let n = pair.n();
    let q = pair.q();
    q.require_admissible(n)?;
    let mut acc = NCMatrix::from_scalar(&d_script(pair)?).mul_poly_right(&det_q(engine)?.scale(&q.q_number(n)));
    for k in 0..n {
        let sign = if (n - k).is_multiple_of(2) { ExactScalar::one() } else { -ExactScalar::one() };
        let term = engine.power(PowerKind::TildeLeft, n - k)?.mul_poly_right(&engine.sym(SymKind::Sigma, k)?);
        acc = acc.add(&term.scale(&sign))?;
    }
    Ok(acc)
}

fn ch_report(check: &str, engine: &ChnEngine) -> crate::report::ReportBuilder {
    let pair = engine.hq().pair();
    crate::report::ReportBuilder::for_pair(check, pair).param("f", pair.f_choice().to_string())
}

/// The eigenvector relation for `ε^{…}` and `M̃^{∧n} = det_q 𝒟`, modulo the
/// degree-`n` ideal component.
pub fn determinant_check(engine: &ChnEngine) -> Result<VerificationReport> {
    let report = ch_report("determinant", engine);
    let pair = engine.hq().pair();
    if !pair.is_even_of_height_n() {
        return Ok(report.skip(format!("R is not even of height {}", pair.n())));
    }
    let ideal = engine.hq().ideal()?;
    let eps = epsilon_factor(&pair.antisymmetrizer(pair.n())?)?;
    let failed = ideal.count_nonmembers(&det_eigen_residual(engine, &eps)?)?
        + count_outside(&ideal, &top_wedge_residual(engine)?)?;
    Ok(report.finish(failed, None))
}

/// The Cayley–Hamilton theorem modulo the degree-`n` ideal component.
pub fn cayley_hamilton_check(engine: &ChnEngine) -> Result<VerificationReport> {
    let report = ch_report("cayley-hamilton", engine);
    let pair = engine.hq().pair();
    if !pair.is_even_of_height_n() {
        return Ok(report.skip(format!("R is not even of height {}", pair.n())));
    }
    let residual = cayley_hamilton_residual(engine)?;
    Ok(report.finish(count_outside(&*engine.hq().ideal()?, &residual)?, None))
}
