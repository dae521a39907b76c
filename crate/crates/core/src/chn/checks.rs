//! Cayley–Hamilton–Newton identities, Newton relations and the proof-step
//! identity, certified by graded ideal membership.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ncalg::{Ideal, NCMatrix, NCPoly};
use crate::report::{ReportBuilder, VerificationReport};
use crate::scalars::ExactScalar;

use super::powers::{ChnEngine, PowerKind, SymKind};

/// The four matrix identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChnVariant {
    /// `j_q M^{∧j} = Σ (−1)^{j−k+1} M^{←(j−k)} σ_k`
    WedgeLeft,
    /// `j_q M^{Sj} = Σ M^{→(j−k)} τ_k`
    SymRight,
    /// `j_q M̃^{∧j} = Σ (−1)^{j−k+1} M̃^{←(j−k)} σ_k`
    TildeWedgeLeft,
    /// `j_q M̃^{Sj} = Σ M̃^{→(j−k)} τ_k`
    TildeSymRight,
}

impl ChnVariant {
    pub const ALL: [ChnVariant; 4] =
        [ChnVariant::WedgeLeft, ChnVariant::SymRight, ChnVariant::TildeWedgeLeft, ChnVariant::TildeSymRight];

    /// (power on the left side, power in the sum, coefficient family, alternating sign)
    fn parts(self) -> (PowerKind, PowerKind, SymKind, bool) {
        match self {
            ChnVariant::WedgeLeft => (PowerKind::Wedge, PowerKind::Left, SymKind::Sigma, true),
            ChnVariant::SymRight => (PowerKind::Sym, PowerKind::Right, SymKind::Tau, false),
            ChnVariant::TildeWedgeLeft => (PowerKind::TildeWedge, PowerKind::TildeLeft, SymKind::Sigma, true),
            ChnVariant::TildeSymRight => (PowerKind::TildeSym, PowerKind::TildeRight, SymKind::Tau, false),
        }
    }
}

impl fmt::Display for ChnVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChnVariant::WedgeLeft => "wedge-left",
            ChnVariant::SymRight => "sym-right",
            ChnVariant::TildeWedgeLeft => "tilde-wedge-left",
            ChnVariant::TildeSymRight => "tilde-sym-right",
        })
    }
}

impl FromStr for ChnVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ChnVariant::ALL
            .into_iter()
            .find(|v| v.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown CHN variant {s:?}")))
    }
}

/// The two scalar Newton relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NewtonVariant {
    /// `q^{-j} j_q σ_j = Σ (−1)^{j−k+1} s̄_{j−k} σ_k`
    Antisym,
    /// `q^j j_q τ_j = Σ s_{j−k} τ_k`
    Sym,
}

impl NewtonVariant {
    pub const ALL: [NewtonVariant; 2] = [NewtonVariant::Antisym, NewtonVariant::Sym];
}

impl fmt::Display for NewtonVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NewtonVariant::Antisym => "antisym",
            NewtonVariant::Sym => "sym",
        })
    }
}

fn sign(j: usize, k: usize, alternating: bool) -> ExactScalar {
    if alternating && (j - k + 1) % 2 == 1 {
        -ExactScalar::one()
    } else {
        ExactScalar::one()
    }
}

/// `LHS − RHS` of a CHN identity at degree `j`, entrywise.
pub fn chn_residual(engine: &ChnEngine, j: usize, variant: ChnVariant) -> Result<NCMatrix> {
    let q = engine.hq().pair().q();
    q.require_admissible(j)?;
    let (lhs_kind, sum_kind, coeff, alternating) = variant.parts();
    let mut res = engine.power(lhs_kind, j)?.scale(&q.q_number(j));
    for k in 0..j {
        let term = engine.power(sum_kind, j - k)?.mul_poly_right(&engine.sym(coeff, k)?);
        res = res.sub(&term.scale(&sign(j, k, alternating)))?;
    }
    Ok(res)
}

/// `LHS − RHS` of a Newton relation at degree `j`.
pub fn newton_residual(engine: &ChnEngine, j: usize, variant: NewtonVariant) -> Result<NCPoly> {
    let q = engine.hq().pair().q();
    q.require_admissible(j)?;
    let ji = j as i32;
    let (lhs, trace_kind, coeff, alternating) = match variant {
        NewtonVariant::Antisym => {
            (engine.sym(SymKind::Sigma, j)?.scale(&(q.pow(-ji) * q.q_number(j))), SymKind::SBar, SymKind::Sigma, true)
        }
        NewtonVariant::Sym => {
            (engine.sym(SymKind::Tau, j)?.scale(&(q.pow(ji) * q.q_number(j))), SymKind::S, SymKind::Tau, false)
        }
    };
    let mut res = lhs;
    for k in 0..j {
        let term = engine.sym(trace_kind, j - k)?.mul(&engine.sym(coeff, k)?);
        res.add_scaled(&term, &-sign(j, k, alternating));
    }
    Ok(res)
}

fn chn_report(check: &str, engine: &ChnEngine, j: usize) -> ReportBuilder {
    let pair = engine.hq().pair();
    ReportBuilder::for_pair(check, pair).param("f", pair.f_choice().to_string()).param("j", j)
}

/// Counts entries of `residual` outside `ideal`.
pub fn count_outside(ideal: &Ideal, residual: &NCMatrix) -> Result<usize> {
    ideal.count_nonmembers(residual.entries())
}

/// A CHN identity modulo the hq ideal.
pub fn chn_check(engine: &ChnEngine, j: usize, variant: ChnVariant) -> Result<VerificationReport> {
    chn_check_in(engine, &*engine.hq().ideal()?, j, variant)
}

/// A CHN identity modulo an arbitrary ideal.
pub fn chn_check_in(engine: &ChnEngine, ideal: &Ideal, j: usize, variant: ChnVariant) -> Result<VerificationReport> {
    let report = chn_report("chn", engine, j).param("variant", variant.to_string());
    let residual = chn_residual(engine, j, variant)?;
    Ok(report.finish(count_outside(ideal, &residual)?, None))
}

/// A Newton relation modulo the hq ideal.
pub fn newton_check(engine: &ChnEngine, j: usize, variant: NewtonVariant) -> Result<VerificationReport> {
    let report = chn_report("newton", engine, j).param("variant", variant.to_string());
    let residual = newton_residual(engine, j, variant)?;
    let failed = usize::from(!engine.hq().ideal()?.membership(&residual)?.member);
    Ok(report.finish(failed, None))
}

/// The CHN variant whose F-trace is the given Newton relation.
pub fn traced_variant(variant: NewtonVariant) -> ChnVariant {
    match variant {
        NewtonVariant::Antisym => ChnVariant::WedgeLeft,
        NewtonVariant::Sym => ChnVariant::SymRight,
    }
}

/// `tr_F` of the matrix residual equals the scalar residual, as free polynomials.
pub fn trace_linkage_check(engine: &ChnEngine, j: usize, variant: NewtonVariant) -> Result<VerificationReport> {
    let report = chn_report("trace-linkage", engine, j).param("variant", variant.to_string());
    let traced = engine.trace(&chn_residual(engine, j, traced_variant(variant))?)?;
    let diff = traced.sub(&newton_residual(engine, j, variant)?);
    Ok(report.finish(usize::from(!diff.is_zero()), None))
}

/// Both sides of the proof-step identity for `1 ≤ k < j`:
/// `(M^{←(j−k)} σ_k)_1` and
/// `(k+1)_q tr_F(2..j)(A^{(k+1)↑j−k−1} R̂_{j−k←1} M_{1̄→j̄}) + k_q tr_F(2..j)(A^{(k)↑j−k} R̂_{j−k+1←1} M_{1̄→j̄})`.
pub fn proof_step_sides(engine: &ChnEngine, j: usize, k: usize) -> Result<(NCMatrix, NCMatrix)> {
    if k == 0 || k >= j {
        return Err(Error::InvalidParameter(format!("proof step needs 1 ≤ k < j, got k={k}, j={j}")));
    }
    let hq = engine.hq();
    let pair = hq.pair();
    let q = pair.q();
    q.require_admissible(j)?;
    let lhs = engine.power(PowerKind::Left, j - k)?.mul_poly_right(&engine.sym(SymKind::Sigma, k)?);
    let m = hq.product(1, j, j)?;
    let traced: Vec<usize> = (2..=j).collect();
    let op1 = pair.antisymmetrizer(k + 1)?.shift_up(j - k - 1).compose(&pair.r_descending(j - k, 1, j)?)?;
    let op2 = pair.antisymmetrizer(k)?.shift_up(j - k).compose(&pair.r_descending(j - k + 1, 1, j)?)?;
    let t1 = hq.f_trace(&m.lmul(&op1)?, &traced)?.scale(&q.q_number(k + 1));
    let t2 = hq.f_trace(&m.lmul(&op2)?, &traced)?.scale(&q.q_number(k));
    Ok((lhs, t1.add(&t2)?))
}

/// The proof-step identity modulo the hq ideal.
pub fn proof_step_check(engine: &ChnEngine, j: usize, k: usize) -> Result<VerificationReport> {
    proof_step_check_in(engine, &*engine.hq().ideal()?, j, k)
}

pub fn proof_step_check_in(engine: &ChnEngine, ideal: &Ideal, j: usize, k: usize) -> Result<VerificationReport> {
    let report = chn_report("proof-step", engine, j).param("k", k);
    let (lhs, rhs) = proof_step_sides(engine, j, k)?;
    Ok(report.finish(count_outside(ideal, &lhs.sub(&rhs)?)?, None))
}

/// `M^{→k} = M^{←k}` and `M̃^{→k} = M̃^{←k}` modulo the full quantum-matrix
/// relations (`use_full = true`) or only the hq relations.
pub fn check_full_qm_powers(engine: &ChnEngine, k: usize, use_full: bool) -> Result<VerificationReport> {
    let hq = engine.hq();
    let ideal = if use_full { hq.full_qm_ideal()? } else { hq.ideal()? };
    let report = chn_report("full-qm-powers", engine, k).param("ideal", if use_full { "full" } else { "hq" });
    let plain = engine.power(PowerKind::Right, k)?.sub(&*engine.power(PowerKind::Left, k)?)?;
    let tilde = engine.power(PowerKind::TildeRight, k)?.sub(&*engine.power(PowerKind::TildeLeft, k)?)?;
    let failed = count_outside(&ideal, &plain)? + count_outside(&ideal, &tilde)?;
    Ok(report.finish(failed, None))
}
