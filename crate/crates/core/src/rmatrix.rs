//! Compatible pairs `(R̂, F)` of braid-form R-matrices and their certification.

use std::fmt;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::projectors::{self, ProjectorKind, ProjectorTower};
use crate::scalars::{DeformationParam, ExactScalar};
use crate::tensor::TensorOp;

fn require_legs(op: &TensorOp, legs: usize, what: &str) -> Result<()> {
    if op.legs() != legs {
        return Err(Error::Dimension(format!("{what} must act on {legs} legs, got {}", op.legs())));
    }
    Ok(())
}

/// `R_12 R_23 R_12 == R_23 R_12 R_23` on three legs.
pub fn check_braid(r: &TensorOp) -> Result<bool> {
    require_legs(r, 2, "R-matrix")?;
    let r12 = r.embed(1, 3)?;
    let r23 = r.embed(2, 3)?;
    let lhs = r12.compose(&r23)?.compose(&r12)?;
    let rhs = r23.compose(&r12)?.compose(&r23)?;
    Ok(lhs == rhs)
}

/// Both mixed relations `R_12 F_23 F_12 = F_23 F_12 R_23` and `F_12 F_23 R_12 = R_23 F_12 F_23`.
pub fn check_compatibility(r: &TensorOp, f: &TensorOp) -> Result<bool> {
    require_legs(r, 2, "R-matrix")?;
    require_legs(f, 2, "F-matrix")?;
    if r.dim() != f.dim() {
        return Err(Error::Dimension("R and F act on spaces of different dimension".into()));
    }
    let (r12, r23) = (r.embed(1, 3)?, r.embed(2, 3)?);
    let (f12, f23) = (f.embed(1, 3)?, f.embed(2, 3)?);
    let first = r12.compose(&f23)?.compose(&f12)? == f23.compose(&f12)?.compose(&r23)?;
    let second = f12.compose(&f23)?.compose(&r12)? == r23.compose(&f12)?.compose(&f23)?;
    Ok(first && second)
}

/// Two-leg projectors of a Hecke R-matrix, `R̂ = q S2 − q^{-1} A2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeSplit {
    pub s2: TensorOp,
    pub a2: TensorOp,
}

pub fn hecke_split(r: &TensorOp, q: &DeformationParam) -> Result<HeckeSplit> {
    require_legs(r, 2, "R-matrix")?;
    q.require_admissible(2)?;
    let id = TensorOp::identity(r.dim(), 2);
    let qv = q.value();
    let qi = q.inv();
    let hecke_rhs = r.scale(&(qv - &qi)).add(&id)?;
    if r.compose(r)? != hecke_rhs {
        return Err(Error::NotHecke("R^2 != (q - 1/q) R + Id".into()));
    }
    let norm = q.q_number(2).recip().expect("2 is q-admissible");
    let s2 = r.add(&id.scale(&qi))?.scale(&norm);
    let a2 = id.scale(qv).sub(r)?.scale(&norm);
    let split = HeckeSplit { s2, a2 };
    split.verify(r, q)?;
    Ok(split)
}

impl HeckeSplit {
    fn verify(&self, r: &TensorOp, q: &DeformationParam) -> Result<()> {
        let (s, a) = (&self.s2, &self.a2);
        let id = TensorOp::identity(r.dim(), 2);
        let zero = TensorOp::zeros(r.dim(), 2);
        let ok = s.add(a)? == id
            && s.compose(a)? == zero
            && a.compose(s)? == zero
            && s.compose(s)? == *s
            && a.compose(a)? == *a
            && s.scale(q.value()).sub(&a.scale(&q.inv()))? == *r;
        if ok {
            Ok(())
        } else {
            Err(Error::NotHecke("projector split failed verification".into()))
        }
    }
}

/// Solves `tr_2(Ψ_12 F_23) = P_13` for `Ψ`.
///
/// In components this reads `Σ_{b,m} Ψ^{ab}_{dm} F^{mc}_{bf} = δ^a_f δ^c_d`, i.e.
/// `X · G = T` with `X_{(ad),(bm)} = Ψ^{ab}_{dm}`, `G_{(bm),(cf)} = F^{mc}_{bf}`
/// and `T_{(ad),(cf)} = δ^a_f δ^c_d`.
pub fn skew_inverse(f: &TensorOp) -> Result<TensorOp> {
    require_legs(f, 2, "F-matrix")?;
    let n = f.dim();
    let n2 = n * n;
    let mut g = vec![ExactScalar::zero(); n2 * n2];
    for b in 0..n {
        for m in 0..n {
            for c in 0..n {
                for fi in 0..n {
                    g[(b * n + m) * n2 + c * n + fi] = f.entry(&[m, c], &[b, fi]).clone();
                }
            }
        }
    }
    let g_inv = crate::linalg::inverse(&g, n2).ok_or(Error::NotSkewInvertible)?;
    // X = T · G^{-1}; row (a,d) of T has its single 1 at column (c=d, f=a).
    let psi = TensorOp::from_fn(n, 2, |row, col| {
        let (a, bb) = (row[0], row[1]);
        let (d, m) = (col[0], col[1]);
        g_inv[(d * n + a) * n2 + bb * n + m].clone()
    });
    if skew_inverse_residual(&psi, f)?.is_zero() {
        Ok(psi)
    } else {
        Err(Error::Consistency("skew-inverse failed substitution check".into()))
    }
}

/// `tr_2(Ψ_12 F_23) − P_13`; zero exactly when `Ψ` is a skew-inverse of `F`.
pub fn skew_inverse_residual(psi: &TensorOp, f: &TensorOp) -> Result<TensorOp> {
    let lhs = psi.embed(1, 3)?.compose(&f.embed(2, 3)?)?.partial_trace(&[2])?;
    let p13 = TensorOp::permutation_p(f.dim());
    lhs.sub(&p13)
}

/// `D_1 = tr_2(Ψ_12)`.
pub fn d_matrix(psi: &TensorOp) -> Result<TensorOp> {
    require_legs(psi, 2, "skew-inverse")?;
    psi.partial_trace(&[2])
}

/// `⊗_{i ∈ legs} D_i` on a `total`-leg space.
pub fn d_on_legs(d: &TensorOp, legs: &[usize], total: usize) -> Result<TensorOp> {
    let mut acc = TensorOp::identity(d.dim(), total);
    for &l in legs {
        acc = acc.compose(&d.embed(l, total)?)?;
    }
    Ok(acc)
}

/// `tr_{(S)}(∏_{i∈S} D_i · X)`.
pub fn f_trace_with(d: &TensorOp, x: &TensorOp, legs: &[usize]) -> Result<TensorOp> {
    d_on_legs(d, legs, x.legs())?.compose(x)?.partial_trace(legs)
}

/// Outcome of the three F-trace identities; failures name the identity.
#[derive(Clone, Debug, Default)]
pub struct FTraceCheck {
    pub failures: Vec<String>,
}

impl FTraceCheck {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `tr_F(2)(F_1) = Id_1`, `F_1 D_1 D_2 = D_1 D_2 F_1`, and
/// `tr_F(2)(F^ε X_1 F^{-ε}) = Id_1 tr_F(X)` on the matrix-unit basis, `ε = ±1`.
pub fn check_ftrace_identities_with(f: &TensorOp, f_inv: &TensorOp, d: &TensorOp) -> Result<FTraceCheck> {
    let n = f.dim();
    let mut out = FTraceCheck::default();
    let id1 = TensorOp::identity(n, 1);
    if f_trace_with(d, f, &[2])? != id1 {
        out.failures.push("tr_F(2)(F_1) = Id_1".into());
    }
    let dd = d.kron(d)?;
    if f.compose(&dd)? != dd.compose(f)? {
        out.failures.push("F_1 D_1 D_2 = D_1 D_2 F_1".into());
    }
    for (label, left, right) in [("+1", f, f_inv), ("-1", f_inv, f)] {
        for a in 0..n {
            for b in 0..n {
                let mut x = TensorOp::zeros(n, 1);
                x.set(a, b, ExactScalar::one());
                let conj = left.compose(&x.embed(1, 2)?)?.compose(right)?;
                let lhs = f_trace_with(d, &conj, &[2])?;
                let rhs = id1.scale(f_trace_with(d, &x, &[1])?.as_scalar().expect("scalar"));
                if lhs != rhs {
                    out.failures.push(format!("tr_F(2)(F^eps X_1 F^-eps) = Id tr_F(X), eps={label}, X=e_{a}{b}"));
                }
            }
        }
    }
    Ok(out)
}

/// Multiparametric Drinfeld–Jimbo R-matrix.
///
/// `params` is an `n × n` table with `p_ii = 1` and `p_ij p_ji = 1`; `None` means all ones.
/// The result is self-certified (braid relation and Hecke split).
pub fn dj_rmatrix(n: usize, q: &DeformationParam, params: Option<&[Vec<ExactScalar>]>) -> Result<TensorOp> {
    if n == 0 {
        return Err(Error::InvalidParameter("dimension must be positive".into()));
    }
    let one = ExactScalar::one();
    let p = |i: usize, j: usize| params.map_or(one.clone(), |t| t[i][j].clone());
    if let Some(t) = params {
        if t.len() != n || t.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidParameter(format!("multiparameter table must be {n}x{n}")));
        }
        for i in 0..n {
            if !t[i][i].is_one() {
                return Err(Error::InvalidParameter(format!("p_{i}{i} must be 1")));
            }
            for j in 0..n {
                if t[i][j].is_zero() || !(&t[i][j] * &t[j][i]).is_one() {
                    return Err(Error::InvalidParameter(format!("p_{i}{j} p_{j}{i} must be 1")));
                }
            }
        }
    }
    let gap = q.value() - &q.inv();
    let mut r = TensorOp::zeros(n, 2);
    for i in 0..n {
        for j in 0..n {
            let col = i * n + j;
            if i == j {
                r.set(col, col, q.value().clone());
            } else {
                r.set(j * n + i, col, p(i, j));
                if i > j {
                    r.set(col, col, gap.clone());
                }
            }
        }
    }
    if !check_braid(&r)? {
        return Err(Error::Construction("Drinfeld-Jimbo matrix fails the braid relation".into()));
    }
    hecke_split(&r, q).map_err(|e| Error::Construction(format!("Drinfeld-Jimbo matrix: {e}")))?;
    Ok(r)
}

/// Which of the standing conditions have been verified for a pair.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certificates {
    pub braid_r: bool,
    pub braid_f: bool,
    pub compatible: bool,
    pub hecke: bool,
    pub skew_invertible: bool,
    pub ftrace_identities: bool,
    /// `Some(h)` once evenness of height `h = n` has been decided.
    pub height: Option<bool>,
}

impl Certificates {
    /// Conditions required by the Cayley–Hamilton–Newton identities.
    pub fn chn_ready(&self) -> bool {
        self.braid_r && self.braid_f && self.compatible && self.hecke && self.skew_invertible && self.ftrace_identities
    }
}

/// How the second R-matrix of a pair was chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FChoice {
    #[serde(rename = "P")]
    Flip,
    #[serde(rename = "R")]
    SameAsR,
    #[serde(rename = "file")]
    Custom,
}

impl fmt::Display for FChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FChoice::Flip => "P",
            FChoice::SameAsR => "R",
            FChoice::Custom => "file",
        })
    }
}

/// Operator data of a pair before (or without) certification: enough to build
/// twisted copies and F-traces. Requires only that `F` be invertible and
/// skew-invertible.
#[derive(Clone, Debug)]
pub struct PairData {
    n: usize,
    q: DeformationParam,
    r: TensorOp,
    f: TensorOp,
    f_inv: TensorOp,
    psi: TensorOp,
    d: TensorOp,
}

impl PairData {
    pub fn new(r: TensorOp, f: TensorOp, q: DeformationParam) -> Result<PairData> {
        require_legs(&r, 2, "R-matrix")?;
        require_legs(&f, 2, "F-matrix")?;
        if r.dim() != f.dim() {
            return Err(Error::Dimension("R and F act on spaces of different dimension".into()));
        }
        let f_inv = f.inverse().ok_or_else(|| Error::Construction("F is not invertible".into()))?;
        let psi = skew_inverse(&f)?;
        let d = d_matrix(&psi)?;
        Ok(PairData { n: r.dim(), q, r, f, f_inv, psi, d })
    }

    /// Replaces the D-matrix, for negative controls on the F-trace.
    pub fn with_d(mut self, d: TensorOp) -> Self {
        self.d = d;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &DeformationParam {
        &self.q
    }

    pub fn r(&self) -> &TensorOp {
        &self.r
    }

    pub fn f(&self) -> &TensorOp {
        &self.f
    }

    pub fn f_inv(&self) -> &TensorOp {
        &self.f_inv
    }

    pub fn psi(&self) -> &TensorOp {
        &self.psi
    }

    pub fn d(&self) -> &TensorOp {
        &self.d
    }

    /// `R̂_{i,i+1}` on `width` legs.
    pub fn r_at(&self, i: usize, width: usize) -> Result<TensorOp> {
        self.r.embed(i, width)
    }

    pub fn f_at(&self, i: usize, width: usize) -> Result<TensorOp> {
        self.f.embed(i, width)
    }

    pub fn f_inv_at(&self, i: usize, width: usize) -> Result<TensorOp> {
        self.f_inv.embed(i, width)
    }

    /// `R̂_{l→k} = R̂_l ⋯ R̂_{k−1}` (empty product = Id).
    pub fn r_ascending(&self, l: usize, k: usize, width: usize) -> Result<TensorOp> {
        let factors = (l..k).map(|i| self.r_at(i, width)).collect::<Result<Vec<_>>>()?;
        TensorOp::product(self.n, width, &factors)
    }

    /// `R̂_{k←l} = R̂_{k−1} ⋯ R̂_l` (empty product = Id).
    pub fn r_descending(&self, k: usize, l: usize, width: usize) -> Result<TensorOp> {
        let factors = (l..k).rev().map(|i| self.r_at(i, width)).collect::<Result<Vec<_>>>()?;
        TensorOp::product(self.n, width, &factors)
    }

    /// `F_{l→k} = F_l ⋯ F_{k−1}`.
    pub fn f_ascending(&self, l: usize, k: usize, width: usize) -> Result<TensorOp> {
        let factors = (l..k).map(|i| self.f_at(i, width)).collect::<Result<Vec<_>>>()?;
        TensorOp::product(self.n, width, &factors)
    }

    /// `tr_F` over `legs` of a scalar operator.
    pub fn f_trace(&self, x: &TensorOp, legs: &[usize]) -> Result<TensorOp> {
        f_trace_with(&self.d, x, legs)
    }

    pub fn check_ftrace_identities(&self) -> Result<FTraceCheck> {
        check_ftrace_identities_with(&self.f, &self.f_inv, &self.d)
    }
}

/// A certified compatible pair together with its derived data.
///
/// Construction runs every check of conditions (i), (ii) and (iv) and the
/// F-trace identities; a value of this type is therefore always usable by the
/// downstream identity checks. Evenness of height `n` is recorded but optional.
#[derive(Debug)]
pub struct RFPair {
    data: PairData,
    split: HeckeSplit,
    f_choice: FChoice,
    certificates: Certificates,
    anti: Mutex<ProjectorTower>,
    sym: Mutex<ProjectorTower>,
}

impl std::ops::Deref for RFPair {
    type Target = PairData;

    fn deref(&self) -> &PairData {
        &self.data
    }
}

impl RFPair {
    pub fn certify(r: TensorOp, f: TensorOp, q: DeformationParam, f_choice: FChoice) -> Result<RFPair> {
        require_legs(&r, 2, "R-matrix")?;
        require_legs(&f, 2, "F-matrix")?;
        if r.dim() != f.dim() {
            return Err(Error::Dimension("R and F act on spaces of different dimension".into()));
        }
        let fail = |what: &str| Error::Construction(format!("pair fails {what}"));
        let n = r.dim();
        let mut certs = Certificates::default();
        if r.inverse().is_none() {
            return Err(fail("invertibility of R"));
        }
        certs.braid_r = check_braid(&r)?;
        if !certs.braid_r {
            return Err(fail("the braid relation for R"));
        }
        certs.braid_f = check_braid(&f)?;
        if !certs.braid_f {
            return Err(fail("the braid relation for F"));
        }
        certs.compatible = check_compatibility(&r, &f)?;
        if !certs.compatible {
            return Err(fail("the compatibility relations"));
        }
        let split = hecke_split(&r, &q)?;
        certs.hecke = true;
        let data = PairData::new(r, f, q)?;
        certs.skew_invertible = true;
        let ftrace = data.check_ftrace_identities()?;
        if !ftrace.pass() {
            return Err(fail(&format!("F-trace identities: {}", ftrace.failures.join("; "))));
        }
        certs.ftrace_identities = true;
        let mut pair = RFPair {
            data,
            split,
            f_choice,
            certificates: certs,
            anti: Mutex::new(ProjectorTower::new(ProjectorKind::Antisymmetrizer, n)),
            sym: Mutex::new(ProjectorTower::new(ProjectorKind::Symmetrizer, n)),
        };
        let height = if pair.q().is_admissible(n) { check_height(&pair, n)? } else { false };
        pair.certificates.height = Some(height);
        Ok(pair)
    }

    /// Drinfeld–Jimbo `R̂` with all multiparameters 1, paired with `P` or with itself.
    pub fn standard(n: usize, q: ExactScalar, f_choice: FChoice) -> Result<RFPair> {
        Self::with_multiparams(n, q, None, f_choice)
    }

    pub fn with_multiparams(
        n: usize,
        q: ExactScalar,
        params: Option<&[Vec<ExactScalar>]>,
        f_choice: FChoice,
    ) -> Result<RFPair> {
        let q = DeformationParam::new(q)?;
        let r = dj_rmatrix(n, &q, params)?;
        let f = match f_choice {
            FChoice::Flip => TensorOp::permutation_p(n),
            FChoice::SameAsR => r.clone(),
            FChoice::Custom => {
                return Err(Error::InvalidParameter("a custom F needs RFPair::certify".into()));
            }
        };
        Self::certify(r, f, q, f_choice)
    }

    pub fn data(&self) -> &PairData {
        &self.data
    }

    pub fn split(&self) -> &HeckeSplit {
        &self.split
    }

    pub fn f_choice(&self) -> FChoice {
        self.f_choice
    }

    pub fn certificates(&self) -> &Certificates {
        &self.certificates
    }

    pub fn is_even_of_height_n(&self) -> bool {
        self.certificates.height == Some(true)
    }

    /// The q-antisymmetrizer `A^{(k)}` on `k` legs (cached).
    pub fn antisymmetrizer(&self, k: usize) -> Result<TensorOp> {
        self.anti.lock().expect("tower lock").get(self.r(), self.q(), k)
    }

    /// The q-symmetrizer `S^{(k)}` on `k` legs (cached).
    pub fn symmetrizer(&self, k: usize) -> Result<TensorOp> {
        self.sym.lock().expect("tower lock").get(self.r(), self.q(), k)
    }
}

/// Evenness of height `h`: `rank A^{(h)} = 1` and `A^{(h)}(q^h Id − h_q R̂_h) A^{(h)} = 0`.
pub fn check_height(pair: &RFPair, h: usize) -> Result<bool> {
    let q = pair.q();
    q.require_admissible(h)?;
    let a = pair.antisymmetrizer(h)?;
    if a.rank() != 1 {
        return Ok(false);
    }
    Ok(projectors::recursion_step(pair.r(), q, &a, h, ProjectorKind::Antisymmetrizer, false)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> DeformationParam {
        DeformationParam::new(s.parse().unwrap()).unwrap()
    }

    fn rat(s: &str) -> ExactScalar {
        s.parse().unwrap()
    }

    #[test]
    fn dj_two_dimensional_matrix() {
        let r = dj_rmatrix(2, &q("2"), None).unwrap();
        let expected = ["2", "0", "0", "0", "0", "0", "1", "0", "0", "1", "3/2", "0", "0", "0", "0", "2"];
        let expected: Vec<ExactScalar> = expected.iter().map(|s| rat(s)).collect();
        assert_eq!(r.entries(), expected.as_slice());
        assert_eq!(dj_rmatrix(2, &q("1"), None).unwrap(), TensorOp::permutation_p(2));
    }

    #[test]
    fn dj_multiparameters() {
        let params = vec![vec![rat("1"), rat("3")], vec![rat("1/3"), rat("1")]];
        let r = dj_rmatrix(2, &q("2"), Some(&params)).unwrap();
        assert!(check_braid(&r).unwrap());
        assert!(hecke_split(&r, &q("2")).is_ok());
        let bad = vec![vec![rat("1"), rat("3")], vec![rat("1/2"), rat("1")]];
        assert!(matches!(dj_rmatrix(2, &q("2"), Some(&bad)), Err(Error::InvalidParameter(_))));
        let bad_diag = vec![vec![rat("2"), rat("1")], vec![rat("1"), rat("1")]];
        assert!(matches!(dj_rmatrix(2, &q("2"), Some(&bad_diag)), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn braid_checks() {
        assert!(check_braid(&TensorOp::permutation_p(3)).unwrap());
        let mut r = dj_rmatrix(2, &q("2"), None).unwrap();
        assert!(check_braid(&r).unwrap());
        let bumped = r.get(0, 0) + &ExactScalar::one();
        r.set(0, 0, bumped);
        assert!(!check_braid(&r).unwrap());
        assert!(check_braid(&TensorOp::identity(2, 1)).is_err());
    }

    #[test]
    fn compatibility_checks() {
        let r = dj_rmatrix(2, &q("2"), None).unwrap();
        let p = TensorOp::permutation_p(2);
        assert!(check_compatibility(&r, &p).unwrap());
        assert!(check_compatibility(&r, &r).unwrap());
        // a diagonal twist of P stays compatible; a diagonal shift does not
        let mut twisted = p.clone();
        twisted.set(0, 0, rat("2"));
        assert!(check_compatibility(&r, &twisted).unwrap());
        let mut f = p.clone();
        f.set(1, 1, rat("1"));
        assert!(!check_compatibility(&r, &f).unwrap());
    }

    #[test]
    fn hecke_split_ranks() {
        let split = hecke_split(&dj_rmatrix(2, &q("2"), None).unwrap(), &q("2")).unwrap();
        assert_eq!((split.s2.rank(), split.a2.rank()), (3, 1));
        let classical = hecke_split(&TensorOp::permutation_p(2), &q("1")).unwrap();
        assert_eq!((classical.s2.rank(), classical.a2.rank()), (3, 1));
        assert_eq!(classical.a2.get(1, 2), &rat("-1/2"));
        let two_p = TensorOp::permutation_p(2).scale(&rat("2"));
        assert!(matches!(hecke_split(&two_p, &q("2")), Err(Error::NotHecke(_))));
    }

    #[test]
    fn skew_inverse_of_flip_is_flip() {
        let p = TensorOp::permutation_p(2);
        let psi = skew_inverse(&p).unwrap();
        assert_eq!(psi, p);
        assert_eq!(d_matrix(&psi).unwrap(), TensorOp::identity(2, 1));
        let mut singular = p.clone();
        for c in 0..4 {
            singular.set(1, c, ExactScalar::zero());
        }
        assert!(matches!(skew_inverse(&singular), Err(Error::NotSkewInvertible)));
        assert!(d_matrix(&TensorOp::zeros(2, 2)).unwrap().is_zero());
    }

    #[test]
    fn skew_inverse_of_dj() {
        let r = dj_rmatrix(2, &q("2"), None).unwrap();
        let psi = skew_inverse(&r).unwrap();
        assert!(skew_inverse_residual(&psi, &r).unwrap().is_zero());
        let d = d_matrix(&psi).unwrap();
        // D is diagonal
        assert!(d.get(0, 1).is_zero() && d.get(1, 0).is_zero());
        let r_inv = r.inverse().unwrap();
        assert!(check_ftrace_identities_with(&r, &r_inv, &d).unwrap().pass());
        let fake = check_ftrace_identities_with(&r, &r_inv, &TensorOp::identity(2, 1)).unwrap();
        assert!(!fake.pass());
    }

    #[test]
    fn heights() {
        let p2 = RFPair::standard(2, rat("2"), FChoice::Flip).unwrap();
        assert!(check_height(&p2, 2).unwrap());
        let p3 = RFPair::standard(3, rat("2"), FChoice::SameAsR).unwrap();
        assert!(check_height(&p3, 3).unwrap());
        assert_eq!(p3.antisymmetrizer(3).unwrap().rank(), 1);
        assert!(!check_height(&p3, 2).unwrap());
        assert!(p3.is_even_of_height_n());
    }

    #[test]
    fn f_trace_with_flip_is_plain_trace() {
        let pair = RFPair::standard(2, rat("2"), FChoice::Flip).unwrap();
        let x = TensorOp::from_fn(2, 2, |r, c| ExactScalar::from((r[0] * 7 + r[1] * 3 + c[0] * 5 + c[1] + 1) as i64));
        assert_eq!(pair.f_trace(&x, &[2]).unwrap(), x.partial_trace(&[2]).unwrap());
        assert_eq!(pair.f_trace(&x, &[1, 2]).unwrap(), x.partial_trace(&[1, 2]).unwrap());
    }
}
