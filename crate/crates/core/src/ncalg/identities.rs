//! Identity suites for twisted copies and the half-quantum relations:
//! leg-shifting of `M̄_k`, the equivalent forms of the defining relations,
//! projector absorption, and closure of the braided product.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::report::{ReportBuilder, VerificationReport};
use crate::rmatrix::{PairData, RFPair};
use crate::scalars::ExactScalar;
use crate::tensor::TensorOp;

use super::hq::{independent, mbar, probe_constant, relations, GeneratorRegistry, GeneratorSet, HqMatrix};
use super::ideal::{Grading, Ideal, PolySpan, ScalarProbe};
use super::matrix::NCMatrix;
use super::poly::NCPoly;

/// Number of nonzero entries.
pub fn nonzero_entries(m: &NCMatrix) -> usize {
    m.entries().iter().filter(|p| !p.is_zero()).count()
}

struct Copies<'a> {
    pair: &'a PairData,
    m: &'a NCMatrix,
    cache: HashMap<(usize, usize), NCMatrix>,
}

impl<'a> Copies<'a> {
    fn new(pair: &'a PairData, m: &'a NCMatrix) -> Self {
        Copies { pair, m, cache: HashMap::new() }
    }

    fn mbar(&mut self, k: usize, width: usize) -> Result<NCMatrix> {
        if let Some(x) = self.cache.get(&(k, width)) {
            return Ok(x.clone());
        }
        let x = mbar(self.pair, self.m, k, width)?;
        self.cache.insert((k, width), x.clone());
        Ok(x)
    }

    fn product(&mut self, l: usize, k: usize, width: usize) -> Result<NCMatrix> {
        let mut acc = self.mbar(l, width)?;
        for i in l + 1..=k {
            acc = acc.mul(&self.mbar(i, width)?)?;
        }
        Ok(acc)
    }
}

/// All words of length at most `max_len` in the letters `1..letters`.
fn r_words(letters: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (1..letters).map(move |i| {
                    let mut w2 = w.clone();
                    w2.push(i);
                    w2
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn word_label(w: &[usize]) -> String {
    if w.is_empty() {
        "Id".into()
    } else {
        w.iter().map(|i| format!("R{i}")).collect::<Vec<_>>().join("·")
    }
}

/// Checks the leg-shifting identities for an arbitrary-entry matrix `m` as
/// exact equalities in the free algebra, for all working widths up to
/// `max_width`:
///
/// * `F_i M̄_k = M̄_k F_i` and `R̂_i M̄_k = M̄_k R̂_i` for `k ∉ {i, i+1}`;
/// * `F_{i→k+1} M_{ī→k̄} = M_{i+1‾→k+1‾} F_{i→k+1}` for `i ≤ k`;
/// * `tr_F(i+1..i+k)(Y^{↑i} M_{i+1‾→i+k‾}) = Id_{1..i} α(Y)` for `Y` running
///   over words of length ≤ 2 in `R̂_1..R̂_{k−1}`, `k ≤ 3`.
pub fn check_lemma1(pair: &PairData, m: &NCMatrix, max_width: usize) -> Result<VerificationReport> {
    let report = ReportBuilder::for_pair("lemma1", pair).param("max_width", max_width);
    let mut copies = Copies::new(pair, m);
    let mut failed = 0;
    let mut first_failure: Option<String> = None;
    let mut record = |count: usize, what: String| {
        if count > 0 {
            failed += count;
            first_failure.get_or_insert(what);
        }
    };

    for width in 2..=max_width {
        for i in 1..width {
            let f_i = pair.f_at(i, width)?;
            let r_i = pair.r_at(i, width)?;
            for k in (1..=width).filter(|&k| k != i && k != i + 1) {
                let mk = copies.mbar(k, width)?;
                let df = mk.lmul(&f_i)?.sub(&mk.rmul(&f_i)?)?;
                record(nonzero_entries(&df), format!("F_{i} M̄_{k} = M̄_{k} F_{i} (width {width})"));
                let dr = mk.lmul(&r_i)?.sub(&mk.rmul(&r_i)?)?;
                record(nonzero_entries(&dr), format!("R_{i} M̄_{k} = M̄_{k} R_{i} (width {width})"));
            }
        }
        for k in 1..width {
            for i in 1..=k {
                let f = pair.f_ascending(i, k + 1, width)?;
                let lhs = copies.product(i, k, width)?.lmul(&f)?;
                let rhs = copies.product(i + 1, k + 1, width)?.rmul(&f)?;
                record(
                    nonzero_entries(&lhs.sub(&rhs)?),
                    format!("F_{{{i}→{}}} M_{{{i}→{k}}} = M_{{{}→{}}} F_{{{i}→{}}} (width {width})", k + 1, i + 1, k + 1, k + 1),
                );
            }
        }
    }

    let n = pair.n();
    for k in 1..=max_width.min(3) {
        for y in r_words(k, 2) {
            let y_op = TensorOp::product(n, k, &y.iter().map(|&i| pair.r_at(i, k)).collect::<Result<Vec<_>>>()?)?;
            let traced: Vec<usize> = (1..=k).collect();
            let alpha_m = copies.product(1, k, k)?.lmul(&y_op)?.f_trace(pair.d(), &traced)?;
            let alpha = alpha_m.as_poly().expect("full trace").clone();
            for i in 1..=max_width - k {
                let width = i + k;
                let shifted = y_op.shift_up(i);
                let traced: Vec<usize> = (i + 1..=width).collect();
                let lhs = copies.product(i + 1, width, width)?.lmul(&shifted)?.f_trace(pair.d(), &traced)?;
                let rhs = NCMatrix::from_scalar(&TensorOp::identity(n, i)).mul_poly_right(&alpha);
                record(
                    nonzero_entries(&lhs.sub(&rhs)?),
                    format!("trace shift for Y = {} (k = {k}, i = {i})", word_label(&y)),
                );
            }
        }
    }

    Ok(report.finish(failed, first_failure.map(|w| format!("first failure: {w}"))))
}

/// The four rewritten forms of the defining relations, as lists of entries
/// (each should vanish):
/// `R̂ M̄₁M̄₂A + q^{-1} M̄₁M̄₂A`, `S M̄₁M̄₂R̂ − q S M̄₁M̄₂`,
/// `A M̄₁M̄₂A − M̄₁M̄₂A`, `S M̄₁M̄₂S − S M̄₁M̄₂`.
pub fn equivalent_forms(pair: &RFPair, m: &NCMatrix) -> Result<[Vec<NCPoly>; 4]> {
    let q = pair.q();
    q.require_admissible(2)?;
    let (s, a, r) = (&pair.split().s2, &pair.split().a2, pair.r());
    let p = super::hq::mbar_product(pair, m, 1, 2, 2)?;
    let pa = p.rmul(a)?;
    let sp = p.lmul(s)?;
    let forms = [
        pa.lmul(r)?.add(&pa.scale(&q.inv()))?,
        sp.rmul(r)?.sub(&sp.scale(q.value()))?,
        pa.lmul(a)?.sub(&pa)?,
        sp.rmul(s)?.sub(&sp)?,
    ];
    Ok(forms.map(|f| f.into_entries()))
}

/// Each of the four equivalent forms spans exactly the same degree-2 space
/// as the defining relations.
pub fn check_equivalent_forms(hq: &HqMatrix) -> Result<VerificationReport> {
    let report = base_report("equivalent-forms", hq);
    let base = PolySpan::from_polys(&hq.relations()?);
    let forms = equivalent_forms(hq.pair(), hq.matrix())?;
    let mut bad = Vec::new();
    for (idx, f) in forms.iter().enumerate() {
        if !PolySpan::from_polys(f).same_span(&base) {
            bad.push(idx + 1);
        }
    }
    let detail = (!bad.is_empty()).then(|| format!("forms with a different span: {bad:?}"));
    Ok(report.finish(bad.len(), detail))
}

fn base_report(check: &str, hq: &HqMatrix) -> ReportBuilder {
    ReportBuilder::for_pair(check, hq.pair()).param("f", hq.pair().f_choice().to_string())
}

/// Projector absorption for `k` copies shifted by `i`, modulo the hq ideal:
/// the relations on every adjacent pair of legs `j, j+1` of the working
/// width `i+k`, `A^{(k)↑i} M A^{(k)↑i} = M A^{(k)↑i}` and
/// `S^{(k)↑i} M S^{(k)↑i} = S^{(k)↑i} M` with `M = M_{i+1‾→i+k‾}`.
pub fn check_projector_relations(hq: &HqMatrix, k: usize, i: usize) -> Result<VerificationReport> {
    check_projector_relations_in(hq, &*hq.ideal()?, k, i)
}

/// As [`check_projector_relations`] against an arbitrary ideal.
pub fn check_projector_relations_in(hq: &HqMatrix, ideal: &Ideal, k: usize, i: usize) -> Result<VerificationReport> {
    if k == 0 {
        return Err(Error::InvalidParameter("projector relations need k ≥ 1".into()));
    }
    let pair = hq.pair();
    pair.q().require_admissible(k)?;
    let report = base_report("projector-relations", hq).param("k", k).param("i", i);
    let width = (i + k).max(2);
    let mut failed = 0;
    let mut notes = Vec::new();

    for j in 1..width {
        let s = pair.split().s2.embed(j, width)?;
        let a = pair.split().a2.embed(j, width)?;
        let rel = hq.product(j, j + 1, width)?.lmul(&s)?.rmul(&a)?;
        let c = ideal.count_nonmembers(rel.entries())?;
        if c > 0 {
            notes.push(format!("adjacent relations on legs {j},{}: {c}", j + 1));
        }
        failed += c;
    }

    let m = hq.product(i + 1, i + k, i + k)?;
    let a = pair.antisymmetrizer(k)?.shift_up(i);
    let s = pair.symmetrizer(k)?.shift_up(i);
    let ma = m.rmul(&a)?;
    let c = ideal.count_nonmembers(ma.lmul(&a)?.sub(&ma)?.entries())?;
    if c > 0 {
        notes.push(format!("antisymmetrizer absorption: {c}"));
    }
    failed += c;
    let sm = m.lmul(&s)?;
    let c = ideal.count_nonmembers(sm.rmul(&s)?.sub(&sm)?.entries())?;
    if c > 0 {
        notes.push(format!("symmetrizer absorption: {c}"));
    }
    failed += c;

    Ok(report.finish(failed, (!notes.is_empty()).then(|| notes.join("; "))))
}

/// Generators and ideal for the product `MM'` of two hq-matrices.
#[derive(Debug)]
pub struct BraidedProduct {
    pub registry: GeneratorRegistry,
    pub first: GeneratorSet,
    pub second: GeneratorSet,
    /// Defining relations of `M`, of `M'`, and the cross-relations.
    pub relations: Vec<NCPoly>,
    pub cross: Vec<NCPoly>,
    /// `M · M'`.
    pub product: NCMatrix,
}

/// Entries of `F₁₂M₁F₁₂^{-1}M'₁ − M'₁F₁₂M₁F₁₂^{-1}`.
pub fn cross_relations(pair: &PairData, m: &NCMatrix, mp: &NCMatrix) -> Result<Vec<NCPoly>> {
    let twisted = mbar(pair, m, 2, 2)?;
    let mp1 = mp.embed(1, 2)?;
    Ok(independent(twisted.mul(&mp1)?.sub(&mp1.mul(&twisted)?)?.entries()))
}

/// Relations for two hq-matrices `M`, `M'` with disjoint generator sets:
/// both sets of defining relations together with the cross-relations.
pub fn braided_product_relations(pair: &RFPair, first: &GeneratorSet, second: &GeneratorSet) -> Result<BraidedProduct> {
    if first.ids().iter().any(|g| second.contains(*g)) {
        return Err(Error::InvalidParameter("braided product needs disjoint generator sets".into()));
    }
    let (m, mp) = (first.matrix(), second.matrix());
    let cross = cross_relations(pair, &m, &mp)?;
    let mut rels = relations(pair, &m)?;
    rels.extend(relations(pair, &mp)?);
    rels.extend(cross.iter().cloned());
    let mut registry = GeneratorRegistry::new();
    registry.register(first.tag(), first.n())?;
    registry.register(second.tag(), second.n())?;
    Ok(BraidedProduct { registry, first: first.clone(), second: second.clone(), relations: rels, cross, product: m.mul(&mp)? })
}

/// The product `MM'` satisfies the defining relations modulo the ideal
/// generated by the relations of `M`, of `M'` and the cross-relations
/// (with `with_cross = false` the cross-relations are left out).
pub fn check_braided_closure(pair: &RFPair, with_cross: bool) -> Result<VerificationReport> {
    let report = ReportBuilder::for_pair("braided-closure", pair)
        .param("f", pair.f_choice().to_string())
        .param("cross_relations", with_cross)
        .param("degree", 4);
    let n = pair.n();
    let mut registry = GeneratorRegistry::new();
    let first = registry.register("M", n)?;
    let second = registry.register("M'", n)?;
    let bp = braided_product_relations(pair, &first, &second)?;
    let rels: Vec<NCPoly> = if with_cross {
        bp.relations.clone()
    } else {
        bp.relations.iter().filter(|r| !bp.cross.contains(r)).cloned().collect()
    };

    let mut alphabet = first.ids();
    alphabet.extend(second.ids());
    let class: BTreeMap<_, _> = alphabet.iter().map(|&g| (g, usize::from(second.contains(g)))).collect();
    let c = probe_constant();
    let c2 = &c + &ExactScalar::one();
    let mut probe = first.scalar_probe(&c).0;
    probe.extend(second.scalar_probe(&c2).0);
    let ideal = Ideal::new(rels, alphabet)?.with_grading(Grading::new(2, class)?)?.with_probe(ScalarProbe(probe));

    let target = mbar(pair, &bp.product, 1, 2)?.mul(&mbar(pair, &bp.product, 2, 2)?)?;
    let target = target.lmul(&pair.split().s2)?.rmul(&pair.split().a2)?;
    let failed = ideal.count_nonmembers(target.entries())?;
    Ok(report.finish(failed, None))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::rmatrix::FChoice;

    fn hq(n: usize, f: FChoice) -> HqMatrix {
        HqMatrix::generic(Arc::new(RFPair::standard(n, ExactScalar::from(2), f).unwrap()))
    }

    #[test]
    fn word_enumeration() {
        assert_eq!(r_words(1, 2), vec![Vec::<usize>::new()]);
        assert_eq!(r_words(3, 2).len(), 7);
    }

    #[test]
    fn lemma1_small() {
        for f in [FChoice::Flip, FChoice::SameAsR] {
            let h = hq(2, f);
            let rep = check_lemma1(h.pair(), h.matrix(), 3).unwrap();
            assert!(rep.pass, "{rep:?}");
        }
    }

    #[test]
    fn forms_and_projectors() {
        let h = hq(2, FChoice::SameAsR);
        assert!(check_equivalent_forms(&h).unwrap().pass);
        assert!(check_projector_relations(&h, 2, 0).unwrap().pass);
        let free = h.empty_ideal();
        assert!(!check_projector_relations_in(&h, &free, 2, 0).unwrap().pass);
    }

    #[test]
    fn braided_closure_needs_cross_relations() {
        let pair = RFPair::standard(2, ExactScalar::from(2), FChoice::Flip).unwrap();
        assert!(check_braided_closure(&pair, true).unwrap().pass);
        assert!(!check_braided_closure(&pair, false).unwrap().pass);
    }
}
