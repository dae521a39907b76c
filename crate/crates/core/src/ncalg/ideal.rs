//! Graded components of two-sided ideals generated by homogeneous relations,
//! and ideal membership by exact elimination.

use std::collections::{BTreeMap, HashMap};
use std::ops::Bound;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::scalars::ExactScalar;

use super::poly::{GenId, NCPoly, Word};

/// Exact linear span of polynomials, kept in echelon form keyed by leading word.
///
/// Every stored row has leading coefficient 1 and a distinct leading (smallest)
/// word. [`PolySpan::make_reduced`] brings the rows to reduced row-echelon form.
#[derive(Clone, Debug, Default)]
pub struct PolySpan {
    rows: Vec<NCPoly>,
    pivots: BTreeMap<Word, usize>,
}

impl PolySpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_polys<'a>(polys: impl IntoIterator<Item = &'a NCPoly>) -> Self {
        let mut span = PolySpan::new();
        for p in polys {
            span.insert(p.clone());
        }
        span.make_reduced();
        span
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[NCPoly] {
        &self.rows
    }

    /// Subtracts pivot rows until the leading word is not a pivot.
    fn top_reduce(&self, p: &mut NCPoly) {
        while let Some((w, c)) = p.term_map().iter().next() {
            let Some(&idx) = self.pivots.get(w) else { break };
            let c = -c.clone();
            p.add_scaled(&self.rows[idx], &c);
        }
    }

    /// Eliminates every pivot word from `p`; the result is zero iff `p` is in the span.
    pub fn reduce(&self, mut p: NCPoly) -> NCPoly {
        let mut cursor: Option<Word> = None;
        loop {
            let next = {
                let map = p.term_map();
                let lower = match &cursor {
                    None => Bound::Unbounded,
                    Some(c) => Bound::Excluded(c.clone()),
                };
                map.range((lower, Bound::Unbounded))
                    .find(|(w, _)| self.pivots.contains_key(*w))
                    .map(|(w, c)| (w.clone(), c.clone()))
            };
            let Some((w, c)) = next else { break };
            p.add_scaled(&self.rows[self.pivots[&w]], &-c);
            cursor = Some(w);
        }
        p
    }

    pub fn contains(&self, p: &NCPoly) -> bool {
        let mut p = p.clone();
        self.top_reduce(&mut p);
        p.is_zero()
    }

    /// Adds `p` to the span; returns `true` when the rank grows.
    pub fn insert(&mut self, mut p: NCPoly) -> bool {
        self.top_reduce(&mut p);
        let Some((w, c)) = p.term_map().iter().next().map(|(w, c)| (w.clone(), c.clone())) else {
            return false;
        };
        let inv = c.recip().expect("nonzero leading coefficient");
        let p = p.scale(&inv);
        self.pivots.insert(w, self.rows.len());
        self.rows.push(p);
        true
    }

    /// Back-substitutes so that no pivot word appears in any other row.
    pub fn make_reduced(&mut self) {
        let order: Vec<(Word, usize)> = self.pivots.iter().rev().map(|(w, &i)| (w.clone(), i)).collect();
        for (w, idx) in order {
            let mut row = std::mem::take(&mut self.rows[idx]);
            let lead = row.term_map_mut().remove(&w).expect("pivot present");
            let mut tail = self.reduce(row);
            tail.add_term(w, &lead);
            self.rows[idx] = tail;
        }
        // Canonical row order: ascending leading word.
        let mut rows: Vec<(Word, NCPoly)> =
            self.pivots.iter().map(|(w, &i)| (w.clone(), std::mem::take(&mut self.rows[i]))).collect();
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        self.pivots = rows.iter().enumerate().map(|(i, (w, _))| (w.clone(), i)).collect();
        self.rows = rows.into_iter().map(|(_, p)| p).collect();
    }

    /// Row-space equality of two reduced spans.
    pub fn same_span(&self, other: &PolySpan) -> bool {
        self.rank() == other.rank() && self.rows.iter().all(|r| other.contains(r))
    }
}

/// Assignment of generators to classes; relations homogeneous for it split the
/// ideal into independent multidegree components.
#[derive(Clone, Debug)]
pub struct Grading {
    classes: usize,
    class: BTreeMap<GenId, usize>,
}

impl Grading {
    pub fn new(classes: usize, class: BTreeMap<GenId, usize>) -> Result<Self> {
        if class.values().any(|&c| c >= classes) {
            return Err(Error::InvalidParameter("grading class out of range".into()));
        }
        Ok(Grading { classes, class })
    }

    pub fn classes(&self) -> usize {
        self.classes
    }

    pub fn class_of(&self, g: GenId) -> usize {
        self.class.get(&g).copied().unwrap_or(0)
    }

    pub fn multidegree_of_word(&self, w: &[GenId]) -> Vec<usize> {
        let mut md = vec![0; self.classes];
        for &g in w {
            md[self.class_of(g)] += 1;
        }
        md
    }
}

/// Row-reduced basis of one graded component of a two-sided ideal.
#[derive(Clone, Debug)]
pub struct IdealDegreeBasis {
    degree: usize,
    multidegree: Option<Vec<usize>>,
    alphabet: Vec<GenId>,
    span: PolySpan,
}

/// Result of reducing a polynomial against an ideal component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    pub residual: NCPoly,
}

fn words(alphabet: &[GenId], len: usize) -> Vec<Word> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&g| {
                    let mut w2 = w.clone();
                    w2.push(g);
                    w2
                })
            })
            .collect();
    }
    out
}

fn check_homogeneous(rels: &[NCPoly]) -> Result<()> {
    for r in rels {
        if !r.is_zero() && r.homogeneous_degree().is_none_or(|d| d == 0) {
            return Err(Error::InvalidParameter(format!("relation is not homogeneous of positive degree: {r:?}")));
        }
    }
    Ok(())
}

impl IdealDegreeBasis {
    /// Degree-`d` component: the span of `w₁·r·w₂` over relations `r` and words
    /// with `|w₁| + deg r + |w₂| = d`.
    pub fn build(rels: &[NCPoly], alphabet: &[GenId], d: usize) -> Result<Self> {
        Self::build_graded(rels, alphabet, d, None)
    }

    /// As [`build`](Self::build), restricted to one multidegree of a grading.
    pub fn build_graded(
        rels: &[NCPoly],
        alphabet: &[GenId],
        d: usize,
        component: Option<(&Grading, &[usize])>,
    ) -> Result<Self> {
        check_homogeneous(rels)?;
        let mut alphabet = alphabet.to_vec();
        alphabet.sort_unstable();
        alphabet.dedup();
        let mut span = PolySpan::new();
        let mut word_cache: HashMap<usize, Vec<Word>> = HashMap::new();
        for r in rels.iter().filter(|r| !r.is_zero()) {
            let e = r.homogeneous_degree().expect("checked");
            if e > d {
                continue;
            }
            let rel_md = component.map(|(g, _)| g.multidegree_of_word(r.leading_word().expect("nonzero")));
            if let Some((g, _)) = component {
                if r.multidegree(g.classes(), |x| g.class_of(x)).is_none() {
                    return Err(Error::InvalidParameter("relation is not homogeneous for the grading".into()));
                }
            }
            for left in 0..=d - e {
                let right = d - e - left;
                for lw in word_cache.entry(left).or_insert_with(|| words(&alphabet, left)).clone() {
                    for rw in word_cache.entry(right).or_insert_with(|| words(&alphabet, right)).iter() {
                        if let (Some((g, target)), Some(md)) = (component, &rel_md) {
                            let mut total = md.clone();
                            for (t, x) in total.iter_mut().zip(g.multidegree_of_word(&lw)) {
                                *t += x;
                            }
                            for (t, x) in total.iter_mut().zip(g.multidegree_of_word(rw)) {
                                *t += x;
                            }
                            if total != target {
                                continue;
                            }
                        }
                        span.insert(r.sandwich(&lw, rw));
                    }
                }
            }
        }
        span.make_reduced();
        Ok(IdealDegreeBasis { degree: d, multidegree: component.map(|(_, m)| m.to_vec()), alphabet, span })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn multidegree(&self) -> Option<&[usize]> {
        self.multidegree.as_deref()
    }

    /// Dimension of this ideal component.
    pub fn rank(&self) -> usize {
        self.span.rank()
    }

    /// Number of words of length `degree` over the alphabet (all multidegrees).
    pub fn monomial_count(&self) -> usize {
        self.alphabet.len().pow(self.degree as u32)
    }

    pub fn alphabet(&self) -> &[GenId] {
        &self.alphabet
    }

    /// Rows of the reduced basis matrix, one polynomial per row.
    pub fn rows(&self) -> &[NCPoly] {
        self.span.rows()
    }

    pub fn span(&self) -> &PolySpan {
        &self.span
    }

    pub fn is_in_ideal(&self, p: &NCPoly) -> Result<Membership> {
        is_in_ideal(p, self)
    }
}

/// Reduces `p` against a degree component; `p` must be zero or homogeneous of that degree.
pub fn is_in_ideal(p: &NCPoly, basis: &IdealDegreeBasis) -> Result<Membership> {
    if !p.is_zero() && p.homogeneous_degree() != Some(basis.degree) {
        return Err(Error::InvalidParameter(format!(
            "polynomial is not homogeneous of degree {}",
            basis.degree
        )));
    }
    let residual = basis.span.reduce(p.clone());
    Ok(Membership { member: residual.is_zero(), residual })
}

pub fn ideal_degree_basis(rels: &[NCPoly], alphabet: &[GenId], d: usize) -> Result<IdealDegreeBasis> {
    IdealDegreeBasis::build(rels, alphabet, d)
}

/// Scalar substitution of generators; unlisted generators map to zero.
#[derive(Clone, Debug, Default)]
pub struct ScalarProbe(pub BTreeMap<GenId, ExactScalar>);

impl ScalarProbe {
    pub fn value(&self, g: GenId) -> ExactScalar {
        self.0.get(&g).cloned().unwrap_or_default()
    }

    pub fn eval(&self, p: &NCPoly) -> ExactScalar {
        p.evaluate(|g| self.value(g))
    }
}

/// Degree and multidegree (empty when ungraded) of a cached component.
type ComponentKey = (usize, Vec<usize>);

/// A two-sided ideal given by homogeneous relations, with lazily built and
/// cached graded components.
#[derive(Debug)]
pub struct Ideal {
    rels: Vec<NCPoly>,
    alphabet: Vec<GenId>,
    grading: Option<Grading>,
    probe: Option<ScalarProbe>,
    cache: Mutex<HashMap<ComponentKey, Arc<IdealDegreeBasis>>>,
}

impl Ideal {
    pub fn new(rels: Vec<NCPoly>, alphabet: Vec<GenId>) -> Result<Self> {
        check_homogeneous(&rels)?;
        let rels = rels.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(Ideal { rels, alphabet, grading: None, probe: None, cache: Mutex::new(HashMap::new()) })
    }

    /// The zero ideal: membership degenerates to being identically zero.
    pub fn empty(alphabet: Vec<GenId>) -> Self {
        Ideal::new(Vec::new(), alphabet).expect("no relations")
    }

    /// Splits components by multidegree. Every relation must be homogeneous for `grading`.
    pub fn with_grading(mut self, grading: Grading) -> Result<Self> {
        for r in &self.rels {
            if r.multidegree(grading.classes(), |g| grading.class_of(g)).is_none() {
                return Err(Error::InvalidParameter("relation is not homogeneous for the grading".into()));
            }
        }
        self.grading = Some(grading);
        self.cache.lock().expect("cache lock").clear();
        Ok(self)
    }

    /// Enables the scalar-substitution soundness check on every successful
    /// membership, provided every relation vanishes under `probe`.
    pub fn with_probe(mut self, probe: ScalarProbe) -> Self {
        if self.rels.iter().all(|r| probe.eval(r).is_zero()) {
            self.probe = Some(probe);
        }
        self
    }

    pub fn has_probe(&self) -> bool {
        self.probe.is_some()
    }

    pub fn relations(&self) -> &[NCPoly] {
        &self.rels
    }

    pub fn alphabet(&self) -> &[GenId] {
        &self.alphabet
    }

    /// Degree-`d` component (all multidegrees when ungraded).
    pub fn component(&self, d: usize, multidegree: Option<&[usize]>) -> Result<Arc<IdealDegreeBasis>> {
        let key = (d, multidegree.map(<[usize]>::to_vec).unwrap_or_default());
        if let Some(b) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(b.clone());
        }
        let comp = match (&self.grading, multidegree) {
            (Some(g), Some(md)) => Some((g, md)),
            _ => None,
        };
        let basis = Arc::new(IdealDegreeBasis::build_graded(&self.rels, &self.alphabet, d, comp)?);
        self.cache.lock().expect("cache lock").insert(key, basis.clone());
        Ok(basis)
    }

    /// Membership of a homogeneous polynomial.
    pub fn membership(&self, p: &NCPoly) -> Result<Membership> {
        if p.is_zero() {
            return Ok(Membership { member: true, residual: NCPoly::zero() });
        }
        let d = p
            .homogeneous_degree()
            .ok_or_else(|| Error::InvalidParameter("membership requires a homogeneous polynomial".into()))?;
        let residual = match &self.grading {
            None => self.component(d, None)?.span.reduce(p.clone()),
            Some(g) => {
                let mut parts: BTreeMap<Vec<usize>, NCPoly> = BTreeMap::new();
                for (w, c) in p.terms() {
                    parts.entry(g.multidegree_of_word(w)).or_default().add_term(w.clone(), c);
                }
                let mut residual = NCPoly::zero();
                for (md, part) in parts {
                    let r = self.component(d, Some(&md))?.span.reduce(part);
                    residual.add_scaled(&r, &ExactScalar::one());
                }
                residual
            }
        };
        let member = residual.is_zero();
        if member {
            if let Some(probe) = &self.probe {
                if !probe.eval(p).is_zero() {
                    return Err(Error::Consistency(
                        "ideal member does not vanish under scalar substitution".into(),
                    ));
                }
            }
        }
        Ok(Membership { member, residual })
    }

    /// Number of polynomials in `polys` that are not ideal members.
    pub fn count_nonmembers<'a>(&self, polys: impl IntoIterator<Item = &'a NCPoly>) -> Result<usize> {
        let mut count = 0;
        for p in polys {
            if !self.membership(p)?.member {
                count += 1;
            }
        }
        Ok(count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> ExactScalar {
        ExactScalar::from(v)
    }

    fn commutator(a: GenId, b: GenId) -> NCPoly {
        NCPoly::from_terms([(vec![a, b], s(1)), (vec![b, a], s(-1))])
    }

    #[test]
    fn span_reduction_is_canonical() {
        let a = NCPoly::from_terms([(vec![0, 1], s(2)), (vec![1, 0], s(4))]);
        let b = NCPoly::from_terms([(vec![1, 0], s(1)), (vec![1, 1], s(1))]);
        let span = PolySpan::from_polys([&a, &b]);
        assert_eq!(span.rank(), 2);
        assert!(span.contains(&a.add(&b.scale(&s(3)))));
        assert!(!span.contains(&NCPoly::monomial(vec![1, 1], s(1))));
        let other = PolySpan::from_polys([&a.add(&b), &b.scale(&s(-5))]);
        assert!(span.same_span(&other));
        assert_eq!(span.rows(), other.rows());
    }

    #[test]
    fn commutative_polynomial_ideal() {
        // x y = y x: degree-3 component has dimension 8 - 4 = 4.
        let rels = vec![commutator(0, 1)];
        let b2 = ideal_degree_basis(&rels, &[0, 1], 2).unwrap();
        assert_eq!(b2.rank(), 1);
        let b3 = ideal_degree_basis(&rels, &[0, 1], 3).unwrap();
        assert_eq!(b3.rank(), 4);
        assert_eq!(b3.monomial_count(), 8);
        let xyx_minus_xxy = NCPoly::from_terms([(vec![0, 1, 0], s(1)), (vec![0, 0, 1], s(-1))]);
        assert!(b3.is_in_ideal(&xyx_minus_xxy).unwrap().member);
        let m = b3.is_in_ideal(&NCPoly::monomial(vec![0, 0, 0], s(1))).unwrap();
        assert!(!m.member);
        assert!(!m.residual.is_zero());
        assert!(b3.is_in_ideal(&NCPoly::zero()).unwrap().member);
        assert!(b3.is_in_ideal(&commutator(0, 1)).is_err());
    }

    #[test]
    fn empty_and_invalid_relations() {
        assert_eq!(ideal_degree_basis(&[], &[0, 1], 3).unwrap().rank(), 0);
        let mixed = NCPoly::from_terms([(vec![0], s(1)), (vec![0, 1], s(1))]);
        assert!(ideal_degree_basis(&[mixed], &[0, 1], 2).is_err());
    }

    #[test]
    fn graded_components_agree_with_ungraded() {
        let rels = vec![commutator(0, 2), commutator(1, 2)];
        let alphabet = vec![0, 1, 2];
        let plain = Ideal::new(rels.clone(), alphabet.clone()).unwrap();
        let classes = BTreeMap::from([(0, 0), (1, 0), (2, 1)]);
        let graded = Ideal::new(rels, alphabet).unwrap().with_grading(Grading::new(2, classes).unwrap()).unwrap();
        let p = NCPoly::from_terms([(vec![0, 2, 1], s(1)), (vec![0, 1, 2], s(-1))]);
        let q = NCPoly::from_terms([(vec![0, 2, 1], s(1)), (vec![1, 0, 2], s(-1))]);
        for poly in [&p, &q] {
            assert_eq!(plain.membership(poly).unwrap().member, graded.membership(poly).unwrap().member);
        }
        assert!(plain.membership(&p).unwrap().member);
        assert!(!plain.membership(&q).unwrap().member);
    }

    #[test]
    fn probe_catches_unsound_membership() {
        let rels = vec![commutator(0, 1)];
        let probe = ScalarProbe(BTreeMap::from([(0, s(3)), (1, s(5))]));
        let ideal = Ideal::new(rels, vec![0, 1]).unwrap().with_probe(probe);
        assert!(ideal.has_probe());
        assert!(ideal.membership(&commutator(0, 1).sandwich(&[1], &[])).unwrap().member);
        let noncomm = Ideal::new(vec![NCPoly::monomial(vec![0, 1], s(1))], vec![0, 1])
            .unwrap()
            .with_probe(ScalarProbe(BTreeMap::from([(0, s(3)), (1, s(5))])));
        assert!(!noncomm.has_probe());
    }
}
