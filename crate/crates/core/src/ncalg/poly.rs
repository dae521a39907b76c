use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::scalars::ExactScalar;

/// Stable integer id of a generator symbol.
pub type GenId = u32;

/// A monomial: an ordered product of generators. The empty word is `1`.
pub type Word = Vec<GenId>;

/// A noncommutative polynomial with exact coefficients.
///
/// Terms are kept in a `BTreeMap`, so equal polynomials have identical
/// representations and iteration follows the graded-lex order on words of a
/// fixed degree. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct NCPoly {
    terms: BTreeMap<Word, ExactScalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn one() -> Self {
        Self::constant(ExactScalar::one())
    }

    pub fn generator(id: GenId) -> Self {
        Self::monomial(vec![id], ExactScalar::one())
    }

    pub fn monomial(word: Word, c: ExactScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(word, c);
        }
        NCPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, ExactScalar)>) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &ExactScalar)> {
        self.terms.iter()
    }

    pub(crate) fn term_map(&self) -> &BTreeMap<Word, ExactScalar> {
        &self.terms
    }

    pub(crate) fn term_map_mut(&mut self) -> &mut BTreeMap<Word, ExactScalar> {
        &mut self.terms
    }

    pub fn coefficient(&self, word: &[GenId]) -> ExactScalar {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next()
    }

    /// Largest word length among the terms; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    /// `Some(d)` when every term has length `d`; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(Vec::len);
        let d = lens.next()?;
        lens.all(|l| l == d).then_some(d)
    }

    pub fn add_term(&mut self, word: Word, c: &ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &NCPoly, c: &ExactScalar) {
        if c.is_zero() {
            return;
        }
        for (w, v) in &other.terms {
            self.add_term(w.clone(), &(v * c));
        }
    }

    /// `self += c · left · right`.
    pub fn add_product(&mut self, left: &NCPoly, right: &NCPoly, c: &ExactScalar) {
        for (wl, vl) in &left.terms {
            let lc = vl * c;
            for (wr, vr) in &right.terms {
                let mut w = Vec::with_capacity(wl.len() + wr.len());
                w.extend_from_slice(wl);
                w.extend_from_slice(wr);
                self.add_term(w, &(&lc * vr));
            }
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect() }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(other, &ExactScalar::one());
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(other, &-ExactScalar::one());
        out
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&-ExactScalar::one())
    }

    /// Noncommutative product `self · other`.
    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        out.add_product(self, other, &ExactScalar::one());
        out
    }

    /// `w_left · self · w_right` for words.
    pub fn sandwich(&self, left: &[GenId], right: &[GenId]) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, v)| {
                    let mut word = Vec::with_capacity(left.len() + w.len() + right.len());
                    word.extend_from_slice(left);
                    word.extend_from_slice(w);
                    word.extend_from_slice(right);
                    (word, v.clone())
                })
                .collect(),
        }
    }

    /// Substitutes a scalar for every generator.
    pub fn evaluate(&self, mut value: impl FnMut(GenId) -> ExactScalar) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for (w, c) in &self.terms {
            let mut term = c.clone();
            for &g in w {
                if term.is_zero() {
                    break;
                }
                term = term * value(g);
            }
            acc += &term;
        }
        acc
    }

    /// Multidegree under a grading assigning each generator a class in `0..classes`.
    /// `None` if the terms do not share one multidegree.
    pub fn multidegree(&self, classes: usize, class_of: impl Fn(GenId) -> usize) -> Option<Vec<usize>> {
        let mut result: Option<Vec<usize>> = None;
        for w in self.terms.keys() {
            let mut md = vec![0; classes];
            for &g in w {
                md[class_of(g)] += 1;
            }
            match &result {
                None => result = Some(md),
                Some(prev) if *prev != md => return None,
                _ => {}
            }
        }
        result
    }

    /// Renders terms using `name` for each generator.
    pub fn display_with(&self, name: impl Fn(GenId) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|&g| name(g)).collect::<Vec<_>>().join(" ")
            };
            if i > 0 {
                out.push_str(" + ");
            }
            if c.is_one() && !w.is_empty() {
                out.push_str(&word);
            } else if w.is_empty() {
                out.push_str(&c.to_string());
            } else {
                out.push_str(&format!("({c}) {word}"));
            }
        }
        out
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(|g| format!("x{g}")))
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
