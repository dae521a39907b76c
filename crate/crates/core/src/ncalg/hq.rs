//! Generators, twisted copies `M̄_k`, and the defining relations of the
//! half-quantum matrix algebra.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::rmatrix::{PairData, RFPair};
use crate::scalars::ExactScalar;

use super::ideal::{Ideal, PolySpan, ScalarProbe};
use super::matrix::NCMatrix;
use super::poly::{GenId, NCPoly};

/// The `n²` generators `M^a_b` of one matrix, with contiguous ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    tag: String,
    n: usize,
    first: GenId,
}

impl GeneratorSet {
    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn id(&self, a: usize, b: usize) -> GenId {
        self.first + (a * self.n + b) as GenId
    }

    pub fn ids(&self) -> Vec<GenId> {
        (self.first..self.first + (self.n * self.n) as GenId).collect()
    }

    pub fn contains(&self, g: GenId) -> bool {
        (self.first..self.first + (self.n * self.n) as GenId).contains(&g)
    }

    /// `(a, b)` for the generator `M^a_b`.
    pub fn entry_of(&self, g: GenId) -> Option<(usize, usize)> {
        self.contains(g).then(|| {
            let off = (g - self.first) as usize;
            (off / self.n, off % self.n)
        })
    }

    /// 1-based display name, e.g. `M[1,2]`.
    pub fn name(&self, g: GenId) -> Option<String> {
        self.entry_of(g).map(|(a, b)| format!("{}[{},{}]", self.tag, a + 1, b + 1))
    }

    /// The generic matrix whose `(a, b)` entry is `M^a_b`.
    pub fn matrix(&self) -> NCMatrix {
        let entries = (0..self.n * self.n).map(|i| NCPoly::generator(self.first + i as GenId)).collect();
        NCMatrix::from_entries(self.n, 1, entries).expect("n^2 entries")
    }

    /// Substitution `M ↦ c·Id`.
    pub fn scalar_probe(&self, c: &ExactScalar) -> ScalarProbe {
        ScalarProbe((0..self.n).map(|a| (self.id(a, a), c.clone())).collect())
    }
}

/// Allocates disjoint generator sets; the same tag always yields the same set.
#[derive(Clone, Debug, Default)]
pub struct GeneratorRegistry {
    sets: Vec<GeneratorSet>,
    next: GenId,
}

impl GeneratorRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(&mut self, tag: &str, n: usize) -> Result<GeneratorSet> {
        if let Some(set) = self.sets.iter().find(|s| s.tag == tag) {
            if set.n != n {
                return Err(Error::InvalidParameter(format!("tag {tag:?} already used with n={}", set.n)));
            }
            return Ok(set.clone());
        }
        let set = GeneratorSet { tag: tag.to_string(), n, first: self.next };
        self.next += (n * n) as GenId;
        self.sets.push(set.clone());
        Ok(set)
    }

    pub fn sets(&self) -> &[GeneratorSet] {
        &self.sets
    }

    pub fn name(&self, g: GenId) -> String {
        self.sets.iter().find_map(|s| s.name(g)).unwrap_or_else(|| format!("x{g}"))
    }
}

/// Generic hq-matrix for a new or existing tag of the registry.
pub fn generic_hq_matrix(registry: &mut GeneratorRegistry, n: usize, tag: &str) -> Result<(GeneratorSet, NCMatrix)> {
    let set = registry.register(tag, n)?;
    let m = set.matrix();
    Ok((set, m))
}

fn require_one_leg(m: &NCMatrix) -> Result<()> {
    if m.legs() != 1 {
        return Err(Error::Dimension("expected a 1-leg matrix".into()));
    }
    Ok(())
}

/// `M̄_k` on `width` legs: `M̄_1 = M_1`, `M̄_{k+1} = F_{k,k+1} M̄_k F_{k,k+1}^{-1}`.
pub fn mbar(pair: &PairData, m: &NCMatrix, k: usize, width: usize) -> Result<NCMatrix> {
    require_one_leg(m)?;
    if k == 0 || k > width {
        return Err(Error::Dimension(format!("copy index {k} outside 1..={width}")));
    }
    let mut cur = m.embed(1, width)?;
    for i in 1..k {
        cur = cur.lmul(&pair.f_at(i, width)?)?.rmul(&pair.f_inv_at(i, width)?)?;
    }
    Ok(cur)
}

/// `M_{l̄→k̄} = M̄_l ⋯ M̄_k` on `width` legs.
pub fn mbar_product(pair: &PairData, m: &NCMatrix, l: usize, k: usize, width: usize) -> Result<NCMatrix> {
    if l == 0 || l > k || k > width {
        return Err(Error::Dimension(format!("invalid range {l}..={k} in {width} legs")));
    }
    let mut acc = mbar(pair, m, l, width)?;
    for i in l + 1..=k {
        acc = acc.mul(&mbar(pair, m, i, width)?)?;
    }
    Ok(acc)
}

/// Linearly independent spanning set of the given polynomials (reduced echelon rows).
pub fn independent(polys: &[NCPoly]) -> Vec<NCPoly> {
    PolySpan::from_polys(polys).rows().to_vec()
}

/// Entries of `S^{(2)}_{12} M̄_1 M̄_2 A^{(2)}_{12}`, deduplicated.
pub fn relations(pair: &RFPair, m: &NCMatrix) -> Result<Vec<NCPoly>> {
    let prod = mbar_product(pair, m, 1, 2, 2)?;
    let split = pair.split();
    let rel = prod.lmul(&split.s2)?.rmul(&split.a2)?;
    Ok(independent(rel.entries()))
}

/// Entries of `R̂ M̄_1 M̄_2 − M̄_1 M̄_2 R̂`, deduplicated.
pub fn full_qm_relations(pair: &PairData, m: &NCMatrix) -> Result<Vec<NCPoly>> {
    let prod = mbar_product(pair, m, 1, 2, 2)?;
    let rel = prod.lmul(pair.r())?.sub(&prod.rmul(pair.r())?)?;
    Ok(independent(rel.entries()))
}

/// The generic hq-matrix of a certified pair with cached twisted copies,
/// products and ideals.
#[derive(Debug)]
pub struct HqMatrix {
    pair: Arc<RFPair>,
    gens: GeneratorSet,
    registry: GeneratorRegistry,
    m: NCMatrix,
    mbar_cache: Mutex<HashMap<(usize, usize), Arc<NCMatrix>>>,
    prod_cache: Mutex<HashMap<(usize, usize, usize), Arc<NCMatrix>>>,
    hq_ideal: Mutex<Option<Arc<Ideal>>>,
    full_ideal: Mutex<Option<Arc<Ideal>>>,
}

/// Value used for the scalar-substitution spot checks, `M ↦ c·Id`.
pub fn probe_constant() -> ExactScalar {
    ExactScalar::new(7, 3)
}

impl HqMatrix {
    pub fn generic(pair: Arc<RFPair>) -> Self {
        let mut registry = GeneratorRegistry::new();
        let (gens, m) = generic_hq_matrix(&mut registry, pair.n(), "M").expect("fresh registry");
        HqMatrix {
            pair,
            gens,
            registry,
            m,
            mbar_cache: Mutex::new(HashMap::new()),
            prod_cache: Mutex::new(HashMap::new()),
            hq_ideal: Mutex::new(None),
            full_ideal: Mutex::new(None),
        }
    }

    pub fn pair(&self) -> &RFPair {
        &self.pair
    }

    pub fn pair_arc(&self) -> Arc<RFPair> {
        self.pair.clone()
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn registry(&self) -> &GeneratorRegistry {
        &self.registry
    }

    pub fn matrix(&self) -> &NCMatrix {
        &self.m
    }

    pub fn n(&self) -> usize {
        self.pair.n()
    }

    pub fn mbar(&self, k: usize, width: usize) -> Result<Arc<NCMatrix>> {
        if k == 0 || k > width {
            return Err(Error::Dimension(format!("copy index {k} outside 1..={width}")));
        }
        if let Some(x) = self.mbar_cache.lock().expect("lock").get(&(k, width)) {
            return Ok(x.clone());
        }
        let x = if k == 1 {
            Arc::new(mbar(&self.pair, &self.m, k, width)?)
        } else {
            let prev = self.mbar(k - 1, width)?;
            let i = k - 1;
            Arc::new(prev.lmul(&self.pair.f_at(i, width)?)?.rmul(&self.pair.f_inv_at(i, width)?)?)
        };
        self.mbar_cache.lock().expect("lock").insert((k, width), x.clone());
        Ok(x)
    }

    /// `M_{l̄→k̄}` on `width` legs.
    pub fn product(&self, l: usize, k: usize, width: usize) -> Result<Arc<NCMatrix>> {
        if l == 0 || l > k || k > width {
            return Err(Error::Dimension(format!("invalid range {l}..={k} in {width} legs")));
        }
        if l == k {
            return self.mbar(l, width);
        }
        if let Some(x) = self.prod_cache.lock().expect("lock").get(&(l, k, width)) {
            return Ok(x.clone());
        }
        let x = Arc::new(self.product(l, k - 1, width)?.mul(&*self.mbar(k, width)?)?);
        self.prod_cache.lock().expect("lock").insert((l, k, width), x.clone());
        Ok(x)
    }

    pub fn relations(&self) -> Result<Vec<NCPoly>> {
        relations(&self.pair, &self.m)
    }

    pub fn full_qm_relations(&self) -> Result<Vec<NCPoly>> {
        full_qm_relations(&self.pair, &self.m)
    }

    pub fn probe(&self) -> ScalarProbe {
        self.gens.scalar_probe(&probe_constant())
    }

    /// Ideal generated by the half-quantum relations.
    pub fn ideal(&self) -> Result<Arc<Ideal>> {
        let mut slot = self.hq_ideal.lock().expect("lock");
        if let Some(i) = slot.as_ref() {
            return Ok(i.clone());
        }
        let ideal = Arc::new(Ideal::new(self.relations()?, self.gens.ids())?.with_probe(self.probe()));
        *slot = Some(ideal.clone());
        Ok(ideal)
    }

    /// Ideal generated by the full (RTT-type) quantum-matrix relations.
    pub fn full_qm_ideal(&self) -> Result<Arc<Ideal>> {
        let mut slot = self.full_ideal.lock().expect("lock");
        if let Some(i) = slot.as_ref() {
            return Ok(i.clone());
        }
        let ideal = Arc::new(Ideal::new(self.full_qm_relations()?, self.gens.ids())?.with_probe(self.probe()));
        *slot = Some(ideal.clone());
        Ok(ideal)
    }

    pub fn empty_ideal(&self) -> Ideal {
        Ideal::empty(self.gens.ids())
    }

    pub fn f_trace(&self, x: &NCMatrix, legs: &[usize]) -> Result<NCMatrix> {
        x.f_trace(self.pair.d(), legs)
    }

    pub fn name(&self, g: GenId) -> String {
        self.registry.name(g)
    }

    pub fn display(&self, p: &NCPoly) -> String {
        p.display_with(|g| self.name(g))
    }

    /// Generator values under `M ↦ c·Id`.
    pub fn scalar_values(&self, c: &ExactScalar) -> BTreeMap<GenId, ExactScalar> {
        self.gens.scalar_probe(c).0
    }
}
