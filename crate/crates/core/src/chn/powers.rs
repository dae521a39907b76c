//! Quantum symmetric functions and the eight matrix-power families.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::ncalg::{HqMatrix, NCMatrix, NCPoly};
use crate::scalars::ExactScalar;
use crate::tensor::TensorOp;

/// The four families of symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymKind {
    /// `s_k = tr_F(R̂_{1→k} M_{1̄→k̄})`
    S,
    /// `s̄_k = tr_F(R̂_{k←1} M_{1̄→k̄})`
    SBar,
    /// `σ_k = q^k tr_F(A^{(k)} M_{1̄→k̄})`
    Sigma,
    /// `τ_k = q^{-k} tr_F(S^{(k)} M_{1̄→k̄})`
    Tau,
}

/// The eight `k`-th powers. Each is `tr_F(2..k)` of `M_{1̄→k̄}` multiplied
/// on one side by an R̂-word or a projector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PowerKind {
    /// `M^{→k}`: `M R̂_{1→k}`
    Right,
    /// `M^{←k}`: `R̂_{k←1} M`
    Left,
    /// `M̃^{→k}`: `R̂_{1→k} M`
    TildeRight,
    /// `M̃^{←k}`: `M R̂_{k←1}`
    TildeLeft,
    /// `M^{∧k}`: `A^{(k)} M`
    Wedge,
    /// `M^{Sk}`: `M S^{(k)}`
    Sym,
    /// `M̃^{∧k}`: `M A^{(k)}`
    TildeWedge,
    /// `M̃^{Sk}`: `S^{(k)} M`
    TildeSym,
}

impl PowerKind {
    pub const ALL: [PowerKind; 8] = [
        PowerKind::Right,
        PowerKind::Left,
        PowerKind::TildeRight,
        PowerKind::TildeLeft,
        PowerKind::Wedge,
        PowerKind::Sym,
        PowerKind::TildeWedge,
        PowerKind::TildeSym,
    ];
}

impl fmt::Display for PowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PowerKind::Right => "right",
            PowerKind::Left => "left",
            PowerKind::TildeRight => "tilde-right",
            PowerKind::TildeLeft => "tilde-left",
            PowerKind::Wedge => "wedge",
            PowerKind::Sym => "sym",
            PowerKind::TildeWedge => "tilde-wedge",
            PowerKind::TildeSym => "tilde-sym",
        };
        f.write_str(s)
    }
}

/// Which side of `M_{1̄→k̄}` an operator multiplies.
enum Side {
    Left,
    Right,
}

/// Symmetric functions and powers of the generic hq-matrix, computed on
/// demand and cached. Safe to share between threads.
#[derive(Debug)]
pub struct ChnEngine {
    hq: Arc<HqMatrix>,
    powers: Mutex<HashMap<(PowerKind, usize), Arc<NCMatrix>>>,
    syms: Mutex<HashMap<(SymKind, usize), NCPoly>>,
}

impl ChnEngine {
    pub fn new(hq: Arc<HqMatrix>) -> Self {
        ChnEngine { hq, powers: Mutex::new(HashMap::new()), syms: Mutex::new(HashMap::new()) }
    }

    pub fn hq(&self) -> &HqMatrix {
        &self.hq
    }

    pub fn hq_arc(&self) -> Arc<HqMatrix> {
        self.hq.clone()
    }

    pub fn n(&self) -> usize {
        self.hq.n()
    }

    /// `R̂_{1→k}` on `k` legs.
    pub fn r_up(&self, k: usize) -> Result<TensorOp> {
        self.hq.pair().r_ascending(1, k, k)
    }

    /// `R̂_{k←1}` on `k` legs.
    pub fn r_down(&self, k: usize) -> Result<TensorOp> {
        self.hq.pair().r_descending(k, 1, k)
    }

    fn require_k(&self, k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::InvalidParameter("power index must be at least 1".into()));
        }
        self.hq.pair().q().require_admissible(k)
    }

    fn dressed(&self, op: &TensorOp, side: Side, k: usize) -> Result<NCMatrix> {
        let m = self.hq.product(1, k, k)?;
        match side {
            Side::Left => m.lmul(op),
            Side::Right => m.rmul(op),
        }
    }

    /// The 1-leg matrix of the given power family at `k ≥ 1`.
    pub fn power(&self, kind: PowerKind, k: usize) -> Result<Arc<NCMatrix>> {
        self.require_k(k)?;
        if let Some(x) = self.powers.lock().expect("lock").get(&(kind, k)) {
            return Ok(x.clone());
        }
        let pair = self.hq.pair();
        let (op, side) = match kind {
            PowerKind::Right => (self.r_up(k)?, Side::Right),
            PowerKind::Left => (self.r_down(k)?, Side::Left),
            PowerKind::TildeRight => (self.r_up(k)?, Side::Left),
            PowerKind::TildeLeft => (self.r_down(k)?, Side::Right),
            PowerKind::Wedge => (pair.antisymmetrizer(k)?, Side::Left),
            PowerKind::Sym => (pair.symmetrizer(k)?, Side::Right),
            PowerKind::TildeWedge => (pair.antisymmetrizer(k)?, Side::Right),
            PowerKind::TildeSym => (pair.symmetrizer(k)?, Side::Left),
        };
        let traced: Vec<usize> = (2..=k).collect();
        let x = Arc::new(self.hq.f_trace(&self.dressed(&op, side, k)?, &traced)?);
        self.powers.lock().expect("lock").insert((kind, k), x.clone());
        Ok(x)
    }

    /// Symmetric function of degree `k` (`1` at `k = 0`).
    pub fn sym(&self, kind: SymKind, k: usize) -> Result<NCPoly> {
        if k == 0 {
            return Ok(NCPoly::one());
        }
        self.require_k(k)?;
        if let Some(x) = self.syms.lock().expect("lock").get(&(kind, k)) {
            return Ok(x.clone());
        }
        let pair = self.hq.pair();
        let q = pair.q();
        let (op, factor) = match kind {
            SymKind::S => (self.r_up(k)?, ExactScalar::one()),
            SymKind::SBar => (self.r_down(k)?, ExactScalar::one()),
            SymKind::Sigma => (pair.antisymmetrizer(k)?, q.pow(k as i32)),
            SymKind::Tau => (pair.symmetrizer(k)?, q.pow(-(k as i32))),
        };
        let traced: Vec<usize> = (1..=k).collect();
        let t = self.hq.f_trace(&self.dressed(&op, Side::Left, k)?, &traced)?;
        let p = t.as_poly().expect("full trace is a scalar").scale(&factor);
        self.syms.lock().expect("lock").insert((kind, k), p.clone());
        Ok(p)
    }

    /// `tr_F` of a 1-leg matrix.
    pub fn trace(&self, x: &NCMatrix) -> Result<NCPoly> {
        Ok(self.hq.f_trace(x, &[1])?.as_poly().expect("full trace").clone())
    }
}

/// `s_k, s̄_k, σ_k, τ_k` for `k = 0..=K`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymFunctions {
    pub s: Vec<NCPoly>,
    pub sbar: Vec<NCPoly>,
    pub sigma: Vec<NCPoly>,
    pub tau: Vec<NCPoly>,
}

pub fn sym_functions(engine: &ChnEngine, max_k: usize) -> Result<SymFunctions> {
    let family = |kind| (0..=max_k).map(|k| engine.sym(kind, k)).collect::<Result<Vec<_>>>();
    Ok(SymFunctions {
        s: family(SymKind::S)?,
        sbar: family(SymKind::SBar)?,
        sigma: family(SymKind::Sigma)?,
        tau: family(SymKind::Tau)?,
    })
}

/// All eight power families for `k = 1..=K`; `family(kind)[k-1]` is the `k`-th power.
#[derive(Clone, Debug)]
pub struct PowerFamily {
    pub max_k: usize,
    families: Vec<(PowerKind, Vec<Arc<NCMatrix>>)>,
}

impl PowerFamily {
    pub fn family(&self, kind: PowerKind) -> &[Arc<NCMatrix>] {
        &self.families.iter().find(|(k, _)| *k == kind).expect("all kinds present").1
    }

    pub fn get(&self, kind: PowerKind, k: usize) -> Option<&NCMatrix> {
        k.checked_sub(1).and_then(|i| self.family(kind).get(i)).map(|x| &**x)
    }
}

pub fn powers(engine: &ChnEngine, max_k: usize) -> Result<PowerFamily> {
    let families = PowerKind::ALL
        .iter()
        .map(|&kind| Ok((kind, (1..=max_k).map(|k| engine.power(kind, k)).collect::<Result<Vec<_>>>()?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(PowerFamily { max_k, families })
}
