//! Batch driver: load a pair configuration, run verification suites and
//! collect their reports.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chn::{self, ChnEngine, ChnVariant, NewtonVariant};
use crate::error::{Error, Result};
use crate::ncalg::identities;
use crate::ncalg::HqMatrix;
use crate::projectors::{check_absorption, ProjectorKind};
use crate::report::{ReportBuilder, VerificationReport};
use crate::rmatrix::{self, FChoice, RFPair};
use crate::scalars::{DeformationParam, ExactScalar};
use crate::tensor::TensorOp;

fn default_n() -> usize {
    2
}

fn default_q() -> ExactScalar {
    ExactScalar::from(2)
}

fn default_f() -> FChoice {
    FChoice::SameAsR
}

/// Pair configuration as read from JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairConfig {
    #[serde(default = "default_n")]
    pub n: usize,
    #[serde(default = "default_q")]
    pub q: ExactScalar,
    #[serde(default = "default_f")]
    pub f_choice: FChoice,
    #[serde(default)]
    pub multiparams: Option<Vec<Vec<ExactScalar>>>,
    #[serde(default)]
    pub r_file: Option<PathBuf>,
    #[serde(default)]
    pub f_file: Option<PathBuf>,
}

impl Default for PairConfig {
    fn default() -> Self {
        PairConfig { n: default_n(), q: default_q(), f_choice: default_f(), multiparams: None, r_file: None, f_file: None }
    }
}

impl PairConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Reads a config; relative operator file paths are resolved against the
    /// config's directory.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let mut cfg = Self::from_json(&std::fs::read_to_string(path)?)?;
        let base = path.parent().unwrap_or(Path::new("."));
        for file in [&mut cfg.r_file, &mut cfg.f_file].into_iter().flatten() {
            if file.is_relative() {
                *file = base.join(&*file);
            }
        }
        Ok(cfg)
    }

    /// `R̂` and `F` as configured, before any certification.
    pub fn operators(&self) -> Result<(TensorOp, TensorOp, DeformationParam)> {
        let q = DeformationParam::new(self.q.clone())?;
        let r = match &self.r_file {
            Some(path) => TensorOp::load(path)?,
            None => rmatrix::dj_rmatrix(self.n, &q, self.multiparams.as_deref())?,
        };
        if r.dim() != self.n {
            return Err(Error::InvalidParameter(format!("R acts on dimension {}, config says n={}", r.dim(), self.n)));
        }
        let f = match self.f_choice {
            FChoice::Flip => TensorOp::permutation_p(self.n),
            FChoice::SameAsR => r.clone(),
            FChoice::Custom => {
                let path = self
                    .f_file
                    .as_ref()
                    .ok_or_else(|| Error::InvalidParameter("f_choice \"file\" requires f_file".into()))?;
                TensorOp::load(path)?
            }
        };
        Ok((r, f, q))
    }

    pub fn certify(&self) -> Result<RFPair> {
        let (r, f, q) = self.operators()?;
        RFPair::certify(r, f, q, self.f_choice)
    }
}

/// The verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Axioms,
    Lemma1,
    Forms,
    ProjectorRelations,
    Chn,
    Newton,
    ProofSteps,
    CayleyHamilton,
    BraidedClosure,
    FullQmPowers,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Axioms,
        Suite::Lemma1,
        Suite::Forms,
        Suite::ProjectorRelations,
        Suite::Chn,
        Suite::Newton,
        Suite::ProofSteps,
        Suite::CayleyHamilton,
        Suite::BraidedClosure,
        Suite::FullQmPowers,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Lemma1 => "lemma1",
            Suite::Forms => "forms",
            Suite::ProjectorRelations => "projector-relations",
            Suite::Chn => "chn",
            Suite::Newton => "newton",
            Suite::ProofSteps => "proof-steps",
            Suite::CayleyHamilton => "cayley-hamilton",
            Suite::BraidedClosure => "braided-closure",
            Suite::FullQmPowers => "full-qm-powers",
        }
    }

    /// Parses a comma-separated list; `all` selects every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        if out.is_empty() {
            return Err(Error::Parse("no suites selected".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// A full run: pair, degree bound and selected suites.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub pair: PairConfig,
    pub max_degree: usize,
    pub suites: Vec<Suite>,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { pair: PairConfig::default(), max_degree: 4, suites: Suite::ALL.to_vec(), out: None }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_degree == 0 {
            return Err(Error::InvalidParameter("max_degree must be at least 1".into()));
        }
        if self.suites.is_empty() {
            return Err(Error::InvalidParameter("no suites selected".into()));
        }
        Ok(())
    }
}

/// Reports of a run in a fixed order, and the resulting exit status.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub reports: Vec<VerificationReport>,
}

impl RunOutcome {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.reports).expect("serializable")
    }

    /// JSON with timing fields zeroed.
    pub fn to_json_untimed(&self) -> String {
        let reports: Vec<_> = self.reports.iter().cloned().map(|mut r| {
            r.elapsed_ms = 0;
            r
        }).collect();
        serde_json::to_string_pretty(&reports).expect("serializable")
    }
}

fn bool_report(check: &str, condition: &str, pass: bool, cfg: &PairConfig) -> VerificationReport {
    config_report(check, cfg).param("condition", condition).finish(usize::from(!pass), None)
}

fn config_report(check: &str, cfg: &PairConfig) -> ReportBuilder {
    ReportBuilder::new(check).param("n", cfg.n).param("q", cfg.q.to_string()).param("f", cfg.f_choice.to_string())
}

/// Individual axiom checks on the raw operators, so that a failing pair is
/// reported condition by condition.
fn axiom_reports(cfg: &PairConfig, r: &TensorOp, f: &TensorOp, q: &DeformationParam) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let flag = |res: Result<bool>| res.unwrap_or(false);
    out.push(bool_report("axioms", "braid-r", flag(rmatrix::check_braid(r)), cfg));
    out.push(bool_report("axioms", "braid-f", flag(rmatrix::check_braid(f)), cfg));
    out.push(bool_report("axioms", "compatibility", flag(rmatrix::check_compatibility(r, f)), cfg));
    out.push(bool_report("axioms", "hecke", rmatrix::hecke_split(r, q).is_ok(), cfg));
    let skew = rmatrix::skew_inverse(f);
    out.push(bool_report("axioms", "skew-invertible", skew.is_ok() && f.inverse().is_some(), cfg));
    let ftrace = rmatrix::PairData::new(r.clone(), f.clone(), q.clone())
        .and_then(|p| p.check_ftrace_identities())
        .map(|c| c.pass())
        .unwrap_or(false);
    out.push(bool_report("axioms", "ftrace-identities", ftrace, cfg));
    out
}

fn projector_report(pair: &RFPair, k: usize) -> Result<VerificationReport> {
    let report = ReportBuilder::for_pair("projector-tower", pair).param("f", pair.f_choice().to_string()).param("k", k);
    // both recursion forms and idempotency are enforced while the tower is built
    let a = pair.antisymmetrizer(k)?;
    let s = pair.symmetrizer(k)?;
    let mut failed = 0;
    failed += usize::from(!check_absorption(pair.r(), pair.q(), &a, ProjectorKind::Antisymmetrizer)?);
    failed += usize::from(!check_absorption(pair.r(), pair.q(), &s, ProjectorKind::Symmetrizer)?);
    if k == 2 {
        failed += usize::from(a != pair.split().a2) + usize::from(s != pair.split().s2);
    }
    let detail = format!("rank A = {}, rank S = {}", a.rank(), s.rank());
    Ok(report.finish(failed, Some(detail)))
}

fn height_report(pair: &RFPair) -> VerificationReport {
    let report = ReportBuilder::for_pair("axioms", pair).param("f", pair.f_choice().to_string()).param("condition", "height");
    if pair.is_even_of_height_n() {
        report.finish(0, None)
    } else {
        report.skip(format!("R is not even of height {}", pair.n()))
    }
}

type Task<'a> = Box<dyn Fn() -> Result<VerificationReport> + Send + Sync + 'a>;

fn error_report(err: Error) -> VerificationReport {
    let mut r = ReportBuilder::new("error").finish(1, Some(err.to_string()));
    r.pass = false;
    r
}

fn suite_tasks<'a>(suite: Suite, engine: &'a ChnEngine, max_degree: usize) -> Vec<Task<'a>> {
    let hq = engine.hq();
    let pair = hq.pair();
    let n = pair.n();
    let j_max = max_degree;
    let mut tasks: Vec<Task<'a>> = Vec::new();
    match suite {
        Suite::Axioms => {
            for k in 1..=j_max.max(2) {
                tasks.push(Box::new(move || projector_report(engine.hq().pair(), k)));
            }
        }
        Suite::Lemma1 => {
            let width = j_max.clamp(2, 4);
            tasks.push(Box::new(move || {
                let hq = engine.hq();
                let mut r = identities::check_lemma1(hq.pair(), hq.matrix(), width)?;
                r.params.insert("f".into(), hq.pair().f_choice().to_string().into());
                Ok(r)
            }));
        }
        Suite::Forms => tasks.push(Box::new(move || identities::check_equivalent_forms(engine.hq()))),
        Suite::ProjectorRelations => {
            for k in 1..=j_max {
                for i in 0..=j_max - k {
                    tasks.push(Box::new(move || identities::check_projector_relations(engine.hq(), k, i)));
                }
            }
        }
        Suite::Chn => {
            for j in 1..=j_max {
                for v in ChnVariant::ALL {
                    tasks.push(Box::new(move || chn::chn_check(engine, j, v)));
                }
            }
        }
        Suite::Newton => {
            for j in 1..=j_max {
                for v in NewtonVariant::ALL {
                    tasks.push(Box::new(move || chn::newton_check(engine, j, v)));
                    tasks.push(Box::new(move || chn::trace_linkage_check(engine, j, v)));
                }
            }
        }
        Suite::ProofSteps => {
            for j in 2..=j_max {
                for k in 1..j {
                    tasks.push(Box::new(move || chn::proof_step_check(engine, j, k)));
                }
            }
        }
        Suite::CayleyHamilton => {
            if n > j_max {
                let skip = move |check: &str| {
                    let r = ReportBuilder::for_pair(check, engine.hq().pair())
                        .param("f", engine.hq().pair().f_choice().to_string());
                    Ok(r.skip(format!("degree n = {n} exceeds max_degree = {j_max}")))
                };
                tasks.push(Box::new(move || skip("determinant")));
                tasks.push(Box::new(move || skip("cayley-hamilton")));
            } else {
                tasks.push(Box::new(move || chn::determinant_check(engine)));
                tasks.push(Box::new(move || chn::cayley_hamilton_check(engine)));
            }
        }
        Suite::BraidedClosure => {
            tasks.push(Box::new(move || identities::check_braided_closure(engine.hq().pair(), true)));
        }
        Suite::FullQmPowers => {
            for k in 1..=j_max {
                tasks.push(Box::new(move || chn::check_full_qm_powers(engine, k, true)));
            }
        }
    }
    tasks
}

/// Runs the selected suites. Checks run concurrently; reports come back in a
/// fixed order (suite, then parameters as enumerated).
pub fn run(config: &RunConfig) -> Result<RunOutcome> {
    config.validate()?;
    let cfg = &config.pair;
    let (r, f, q) = cfg.operators()?;
    let mut reports = Vec::new();
    if config.suites.contains(&Suite::Axioms) {
        reports.extend(axiom_reports(cfg, &r, &f, &q));
    }
    let pair = match RFPair::certify(r, f, q, cfg.f_choice) {
        Ok(pair) => pair,
        Err(err) => {
            if !config.suites.contains(&Suite::Axioms) {
                reports.push(config_report("axioms", cfg).finish(1, Some(err.to_string())));
            }
            for suite in config.suites.iter().filter(|s| **s != Suite::Axioms) {
                reports.push(config_report(suite.name(), cfg).skip("pair failed certification"));
            }
            return Ok(RunOutcome { reports });
        }
    };
    if config.suites.contains(&Suite::Axioms) {
        reports.push(height_report(&pair));
    }
    let engine = ChnEngine::new(Arc::new(HqMatrix::generic(Arc::new(pair))));
    let tasks: Vec<Task<'_>> =
        config.suites.iter().flat_map(|&s| suite_tasks(s, &engine, config.max_degree)).collect();
    let results: Vec<VerificationReport> =
        tasks.par_iter().map(|t| t().unwrap_or_else(error_report)).collect();
    reports.extend(results);
    Ok(RunOutcome { reports })
}

/// Runs and writes the JSON report to `config.out` when set.
pub fn run_and_write(config: &RunConfig) -> Result<RunOutcome> {
    let outcome = run(config)?;
    if let Some(path) = &config.out {
        std::fs::write(path, outcome.to_json())?;
    }
    Ok(outcome)
}

/// `R̂`, `F`, `Ψ` and `D` of a certified pair as one JSON object of operators.
pub fn operator_dump(pair: &RFPair) -> Result<String> {
    let mut map = serde_json::Map::new();
    for (name, op) in [("R", pair.r()), ("F", pair.f()), ("Psi", pair.psi()), ("D", pair.d())] {
        map.insert(name.into(), serde_json::from_str(&op.to_json())?);
    }
    Ok(serde_json::to_string_pretty(&serde_json::Value::Object(map))?)
}
