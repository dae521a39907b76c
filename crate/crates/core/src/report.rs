//! Machine-readable outcomes of verification checks.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::rmatrix::PairData;

/// One check outcome. `pass` holds exactly when `residual_rank` is zero
/// (skipped checks pass with rank 0 and carry the reason in `detail`).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: BTreeMap<String, Value>,
    pub pass: bool,
    pub residual_rank: usize,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub skipped: bool,
}

impl VerificationReport {
    pub fn skipped(check: &str, params: BTreeMap<String, Value>, reason: impl Into<String>) -> Self {
        VerificationReport {
            check: check.to_string(),
            params,
            pass: true,
            residual_rank: 0,
            elapsed_ms: 0,
            detail: Some(format!("skipped: {}", reason.into())),
            skipped: true,
        }
    }

    /// JSON with the timing field zeroed, for reproducibility comparisons.
    pub fn to_json_untimed(&self) -> String {
        let mut r = self.clone();
        r.elapsed_ms = 0;
        serde_json::to_string(&r).expect("serializable")
    }
}

/// Accumulates parameters and times a check.
#[derive(Debug)]
pub struct ReportBuilder {
    check: String,
    params: BTreeMap<String, Value>,
    start: Instant,
}

impl ReportBuilder {
    pub fn new(check: &str) -> Self {
        ReportBuilder { check: check.to_string(), params: BTreeMap::new(), start: Instant::now() }
    }

    /// Seeds `n` and `q` from a pair.
    pub fn for_pair(check: &str, pair: &PairData) -> Self {
        Self::new(check).param("n", pair.n()).param("q", pair.q().to_string())
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn params(&self) -> &BTreeMap<String, Value> {
        &self.params
    }

    pub fn finish(self, residual_rank: usize, detail: Option<String>) -> VerificationReport {
        VerificationReport {
            check: self.check,
            params: self.params,
            pass: residual_rank == 0,
            residual_rank,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
            detail,
            skipped: false,
        }
    }

    pub fn skip(self, reason: impl Into<String>) -> VerificationReport {
        VerificationReport::skipped(&self.check, self.params, reason)
    }
}
