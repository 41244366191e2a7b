//! Run configuration and machine-readable verification reports.
//!
//! Reports are deterministic given the configuration: two runs differ at
//! most in `wall_time_ms`, which `normalized` zeroes for byte comparison.

use serde::{Deserialize, Serialize};

use crate::cartan::CartanSpec;
use crate::verify::{CheckOutcome, Scope, DEFAULT_BUDGET};
use crate::AdmError;

fn default_budget() -> u64 {
    DEFAULT_BUDGET
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub datum: CartanSpec,
    pub mu: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<String>,
    pub checks: Vec<String>,
    pub scope: String,
    #[serde(default = "default_budget")]
    pub budget: u64,
    #[serde(default)]
    pub seed: u64,
}

impl RunConfig {
    pub fn from_json(s: &str) -> Result<Self, AdmError> {
        serde_json::from_str(s).map_err(|e| AdmError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub poset_id: String,
    pub check: String,
    pub scope: String,
    pub pass: bool,
    pub witnesses: Vec<String>,
    pub violations: Vec<String>,
    pub intervals_checked: usize,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn new(
        poset_id: String,
        check: &str,
        scope: Scope,
        outcome: CheckOutcome,
        wall_time_ms: u64,
    ) -> Self {
        VerificationReport {
            poset_id,
            check: check.to_string(),
            scope: scope.name().to_string(),
            pass: outcome.pass,
            witnesses: outcome.witnesses,
            violations: outcome.violations,
            intervals_checked: outcome.intervals_checked,
            wall_time_ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Copy with the timing zeroed, for byte-identical comparisons.
    pub fn normalized(&self) -> Self {
        VerificationReport {
            wall_time_ms: 0,
            ..self.clone()
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "{} {} [{}] on {}: {} intervals, {} witnesses, {} violations",
            if self.pass { "PASS" } else { "FAIL" },
            self.check,
            self.scope,
            self.poset_id,
            self.intervals_checked,
            self.witnesses.len(),
            self.violations.len()
        )
    }
}
