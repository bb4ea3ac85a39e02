//! Machine-readable verification reports.

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One checked claim.
#[derive(Clone, Debug, Serialize)]
pub struct StepReport {
    pub step: u32,
    pub key: String,
    pub claim: String,
    pub expected: serde_json::Value,
    pub actual: serde_json::Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl StepReport {
    pub fn check<T: Serialize + PartialEq>(
        step: u32,
        key: impl Into<String>,
        claim: impl Into<String>,
        expected: T,
        actual: T,
    ) -> Self {
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        StepReport {
            step,
            key: key.into(),
            claim: claim.into(),
            expected: serde_json::to_value(expected).expect("serializable"),
            actual: serde_json::to_value(actual).expect("serializable"),
            status,
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }
}

/// A full pipeline run.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub config: serde_json::Value,
    pub steps: Vec<StepReport>,
}

impl VerificationReport {
    pub fn new(config: serde_json::Value) -> Self {
        VerificationReport { schema: SCHEMA_VERSION, config, steps: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.status == Status::Pass)
    }

    pub fn first_failure(&self) -> Option<&StepReport> {
        self.steps.iter().find(|s| s.status == Status::Fail)
    }
}
