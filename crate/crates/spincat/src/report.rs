//! Suite reports: deterministic, machine-readable verification results.

use crate::axioms::CheckRecord;
use serde::Serialize;
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct ReportCheck {
    pub id: String,
    pub law: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl From<&CheckRecord> for ReportCheck {
    fn from(r: &CheckRecord) -> Self {
        ReportCheck {
            id: r.id.clone(),
            law: r.law.clone(),
            status: if r.pass { "pass" } else { "fail" }.into(),
            witness: r.witness.clone(),
        }
    }
}

/// One suite run. Serialization is byte-deterministic for fixed inputs:
/// field order is fixed, parameters are sorted, and no timing data is
/// included (the CLI prints wall time separately in text mode).
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub params: BTreeMap<String, u64>,
    pub overall: String,
    pub checks: Vec<ReportCheck>,
}

impl SuiteReport {
    pub fn new(suite: &str, params: &[(&str, u64)], records: &[CheckRecord]) -> Self {
        let overall = if records.iter().all(|r| r.pass) {
            "pass"
        } else {
            "fail"
        };
        SuiteReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
            overall: overall.into(),
            checks: records.iter().map(ReportCheck::from).collect(),
        }
    }

    pub fn pass(&self) -> bool {
        self.overall == "pass"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite {} [{}]\n", self.suite, self.overall));
        for c in &self.checks {
            let mark = if c.status == "pass" { "ok " } else { "FAIL" };
            out.push_str(&format!("  {} {}\n", mark, c.id));
            if let Some(w) = &c.witness {
                out.push_str(&format!("       witness: {}\n", w));
            }
        }
        out
    }
}

/// Render a list of reports as one deterministic JSON document.
pub fn reports_to_json(reports: &[SuiteReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}
