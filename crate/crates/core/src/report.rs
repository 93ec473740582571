//! Deterministic check reports shared by the verification suites and the CLI.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
    Error,
}

/// One verified statement. `claim` names the mathematical statement being
/// checked; the full claim index ships in the docs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub description: String,
    pub claim: String,
    pub status: CheckStatus,
    pub details: serde_json::Value,
}

impl CheckResult {
    pub fn new(
        id: &str,
        description: &str,
        claim: &str,
        ok: bool,
        details: serde_json::Value,
    ) -> CheckResult {
        CheckResult {
            id: id.to_string(),
            description: description.to_string(),
            claim: claim.to_string(),
            status: if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            details,
        }
    }

    pub fn error(id: &str, description: &str, claim: &str, message: String) -> CheckResult {
        CheckResult {
            id: id.to_string(),
            description: description.to_string(),
            claim: claim.to_string(),
            status: CheckStatus::Error,
            details: serde_json::json!({ "error": message }),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: u64,
    pub fail: u64,
    pub skipped: u64,
    pub error: u64,
}

/// Bounds shared by the suites; every field is echoed into the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteParams {
    /// Injectivity scan covers word lengths up to this bound.
    pub max_weight_length: usize,
    /// Ordered-model checks cover base dimensions 1..=this.
    pub max_ordered_set: usize,
    /// Tournament enumeration covers sizes 1..=this.
    pub max_tournament: usize,
    /// Symmetric-function degree bound.
    pub degree_bound: u32,
    /// Optional external group table included in the trichotomy scan.
    pub table_name: Option<String>,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            max_weight_length: 12,
            max_ordered_set: 6,
            max_tournament: 6,
            degree_bound: 6,
            table_name: None,
        }
    }
}

impl SuiteParams {
    /// The rigidity sweep is capped at length 8 regardless of the
    /// injectivity bound.
    pub fn rigidity_length(&self) -> usize {
        self.max_weight_length.min(8)
    }

    /// Trace-pairing checks on the associated algebra are capped at base
    /// dimension 5.
    pub fn max_etale(&self) -> usize {
        self.max_ordered_set.min(5)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub params: SuiteParams,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
    pub version: String,
}

impl Report {
    pub fn new(suite: &str, params: SuiteParams) -> Report {
        Report {
            suite: suite.to_string(),
            params,
            checks: vec![],
            summary: Summary::default(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        match check.status {
            CheckStatus::Pass => self.summary.pass += 1,
            CheckStatus::Fail => self.summary.fail += 1,
            CheckStatus::Skipped => self.summary.skipped += 1,
            CheckStatus::Error => self.summary.error += 1,
        }
        self.checks.push(check);
    }

    pub fn extend_from(&mut self, other: Report) {
        for check in other.checks {
            self.push(check);
        }
    }

    /// True iff every non-skipped check passed.
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {} (v{})\n", self.suite, self.version);
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "skip",
                CheckStatus::Error => "ERROR",
            };
            out.push_str(&format!("{status:5} {:40} {}\n", c.id, c.description));
        }
        out.push_str(&format!(
            "total: {} pass, {} fail, {} skipped, {} error\n",
            self.summary.pass, self.summary.fail, self.summary.skipped, self.summary.error
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_tallies_statuses() {
        let mut r = Report::new("demo", SuiteParams::default());
        r.push(CheckResult::new("a", "", "c", true, serde_json::json!({})));
        r.push(CheckResult::new("b", "", "c", false, serde_json::json!({})));
        r.push(CheckResult::error("c", "", "c", "boom".into()));
        assert_eq!(r.summary.pass, 1);
        assert_eq!(r.summary.fail, 1);
        assert_eq!(r.summary.error, 1);
        assert!(!r.all_passed());
    }

    #[test]
    fn json_round_trips() {
        let mut r = Report::new("demo", SuiteParams::default());
        r.push(CheckResult::new("a", "d", "c", true, serde_json::json!({"x": 1})));
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back.suite, "demo");
        assert_eq!(back.checks.len(), 1);
        assert_eq!(back.summary, r.summary);
    }

    #[test]
    fn text_has_one_line_per_check() {
        let mut r = Report::new("demo", SuiteParams::default());
        r.push(CheckResult::new("a", "d", "c", true, serde_json::json!({})));
        r.push(CheckResult::new("b", "d", "c", true, serde_json::json!({})));
        assert_eq!(r.to_text().lines().count(), 4);
    }

    #[test]
    fn derived_bounds() {
        let p = SuiteParams::default();
        assert_eq!(p.rigidity_length(), 8);
        assert_eq!(p.max_etale(), 5);
        let small = SuiteParams {
            max_weight_length: 4,
            max_ordered_set: 3,
            ..SuiteParams::default()
        };
        assert_eq!(small.rigidity_length(), 4);
        assert_eq!(small.max_etale(), 3);
    }
}
