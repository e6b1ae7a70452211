//! Verification reports and run configuration.
//!
//! JSON keys are exactly the field names below and are stable across runs.
//! Timing fields (`elapsed_ms`) are the only nondeterministic content.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Pass,
    Fail,
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub id: String,
    pub relation: String,
    pub status: CaseStatus,
    pub elapsed_ms: u64,
    pub peak_len: usize,
    /// Raw witness words (left and right sides, or the offending images)
    /// for failing cases.
    pub witness: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub indeterminate: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteParams {
    pub n: Option<usize>,
    pub r: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: SuiteParams,
    pub cases: Vec<CaseResult>,
    pub summary: Summary,
}

/// Exit code when every case passes.
pub const EXIT_PASS: i32 = 0;
/// Exit code when at least one case fails.
pub const EXIT_FAIL: i32 = 1;
/// Exit code when nothing fails but at least one case is indeterminate.
pub const EXIT_INDETERMINATE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

impl VerificationReport {
    pub fn new(suite: &str, params: SuiteParams) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            params,
            cases: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, case: CaseResult) {
        self.cases.push(case);
        self.recount();
    }

    pub fn extend(&mut self, cases: impl IntoIterator<Item = CaseResult>) {
        self.cases.extend(cases);
        self.recount();
    }

    /// Sort cases by id and recompute the summary.
    pub fn finalize(mut self) -> Self {
        self.cases.sort_by(|a, b| a.id.cmp(&b.id));
        self.recount();
        self
    }

    fn recount(&mut self) {
        let mut s = Summary { total: self.cases.len(), ..Summary::default() };
        for c in &self.cases {
            match c.status {
                CaseStatus::Pass => s.pass += 1,
                CaseStatus::Fail => s.fail += 1,
                CaseStatus::Indeterminate => s.indeterminate += 1,
            }
        }
        self.summary = s;
    }

    pub fn all_pass(&self) -> bool {
        self.summary.pass == self.summary.total
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            EXIT_FAIL
        } else if self.summary.indeterminate > 0 {
            EXIT_INDETERMINATE
        } else {
            EXIT_PASS
        }
    }

    pub fn find(&self, id: &str) -> Option<&CaseResult> {
        self.cases.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with every timing field zeroed, for replay comparisons.
    pub fn to_json_untimed(&self) -> String {
        let mut r = self.clone();
        for c in &mut r.cases {
            c.elapsed_ms = 0;
        }
        r.to_json()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let status = match c.status {
                CaseStatus::Pass => "PASS",
                CaseStatus::Fail => "FAIL",
                CaseStatus::Indeterminate => "INDETERMINATE",
            };
            let _ = write!(
                out,
                "{status:<13} {} {}  [{} ms, peak {}]",
                c.id, c.relation, c.elapsed_ms, c.peak_len
            );
            if let Some(note) = &c.note {
                let _ = write!(out, "  ({note})");
            }
            out.push('\n');
            for w in &c.witness {
                let _ = writeln!(out, "    witness: {w}");
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{}: {} cases, {} pass, {} fail, {} indeterminate",
            self.suite, s.total, s.pass, s.fail, s.indeterminate
        );
        out
    }

    pub fn emit(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Text => self.to_text(),
        }
    }
}

/// Resource limits for one verification case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Wall-clock limit per case, in milliseconds.
    pub case_ms: u64,
    /// Largest intermediate word (in sigma letters) a case may build.
    pub max_len: usize,
    /// Longest window tried by the word simplifier.
    pub window: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { case_ms: 120_000, max_len: 2_000_000, window: 8 }
    }
}

impl Budget {
    /// The generous profile used for the largest parameter sets.
    pub fn extended() -> Self {
        Budget { case_ms: 1_800_000, max_len: 20_000_000, window: 8 }
    }

    pub fn deadline(&self) -> Deadline {
        Deadline { start: Instant::now(), limit: Duration::from_millis(self.case_ms) }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Deadline {
    start: Instant,
    limit: Duration,
}

impl Deadline {
    pub fn expired(&self) -> bool {
        self.start.elapsed() > self.limit
    }

    pub fn elapsed_ms(&self) -> u64 {
        self.start.elapsed().as_millis() as u64
    }
}

/// Everything that controls a suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub budget: Budget,
    pub seed: u64,
    pub format: OutputFormat,
    pub cache_path: Option<std::path::PathBuf>,
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            budget: Budget::default(),
            seed: 0x5eed,
            format: OutputFormat::Text,
            cache_path: None,
            jobs: 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn case(id: &str, status: CaseStatus) -> CaseResult {
        CaseResult {
            id: id.into(),
            relation: "x = x".into(),
            status,
            elapsed_ms: 3,
            peak_len: 1,
            witness: vec![],
            note: None,
        }
    }

    #[test]
    fn empty_report_json() {
        let r = VerificationReport::new("purebraid", SuiteParams { n: Some(3), r: None });
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["cases"].as_array().unwrap().len(), 0);
        assert_eq!(v["summary"]["total"], 0);
        assert_eq!(v["summary"]["pass"], 0);
        assert_eq!(r.exit_code(), EXIT_PASS);
    }

    #[test]
    fn exit_codes() {
        let mut r = VerificationReport::new("t", SuiteParams::default());
        r.push(case("a", CaseStatus::Pass));
        assert_eq!(r.exit_code(), EXIT_PASS);
        r.push(case("b", CaseStatus::Indeterminate));
        assert_eq!(r.exit_code(), EXIT_INDETERMINATE);
        assert!(r.to_json().contains("\"indeterminate\""));
        r.push(case("c", CaseStatus::Fail));
        assert_eq!(r.exit_code(), EXIT_FAIL);
        assert_eq!(r.summary, Summary { total: 3, pass: 1, fail: 1, indeterminate: 1 });
    }

    #[test]
    fn finalize_sorts_and_untimed_json_is_stable() {
        let mut r = VerificationReport::new("t", SuiteParams::default());
        r.push(case("b", CaseStatus::Pass));
        r.push(case("a", CaseStatus::Pass));
        let r = r.finalize();
        assert_eq!(r.cases[0].id, "a");
        let mut r2 = r.clone();
        r2.cases[0].elapsed_ms = 999;
        assert_eq!(r.to_json_untimed(), r2.to_json_untimed());
    }
}
