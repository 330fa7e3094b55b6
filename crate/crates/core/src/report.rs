//! Case records and suite reports, with text and JSON renderings.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// One checked identity instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseRecord {
    pub id: String,
    pub status: Status,
    /// Pretty-printed residual (`"0"` on success for residual-style checks).
    pub residual: String,
}

impl CaseRecord {
    pub fn from_residual(id: String, ok: bool, residual: String) -> Self {
        CaseRecord { id, status: if ok { Status::Pass } else { Status::Fail }, residual }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: Vec<CaseRecord>,
    pub passed: usize,
    pub failed: usize,
    pub millis: u64,
    /// Findings that are reported but do not affect the status.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn new(name: impl Into<String>, mut cases: Vec<CaseRecord>, millis: u64) -> Self {
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = cases.iter().filter(|c| c.passed()).count();
        let failed = cases.len() - passed;
        SuiteReport { name: name.into(), cases, passed, failed, millis, notes: Vec::new() }
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    suites: &'a [SuiteReport],
}

pub fn render_json(suites: &[SuiteReport]) -> String {
    serde_json::to_string_pretty(&JsonReport { suites }).expect("report serializes")
}

pub fn render_text(suites: &[SuiteReport]) -> String {
    let mut out = String::new();
    for s in suites {
        let _ = writeln!(
            out,
            "suite {}: {}/{} passed, {} failed ({} ms)",
            s.name,
            s.passed,
            s.cases.len(),
            s.failed,
            s.millis
        );
        for c in &s.cases {
            let _ = writeln!(out, "  {:<4}  {}  residual: {}", c.status.as_str(), c.id, c.residual);
        }
        for n in &s.notes {
            let _ = writeln!(out, "  note: {n}");
        }
    }
    let failed: usize = suites.iter().map(|s| s.failed).sum();
    let total: usize = suites.iter().map(|s| s.cases.len()).sum();
    let _ = writeln!(out, "total: {}/{} passed", total - failed, total);
    out
}
