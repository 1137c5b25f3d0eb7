use crate::caps::Caps;
use serde_json::{json, Value};
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped(_) => "skipped",
        }
    }

    /// `Pass` when `ok`, `Fail` otherwise.
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    /// Data needed to replay a failure, or the decisive values of a pass.
    pub witness: Option<Value>,
    /// The statement being checked.
    pub anchor: String,
}

impl CheckResult {
    pub fn new(name: &str, anchor: &str, status: Status, witness: Option<Value>) -> CheckResult {
        CheckResult { name: name.into(), status, witness, anchor: anchor.into() }
    }

    pub fn skipped(name: &str, anchor: &str, reason: impl Into<String>) -> CheckResult {
        CheckResult::new(name, anchor, Status::Skipped(reason.into()), None)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub ring: String,
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub verdict: Option<String>,
    pub caps: Caps,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

impl VerificationReport {
    pub fn new(ring: impl Into<String>, suite: &str, caps: Caps) -> VerificationReport {
        VerificationReport { ring: ring.into(), suite: suite.into(), checks: Vec::new(), verdict: None, caps }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped(_) => s.skipped += 1,
            }
        }
        s
    }

    pub fn has_failures(&self) -> bool {
        self.summary().fail > 0
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = json!({
                    "name": c.name,
                    "status": c.status.label(),
                    "witness": c.witness.clone().unwrap_or(Value::Null),
                    "anchor": c.anchor,
                });
                if let Status::Skipped(reason) = &c.status {
                    v["reason"] = json!(reason);
                }
                v
            })
            .collect();
        json!({
            "ring": self.ring,
            "suite": self.suite,
            "checks": checks,
            "summary": self.summary(),
            "verdict": self.verdict,
            "engine": format!("trace-lab {ENGINE_VERSION}"),
            "caps": self.caps,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "ring: {}", self.ring);
        let _ = writeln!(out, "suite: {}", self.suite);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped(_) => "SKIP",
            };
            let _ = write!(out, "  {tag}  {}  [{}]", c.name, c.anchor);
            if let Status::Skipped(reason) = &c.status {
                let _ = write!(out, "  reason: {reason}");
            }
            if let Some(w) = &c.witness {
                let _ = write!(out, "  witness: {w}");
            }
            out.push('\n');
        }
        let s = self.summary();
        let _ = writeln!(out, "summary: {} pass, {} fail, {} skipped", s.pass, s.fail, s.skipped);
        if let Some(v) = &self.verdict {
            let _ = writeln!(out, "verdict: {v}");
        }
        out
    }
}

/// Deterministic serialization of a report.
pub fn emit_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => serde_json::to_string_pretty(&report.to_json()).expect("report serializes") + "\n",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite() {
        let r = VerificationReport::new("F_2", "lp", Caps::default());
        let v = r.to_json();
        assert_eq!(v["summary"], json!({"pass": 0, "fail": 0, "skipped": 0}));
        assert_eq!(v["checks"], json!([]));
        assert!(emit_report(&r, Format::Text).contains("summary: 0 pass, 0 fail, 0 skipped"));
    }

    #[test]
    fn summary_tallies_statuses() {
        let mut r = VerificationReport::new("R", "identities", Caps::default());
        r.push(CheckResult::new("a", "x", Status::Pass, None));
        r.push(CheckResult::new("b", "x", Status::Fail, Some(json!({"E": "0 | 3"}))));
        r.push(CheckResult::skipped("c", "x", "cap"));
        assert_eq!(r.summary(), Summary { pass: 1, fail: 1, skipped: 1 });
        let v = r.to_json();
        assert_eq!(v["checks"][2]["status"], "skipped");
        assert_eq!(v["checks"][2]["reason"], "cap");
        assert_eq!(v["checks"][1]["witness"]["E"], "0 | 3");
        assert_eq!(emit_report(&r, Format::Json), emit_report(&r, Format::Json));
    }
}
