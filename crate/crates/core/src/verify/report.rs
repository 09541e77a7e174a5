use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub claim: String,
    pub pass: bool,
    pub witness: Option<Value>,
}

/// Outcome of one suite. Failed checks always carry a witness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    started: Option<Instant>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            checks: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: 0,
            started: Some(Instant::now()),
        }
    }

    pub fn pass(&mut self, claim: impl Into<String>) {
        self.checks.push(CheckResult { claim: claim.into(), pass: true, witness: None });
    }

    /// A passing check that still records an illustrative example.
    pub fn pass_with(&mut self, claim: impl Into<String>, example: Value) {
        self.checks.push(CheckResult { claim: claim.into(), pass: true, witness: Some(example) });
    }

    pub fn fail(&mut self, claim: impl Into<String>, witness: Value) {
        self.checks.push(CheckResult { claim: claim.into(), pass: false, witness: Some(witness) });
    }

    /// Passes when `failure` is `None`.
    pub fn check(&mut self, claim: impl Into<String>, failure: Option<Value>) {
        match failure {
            None => self.pass(claim),
            Some(w) => self.fail(claim, w),
        }
    }

    /// Passes when `ok`; otherwise records `detail` as the witness.
    pub fn expect(&mut self, claim: impl Into<String>, ok: bool, detail: impl FnOnce() -> Value) {
        if ok {
            self.pass(claim);
        } else {
            self.fail(claim, detail());
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn find(&self, claim: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.claim == claim)
    }

    /// Appends another report's checks under a `suite/` prefix.
    pub fn absorb(&mut self, other: VerificationReport) {
        for mut c in other.checks {
            c.claim = format!("{}/{}", other.suite, c.claim);
            self.checks.push(c);
        }
        self.notes
            .extend(other.notes.into_iter().map(|n| format!("{}: {n}", other.suite)));
    }

    pub fn finish(mut self) -> Self {
        if let Some(t) = self.started.take() {
            self.elapsed_ms = t.elapsed().as_millis() as u64;
        }
        self
    }

    /// Human-readable form; leaves out timing so runs compare byte for byte.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let _ = writeln!(out, "suite {}: {passed}/{} checks pass", self.suite, self.checks.len());
        for c in &self.checks {
            let _ = writeln!(out, "  [{}] {}", if c.pass { "PASS" } else { "FAIL" }, c.claim);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "         {}", serde_json::to_string(w).unwrap_or_default());
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        out
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}
