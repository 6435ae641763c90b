//! Verification reports: named integer checks plus an overall status.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    ConditionallyVerified,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::ConditionallyVerified => "CONDITIONAL",
            Status::Fail => "FAIL",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One named comparison. Boolean properties are encoded as expected `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: i64,
    pub computed: i64,
    pub pass: bool,
}

impl Check {
    pub fn equal(name: &str, expected: i64, computed: i64) -> Self {
        Check {
            name: name.to_string(),
            expected,
            computed,
            pass: expected == computed,
        }
    }

    pub fn flag(name: &str, holds: bool) -> Self {
        Self::equal(name, 1, holds as i64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: String,
    pub checks: Vec<Check>,
    /// Headline numbers (`r`, `h0`, ...).
    pub values: BTreeMap<String, i64>,
    /// Reasons the result holds only conditionally.
    pub conditions: Vec<String>,
    /// Free-form notes, e.g. an error that stopped the pipeline early.
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(id: impl Into<String>) -> Self {
        VerificationReport {
            id: id.into(),
            checks: Vec::new(),
            values: BTreeMap::new(),
            conditions: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    /// A report for a run that could not complete.
    pub fn failed(id: impl Into<String>, reason: impl fmt::Display) -> Self {
        let mut r = Self::new(id);
        r.checks.push(Check::flag("completed", false));
        r.notes.push(reason.to_string());
        r
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn set(&mut self, key: &str, value: i64) {
        self.values.insert(key.to_string(), value);
    }

    pub fn value(&self, key: &str) -> Option<i64> {
        self.values.get(key).copied()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn status(&self) -> Status {
        if !self.pass() {
            Status::Fail
        } else if !self.conditions.is_empty() {
            Status::ConditionallyVerified
        } else {
            Status::Pass
        }
    }

    /// JSON with sorted keys; timing is left out so output is reproducible.
    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "expected": c.expected,
                    "computed": c.computed,
                    "pass": c.pass,
                })
            })
            .collect();
        json!({
            "id": self.id,
            "status": self.status().as_str(),
            "pass": self.pass(),
            "checks": checks,
            "values": self.values,
            "conditions": self.conditions,
            "notes": self.notes,
        })
    }

    /// One line: `id  key=value ...  STATUS`.
    pub fn summary_line(&self) -> String {
        let vals: Vec<String> = self.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let failed: Vec<&str> = self
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect();
        let mut line = format!("{:<14} {}", self.id, vals.join(" "));
        if !failed.is_empty() {
            line.push_str(&format!("  failed: {}", failed.join(",")));
        }
        line.push_str(&format!("  {}", self.status()));
        line
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.id, self.status())?;
        for c in &self.checks {
            let mark = if c.pass { "ok" } else { "FAILED" };
            writeln!(
                f,
                "  {:<32} expected {:>8}  computed {:>8}  {}",
                c.name, c.expected, c.computed, mark
            )?;
        }
        for (k, v) in &self.values {
            writeln!(f, "  {k} = {v}")?;
        }
        for c in &self.conditions {
            writeln!(f, "  condition: {c}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
