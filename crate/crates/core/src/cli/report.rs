//! JSON reports: one record per check, overall pass iff every record passes.

use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    /// The mathematical statement the check exercises.
    pub reference: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    #[serde(default)]
    pub detail: Value,
}

impl CheckRecord {
    /// Passes when the rendered values agree.
    pub fn equal(
        name: impl Into<String>,
        reference: &str,
        expected: impl fmt::Display,
        computed: impl fmt::Display,
    ) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        CheckRecord {
            name: name.into(),
            reference: reference.into(),
            pass: expected == computed,
            expected,
            computed,
            detail: Value::Null,
        }
    }

    pub fn holds(name: impl Into<String>, reference: &str, ok: bool) -> Self {
        Self::equal(name, reference, true, ok)
    }

    /// A computed quantity with nothing to compare against.
    pub fn info(name: impl Into<String>, reference: &str, computed: impl fmt::Display) -> Self {
        CheckRecord {
            name: name.into(),
            reference: reference.into(),
            expected: "-".into(),
            computed: computed.to_string(),
            pass: true,
            detail: Value::Null,
        }
    }

    pub fn failed(
        name: impl Into<String>,
        reference: &str,
        expected: impl fmt::Display,
        error: impl fmt::Display,
    ) -> Self {
        CheckRecord {
            name: name.into(),
            reference: reference.into(),
            expected: expected.to_string(),
            computed: format!("error: {error}"),
            pass: false,
            detail: Value::Null,
        }
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = detail;
        self
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        if self.expected == "-" {
            write!(f, "{status} {}: {}", self.name, self.computed)
        } else {
            write!(f, "{status} {}: expected {}, computed {}", self.name, self.expected, self.computed)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub instance: String,
    pub checks: Vec<CheckRecord>,
    pub pass: bool,
    pub timing: Timing,
}

impl ReportDocument {
    pub fn new(instance: impl Into<String>, checks: Vec<CheckRecord>, elapsed: Duration) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        ReportDocument {
            instance: instance.into(),
            checks,
            pass,
            timing: Timing { elapsed_ms: elapsed.as_secs_f64() * 1e3 },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for ReportDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.instance)?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        write!(
            f,
            "{}: {} checks, {failed} failed, {:.1} ms",
            if self.pass { "PASS" } else { "FAIL" },
            self.checks.len(),
            self.timing.elapsed_ms
        )
    }
}
