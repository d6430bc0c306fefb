//! Validation reports and theorem-suite reports, each with a text and a JSON rendering.

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

/// One axiom's outcome. A failure carries basis indices that exhibit it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `axiom` as passing when `witness` is `None`.
    pub fn record(&mut self, axiom: &str, witness: Option<Vec<usize>>) {
        self.checks.push(AxiomCheck { axiom: axiom.to_string(), passed: witness.is_none(), witness });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.axiom.as_str()).collect()
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .checks
            .iter()
            .map(|c| match (&c.passed, &c.witness) {
                (true, _) => format!("{}: pass", c.axiom),
                (false, Some(w)) => format!("{}: FAIL at {:?}", c.axiom, w),
                (false, None) => format!("{}: FAIL", c.axiom),
            })
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(&self) -> String {
        match self {
            Status::Pass => "pass".into(),
            Status::Fail => "fail".into(),
            Status::Skipped(_) => "skipped: hypothesis".into(),
        }
    }
}

/// One line of a theorem-suite report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub check: String,
    pub fixture: String,
    pub degree: Option<usize>,
    pub lhs_dim: Option<usize>,
    pub rhs_dim: Option<usize>,
    pub status: Status,
    pub note: Option<String>,
}

impl Entry {
    /// An entry comparing two dimensions.
    pub fn dims(check: &str, fixture: &str, degree: Option<usize>, lhs: usize, rhs: usize) -> Self {
        Entry {
            check: check.into(),
            fixture: fixture.into(),
            degree,
            lhs_dim: Some(lhs),
            rhs_dim: Some(rhs),
            status: Status::from_bool(lhs == rhs),
            note: None,
        }
    }

    /// An entry for a yes/no property; the dimensions record the size of what was checked.
    pub fn property(check: &str, fixture: &str, degree: Option<usize>, dim: usize, ok: bool) -> Self {
        Entry {
            check: check.into(),
            fixture: fixture.into(),
            degree,
            lhs_dim: Some(dim),
            rhs_dim: Some(dim),
            status: Status::from_bool(ok),
            note: None,
        }
    }

    pub fn skipped(check: &str, fixture: &str, reason: &str) -> Self {
        Entry {
            check: check.into(),
            fixture: fixture.into(),
            degree: None,
            lhs_dim: None,
            rhs_dim: None,
            status: Status::Skipped(reason.into()),
            note: Some(reason.into()),
        }
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "check": self.check,
            "fixture": self.fixture,
            "degree": self.degree,
            "lhs_dim": self.lhs_dim,
            "rhs_dim": self.rhs_dim,
            "status": self.status.label(),
        });
        if let Some(n) = &self.note {
            v["note"] = json!(n);
        }
        v
    }
}

/// A sorted collection of suite entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<Entry>,
}

impl Report {
    pub fn new(mut entries: Vec<Entry>) -> Self {
        entries.sort_by(|a, b| {
            (&a.check, &a.fixture, a.degree).cmp(&(&b.check, &b.fixture, b.degree))
        });
        Report { entries }
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn failures(&self) -> Vec<&Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail).collect()
    }

    pub fn all_passed(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn to_json(&self) -> Value {
        let passed = self.entries.iter().filter(|e| e.status == Status::Pass).count();
        let failed = self.failures().len();
        let skipped = self.entries.len() - passed - failed;
        json!({
            "entries": self.entries.iter().map(Entry::to_json).collect::<Vec<_>>(),
            "summary": {"pass": passed, "fail": failed, "skipped": skipped},
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.entries.iter().map(|e| e.check.len()).max().unwrap_or(5).max(5);
        let fw = self.entries.iter().map(|e| e.fixture.len()).max().unwrap_or(7).max(7);
        out.push_str(&format!("{:<width$}  {:<fw$}  {:>6}  {:>5}  {:>5}  status\n", "check", "fixture", "degree", "lhs", "rhs"));
        let show = |x: Option<usize>| x.map_or("-".to_string(), |d| d.to_string());
        for e in &self.entries {
            let mut line = format!(
                "{:<width$}  {:<fw$}  {:>6}  {:>5}  {:>5}  {}",
                e.check,
                e.fixture,
                show(e.degree),
                show(e.lhs_dim),
                show(e.rhs_dim),
                e.status.label()
            );
            if let Some(n) = &e.note {
                line.push_str(&format!(" ({n})"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        let passed = self.entries.iter().filter(|e| e.status == Status::Pass).count();
        let failed = self.failures().len();
        out.push_str(&format!(
            "{} checks: {} pass, {} fail, {} skipped\n",
            self.entries.len(),
            passed,
            failed,
            self.entries.len() - passed - failed
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_sorts_entries() {
        let r = Report::new(vec![
            Entry::dims("b", "x", Some(1), 1, 1),
            Entry::dims("a", "y", Some(2), 0, 1),
            Entry::dims("a", "y", Some(0), 2, 2),
        ]);
        let names: Vec<_> = r.entries().iter().map(|e| (e.check.as_str(), e.degree)).collect();
        assert_eq!(names, vec![("a", Some(0)), ("a", Some(2)), ("b", Some(1))]);
        assert_eq!(r.failures().len(), 1);
    }

    #[test]
    fn validation_report_lists_failures() {
        let mut v = ValidationReport::new();
        v.record("assoc", None);
        v.record("counit", Some(vec![1]));
        assert!(!v.passed());
        assert_eq!(v.failing(), vec!["counit"]);
        assert_eq!(v.to_string(), "assoc: pass; counit: FAIL at [1]");
    }
}
