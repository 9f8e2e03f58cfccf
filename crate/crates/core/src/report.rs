//! Structured pass/fail reports for axiom and identity checks.

use serde::Serialize;

use crate::linear::rational::format_rational;
use crate::linear::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    /// Records the matrix identity `lhs == rhs`.
    pub fn identity(&mut self, name: impl Into<String>, lhs: &Matrix, rhs: &Matrix) -> bool {
        let name = name.into();
        if (lhs.nrows(), lhs.ncols()) != (rhs.nrows(), rhs.ncols()) {
            self.checks.push(CheckResult {
                name,
                passed: false,
                violation: None,
                note: Some(format!(
                    "shape {}x{} vs {}x{}",
                    lhs.nrows(),
                    lhs.ncols(),
                    rhs.nrows(),
                    rhs.ncols()
                )),
            });
            return false;
        }
        let violation = lhs.first_mismatch(rhs).map(|m| Violation {
            row: m.row,
            col: m.col,
            residual: format_rational(&(&m.left - &m.right)),
            lhs: format_rational(&m.left),
            rhs: format_rational(&m.right),
        });
        let passed = violation.is_none();
        self.checks.push(CheckResult {
            name,
            passed,
            violation,
            note: None,
        });
        passed
    }

    pub fn condition(&mut self, name: impl Into<String>, passed: bool, note: Option<String>) -> bool {
        self.checks.push(CheckResult {
            name: name.into(),
            passed,
            violation: None,
            note,
        });
        passed
    }

    pub fn merge(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    /// Records `sub` as a single check that fails at its first failing entry.
    pub fn summarize(&mut self, name: impl Into<String>, sub: Report) -> bool {
        let name = name.into();
        match sub.checks.into_iter().find(|c| !c.passed) {
            None => self.condition(name, true, None),
            Some(bad) => {
                let note = match bad.note {
                    Some(n) => format!("{}: {n}", bad.name),
                    None => bad.name,
                };
                self.checks.push(CheckResult {
                    name,
                    passed: false,
                    violation: bad.violation,
                    note: Some(note),
                });
                false
            }
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.check(name)
            .unwrap_or_else(|| panic!("no check named {name:?} in report {:?}", self.subject))
            .passed
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{}\n", self.subject);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("  [{status}] {}", c.name));
            if let Some(v) = &c.violation {
                out.push_str(&format!(
                    " (first violation at ({}, {}): {} vs {}, residual {})",
                    v.row, v.col, v.lhs, v.rhs, v.residual
                ));
            }
            if let Some(n) = &c.note {
                out.push_str(&format!(" [{n}]"));
            }
            out.push('\n');
        }
        out
    }
}
