//! Itemized verification reports.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportEntry {
    pub tag: String,
    pub pass: bool,
    pub detail: String,
}

/// A list of named pass/fail checks, in the order they were run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn new() -> VerificationReport {
        VerificationReport::default()
    }

    pub fn record(&mut self, tag: &str, pass: bool, detail: &str) {
        self.entries.push(ReportEntry {
            tag: tag.to_string(),
            pass,
            detail: detail.to_string(),
        });
    }

    pub fn check(&mut self, tag: &str, pass: bool) {
        self.record(tag, pass, "");
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> Vec<&ReportEntry> {
        self.entries.iter().filter(|e| !e.pass).collect()
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }

    /// Turns the report into an error naming the first failed check.
    pub fn into_result(self) -> Result<(), String> {
        match self.entries.iter().find(|e| !e.pass) {
            None => Ok(()),
            Some(e) => Err(if e.detail.is_empty() {
                format!("check {} failed", e.tag)
            } else {
                format!("check {} failed: {}", e.tag, e.detail)
            }),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let status = if e.pass { "PASS" } else { "FAIL" };
            if e.detail.is_empty() {
                writeln!(f, "{}: {}", e.tag, status)?;
            } else {
                writeln!(f, "{}: {} ({})", e.tag, status, e.detail)?;
            }
        }
        Ok(())
    }
}
