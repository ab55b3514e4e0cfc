//! Check reports: every pipeline stage appends entries carrying a stable id,
//! a one-line description of the identity checked, a status, and detail.

use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A verified computation that contradicts a catalogued display; the
    /// computed value is authoritative.
    Flag,
    Info,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Flag => "flag",
            CheckStatus::Info => "info",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckEntry {
    pub id: String,
    pub anchor: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct UnprojectionReport {
    pub title: String,
    pub seed: Option<u64>,
    pub entries: Vec<CheckEntry>,
    /// Set when a gate check failed and later stages were skipped.
    pub halted_at: Option<String>,
}

impl UnprojectionReport {
    pub fn new(title: &str, seed: Option<u64>) -> Self {
        UnprojectionReport {
            title: title.to_string(),
            seed,
            entries: Vec::new(),
            halted_at: None,
        }
    }

    pub fn push(&mut self, id: &str, anchor: &str, status: CheckStatus, detail: String) {
        self.entries.push(CheckEntry {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status,
            detail,
        });
    }

    pub fn check(&mut self, id: &str, anchor: &str, ok: bool, detail: String) -> bool {
        self.push(
            id,
            anchor,
            if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail,
        );
        ok
    }

    pub fn halt(&mut self, at: &str) {
        self.halted_at = Some(at.to_string());
    }

    pub fn passed(&self) -> bool {
        self.halted_at.is_none()
            && self
                .entries
                .iter()
                .all(|e| e.status != CheckStatus::Fail)
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.title);
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "# seed: {seed}");
        }
        for e in &self.entries {
            let _ = writeln!(out, "[{:<4}] {:<44} {}", e.status.as_str(), e.id, e.detail);
        }
        if let Some(at) = &self.halted_at {
            let _ = writeln!(out, "[halt] pipeline stopped after failing gate: {at}");
        }
        let _ = writeln!(
            out,
            "# result: {} ({} pass, {} fail, {} flagged)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.count(CheckStatus::Pass),
            self.count(CheckStatus::Fail),
            self.count(CheckStatus::Flag),
        );
        out
    }

    /// Flat key/value document, one block per check, blank-line separated.
    pub fn render_kv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "title: {}", self.title);
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed: {seed}");
        }
        let _ = writeln!(out, "result: {}", if self.passed() { "pass" } else { "fail" });
        for e in &self.entries {
            let _ = writeln!(out);
            let _ = writeln!(out, "id: {}", e.id);
            let _ = writeln!(out, "anchor: {}", e.anchor);
            let _ = writeln!(out, "status: {}", e.status.as_str());
            let _ = writeln!(out, "detail: {}", e.detail);
        }
        if let Some(at) = &self.halted_at {
            let _ = writeln!(out);
            let _ = writeln!(out, "halted_at: {at}");
        }
        out
    }
}
