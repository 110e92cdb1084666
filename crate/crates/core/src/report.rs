//! Verdicts and report records shared by the verifiers and the CLI.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;
use crate::ktype::{KTypeSum, TermDiff};
use crate::tensor::lr::CacheStats;

/// Bumped when the record layout changes.
pub const REPORT_SCHEMA: u32 = 1;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    /// Both sides vanish, as predicted.
    VanishMatch,
    Mismatch,
    Skipped,
}

/// Outcome of one check at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaReport {
    pub check: String,
    pub params: Value,
    pub verdict: Verdict,
    pub reason: Option<String>,
    pub diff: Vec<TermDiff>,
    pub cutoff: Option<u32>,
    /// Candidate `F` and degree for Hom-space checks.
    pub candidate: Option<String>,
    pub degree: Option<usize>,
    pub hom_dim: Option<u64>,
    pub details: Value,
}

impl GammaReport {
    pub fn new(check: &str, params: Value) -> Self {
        GammaReport {
            check: check.to_string(),
            params,
            verdict: Verdict::Skipped,
            reason: None,
            diff: Vec::new(),
            cutoff: None,
            candidate: None,
            degree: None,
            hom_dim: None,
            details: Value::Null,
        }
    }

    pub fn skipped(mut self, reason: impl Into<String>) -> Self {
        self.verdict = Verdict::Skipped;
        self.reason = Some(reason.into());
        self
    }

    /// Maps an engine error to a skipped point with its message as reason.
    pub fn from_error(self, err: &Error) -> Self {
        let kind = if err.is_guard() { "guard" } else { "invalid" };
        self.skipped(format!("{kind}: {err}"))
    }

    pub fn with_cutoff(mut self, cutoff: u32) -> Self {
        self.cutoff = Some(cutoff);
        self
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = details;
        self
    }

    /// Sets the verdict from a boolean. Mismatches always carry a diff; a
    /// placeholder entry is added when the caller supplied none.
    pub fn decide(mut self, ok: bool, vanishing: bool, reason: Option<String>) -> Self {
        self.verdict = match (ok, vanishing) {
            (true, true) => Verdict::VanishMatch,
            (true, false) => Verdict::Match,
            (false, _) => Verdict::Mismatch,
        };
        self.reason = reason;
        if !ok && self.diff.is_empty() {
            self.diff.push(TermDiff {
                ktype: self.reason.clone().unwrap_or_else(|| "value".into()),
                left: 0,
                right: 0,
            });
        }
        self
    }

    /// Compares two sums termwise.
    pub fn compare(mut self, left: &KTypeSum, right: &KTypeSum) -> Self {
        self.diff = left.diff(right);
        let ok = self.diff.is_empty();
        let vanishing = ok && left.is_empty();
        self.decide(ok, vanishing, None)
    }

    /// As [`compare`](Self::compare), for sums that are nonzero before
    /// truncation: two empty sides mean the cutoff is too small to say
    /// anything, and the point is skipped.
    pub fn compare_truncated(self, left: &KTypeSum, right: &KTypeSum) -> Self {
        if left.is_empty() && right.is_empty() {
            let c = self.cutoff.map_or("?".into(), |c| c.to_string());
            return self.skipped(format!("no K-types up to cutoff {c}"));
        }
        self.compare(left, right)
    }
}

/// One JSON line of a verification run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub schema: u32,
    pub check: String,
    pub params: Value,
    pub verdict: Verdict,
    pub reason: Option<String>,
    pub diff: Vec<TermDiff>,
    pub cutoff: Option<u32>,
    pub details: Value,
    pub elapsed_ms: u64,
    pub version: String,
    pub cache: CacheStats,
}

impl ReportRecord {
    pub fn from_report(r: GammaReport, elapsed_ms: u64, cache: CacheStats) -> Self {
        let mut details = r.details;
        if r.candidate.is_some() || r.hom_dim.is_some() {
            let extra = serde_json::json!({
                "candidate": r.candidate,
                "degree": r.degree,
                "hom_dim": r.hom_dim,
            });
            details = match details {
                Value::Null => extra,
                Value::Object(mut m) => {
                    if let Value::Object(e) = extra {
                        m.extend(e);
                    }
                    Value::Object(m)
                }
                other => serde_json::json!({ "value": other, "gamma": extra }),
            };
        }
        ReportRecord {
            schema: REPORT_SCHEMA,
            check: r.check,
            params: r.params,
            verdict: r.verdict,
            reason: r.reason,
            diff: r.diff,
            cutoff: r.cutoff,
            details,
            elapsed_ms,
            version: ENGINE_VERSION.to_string(),
            cache,
        }
    }
}

/// Verdict counts for the summary footer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub matched: usize,
    pub vanish_matched: usize,
    pub mismatched: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Match => self.matched += 1,
            Verdict::VanishMatch => self.vanish_matched += 1,
            Verdict::Mismatch => self.mismatched += 1,
            Verdict::Skipped => self.skipped += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.matched + self.vanish_matched + self.mismatched + self.skipped
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} points: {} MATCH, {} VANISH_MATCH, {} MISMATCH, {} SKIPPED",
            self.total(),
            self.matched,
            self.vanish_matched,
            self.mismatched,
            self.skipped
        )
    }
}
