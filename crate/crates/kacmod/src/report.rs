//! Structured pass/fail reports for the verification harness.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The computation finished but contradicts a conjectural claim; this
    /// is evidence worth reporting, not a plain failure.
    FalsificationCandidate,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "FAIL"),
            CheckStatus::FalsificationCandidate => write!(f, "FALSIFICATION-CANDIDATE"),
        }
    }
}

/// One named check: `anchor` states the exact claim being tested, so a
/// report line is verifiable on its own. Timing appears in the text
/// rendering but is skipped in JSON, which must be byte-deterministic.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub anchor: String,
    pub status: CheckStatus,
    pub expected: String,
    pub actual: String,
    #[serde(skip)]
    pub millis: u128,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn has_falsification_candidate(&self) -> bool {
        self.checks
            .iter()
            .any(|c| c.status == CheckStatus::FalsificationCandidate)
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "[{}] {} ({} ms)", check.status, check.name, check.millis)?;
            if check.status != CheckStatus::Pass {
                writeln!(f, "    claim:    {}", check.anchor)?;
                writeln!(f, "    expected: {}", check.expected)?;
                writeln!(f, "    actual:   {}", check.actual)?;
            }
        }
        Ok(())
    }
}

/// Runs `body` and wraps its outcome in a [`CheckResult`], translating
/// falsification errors into the dedicated status.
pub fn run_check(
    name: &str,
    anchor: &str,
    body: impl FnOnce() -> crate::Result<(String, String, bool)>,
) -> CheckResult {
    let start = Instant::now();
    let (status, expected, actual) = match body() {
        Ok((expected, actual, ok)) => (
            if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            expected,
            actual,
        ),
        Err(err) if err.is_falsification() => (
            CheckStatus::FalsificationCandidate,
            "no falsification event".into(),
            err.to_string(),
        ),
        Err(err) => (CheckStatus::Fail, "no error".into(), err.to_string()),
    };
    CheckResult {
        name: name.to_string(),
        anchor: anchor.to_string(),
        status,
        expected,
        actual,
        millis: start.elapsed().as_millis(),
    }
}
