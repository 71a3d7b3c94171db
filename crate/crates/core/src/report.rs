//! Structured law reports and suite run reports.
//!
//! Checkers never return bare booleans: each law gets a named pass/fail
//! entry with the first differing matrix coordinate, so a failure can be
//! traced to the violated equation.

use crate::linalg::Morphism;
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};

/// Location and values of the first entry at which two sides of a law differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryMismatch {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

/// One checked law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawCheck {
    pub law: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<EntryMismatch>,
}

/// Outcome of running a family of laws against one structure.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn new() -> Self {
        LawReport { checks: Vec::new() }
    }

    /// Compares both sides of a law exactly and records the outcome.
    pub fn check_eq<S: Scalar>(&mut self, law: &str, lhs: &Morphism<S>, rhs: &Morphism<S>) {
        let mismatch = lhs.first_difference(rhs).map(|(row, col)| {
            let in_range = row < lhs.rows() && col < lhs.cols() && row < rhs.rows() && col < rhs.cols();
            EntryMismatch {
                row,
                col,
                lhs: if in_range { lhs.get(row, col).render() } else { format!("{}x{}", lhs.rows(), lhs.cols()) },
                rhs: if in_range { rhs.get(row, col).render() } else { format!("{}x{}", rhs.rows(), rhs.cols()) },
            }
        });
        self.checks.push(LawCheck { law: law.into(), passed: mismatch.is_none(), mismatch });
    }

    pub fn check_bool(&mut self, law: &str, passed: bool) {
        self.checks.push(LawCheck { law: law.into(), passed, mismatch: None });
    }

    pub fn merge_prefixed(&mut self, prefix: &str, other: LawReport) {
        for mut check in other.checks {
            check.law = format!("{prefix}{}", check.law);
            self.checks.push(check);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn law(&self, name: &str) -> Option<&LawCheck> {
        self.checks.iter().find(|c| c.law == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// A single instance that failed, with every law it violated.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceFailure {
    pub instance: String,
    pub laws: Vec<LawCheck>,
}

/// A skipped instance and the reason.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SkipRecord {
    pub instance: String,
    pub reason: String,
}

/// Machine-readable outcome of one verification suite.
///
/// Invariant: `passed + failed.len() + skipped.len() == instances`.
/// `wall_time_secs` is kept out of the serialized form unless explicitly
/// requested so that rerun reports are byte-identical.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub suite: String,
    pub instances: usize,
    pub passed: usize,
    pub failed: Vec<InstanceFailure>,
    pub skipped: Vec<SkipRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_secs: Option<f64>,
}

impl RunReport {
    pub fn consistent(&self) -> bool {
        self.passed + self.failed.len() + self.skipped.len() == self.instances
    }

    pub fn ok(&self) -> bool {
        self.failed.is_empty()
    }
}

/// Accumulates per-instance outcomes into a [`RunReport`].
pub struct SuiteBuilder {
    suite: String,
    instances: usize,
    passed: usize,
    failed: Vec<InstanceFailure>,
    skipped: Vec<SkipRecord>,
    start: std::time::Instant,
}

impl SuiteBuilder {
    pub fn new(suite: &str) -> Self {
        SuiteBuilder {
            suite: suite.into(),
            instances: 0,
            passed: 0,
            failed: Vec::new(),
            skipped: Vec::new(),
            start: std::time::Instant::now(),
        }
    }

    pub fn pass(&mut self, _instance: &str) {
        self.instances += 1;
        self.passed += 1;
    }

    pub fn fail(&mut self, instance: &str, laws: Vec<LawCheck>) {
        self.instances += 1;
        self.failed.push(InstanceFailure { instance: instance.into(), laws });
    }

    pub fn fail_law(&mut self, instance: &str, law: &str) {
        self.fail(
            instance,
            vec![LawCheck { law: law.into(), passed: false, mismatch: None }],
        );
    }

    /// Records the instance as passed or failed from a law report.
    pub fn record(&mut self, instance: &str, report: &LawReport) {
        if report.passed() {
            self.pass(instance);
        } else {
            self.fail(instance, report.failures().cloned().collect());
        }
    }

    pub fn skip(&mut self, instance: &str, reason: &str) {
        self.instances += 1;
        self.skipped.push(SkipRecord { instance: instance.into(), reason: reason.into() });
    }

    pub fn finish(self, with_timing: bool) -> RunReport {
        RunReport {
            suite: self.suite,
            instances: self.instances,
            passed: self.passed,
            failed: self.failed,
            skipped: self.skipped,
            wall_time_secs: with_timing.then(|| self.start.elapsed().as_secs_f64()),
        }
    }
}
