//! Machine-readable verification reports.

use serde::{Deserialize, Serialize};

/// Stored failures are capped; `failure_count` keeps the true total.
pub const MAX_RECORDED: usize = 25;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub check: String,
    pub x: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub instance: String,
    pub suite: String,
    pub pairs_checked: usize,
    pub failure_count: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(instance: impl Into<String>, suite: impl Into<String>) -> Self {
        Report {
            instance: instance.into(),
            suite: suite.into(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn record(&mut self, failure: Failure) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED {
            self.failures.push(failure);
        }
    }

    /// Counts one check; records a failure when `expected != got`.
    pub fn check<T: PartialEq>(
        &mut self,
        check: &str,
        x: impl FnOnce() -> String,
        y: Option<String>,
        expected: &T,
        got: &T,
        render: impl Fn(&T) -> String,
    ) {
        self.pairs_checked += 1;
        if expected != got {
            self.record(Failure {
                check: check.to_string(),
                x: x(),
                y,
                expected: render(expected),
                got: render(got),
            });
        }
    }

    /// Folds another report's counts and failures into this one.
    pub fn merge(&mut self, other: Report) {
        self.pairs_checked += other.pairs_checked;
        for f in other.failures {
            if self.failures.len() < MAX_RECORDED {
                self.failures.push(f);
            }
        }
        self.failure_count += other.failure_count;
    }

    pub fn summary(&self) -> String {
        format!(
            "{} {}: {} checks, {} failures",
            self.instance, self.suite, self.pairs_checked, self.failure_count
        )
    }
}
