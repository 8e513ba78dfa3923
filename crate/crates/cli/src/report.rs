use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// One failed check with enough context to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub case: String,
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    pub fn new(case: impl Into<String>, inputs: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        Failure { case: case.into(), inputs: inputs.into(), expected: expected.to_string(), actual: actual.to_string() }
    }
}

/// Outcome of a verification suite.
///
/// `failures` is empty exactly when the suite passed. Metrics hold
/// suite-specific measurements such as convergence gaps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub wall_time_ms: u64,
    #[serde(default)]
    pub metrics: BTreeMap<String, String>,
}

impl VerificationReport {
    pub fn empty(suite: impl Into<String>) -> Self {
        VerificationReport { suite: suite.into(), cases: 0, failures: Vec::new(), wall_time_ms: 0, metrics: BTreeMap::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn with_time(mut self, elapsed: Duration) -> Self {
        self.wall_time_ms = elapsed.as_millis() as u64;
        self
    }

    pub fn metric(mut self, key: impl Into<String>, value: impl fmt::Display) -> Self {
        self.metrics.insert(key.into(), value.to_string());
        self
    }

    /// Folds `other` into `self`, prefixing its failures and metrics with its suite name.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.cases += other.cases;
        self.wall_time_ms += other.wall_time_ms;
        for mut f in other.failures {
            f.case = format!("{}/{}", other.suite, f.case);
            self.failures.push(f);
        }
        for (k, v) in other.metrics {
            self.metrics.insert(format!("{}/{}", other.suite, k), v);
        }
    }

    pub fn merged(suite: impl Into<String>, parts: impl IntoIterator<Item = VerificationReport>) -> Self {
        let mut out = VerificationReport::empty(suite);
        for p in parts {
            out.absorb(p);
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "suite {}: {} cases, {} failures, {} ms\n",
            self.suite,
            self.cases,
            self.failures.len(),
            self.wall_time_ms
        );
        for (k, v) in &self.metrics {
            s.push_str(&format!("  {k} = {v}\n"));
        }
        for f in &self.failures {
            s.push_str(&format!("  FAIL {} [{}]: expected {}, got {}\n", f.case, f.inputs, f.expected, f.actual));
        }
        s
    }
}

/// Runs `check` on every item in parallel and gathers failures sorted by case key.
///
/// `check` returns the failures of one case (usually zero or one).
pub fn run_cases<T, F>(suite: &str, items: Vec<T>, check: F) -> VerificationReport
where
    T: Send,
    F: Fn(T) -> Vec<Failure> + Sync + Send,
{
    let start = std::time::Instant::now();
    let cases = items.len();
    let mut failures: Vec<Failure> = items.into_par_iter().flat_map_iter(&check).collect();
    failures.sort_by(|a, b| a.case.cmp(&b.case).then_with(|| a.inputs.cmp(&b.inputs)));
    VerificationReport { suite: suite.into(), cases, failures, wall_time_ms: 0, metrics: BTreeMap::new() }.with_time(start.elapsed())
}
