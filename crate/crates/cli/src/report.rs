//! Report records written by `e8kit suite`.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub expected: Value,
    pub got: Value,
    /// Wall-clock milliseconds; only filled when timings are requested, so
    /// that default reports are byte-identical across runs.
    pub runtime_ms: Option<f64>,
}

impl Check {
    /// Pass iff `expected == got`.
    pub fn compare(id: impl Into<String>, expected: impl Into<Value>, got: impl Into<Value>) -> Self {
        let (expected, got) = (expected.into(), got.into());
        let status = if expected == got { Status::Pass } else { Status::Fail };
        Check { id: id.into(), status, expected, got, runtime_ms: None }
    }

    pub fn truth(id: impl Into<String>, ok: bool) -> Self {
        Check::compare(id, true, ok)
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub overall: Status,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: u64, checks: Vec<Check>) -> Self {
        let overall = if checks.iter().all(Check::passed) { Status::Pass } else { Status::Fail };
        SuiteReport { suite: suite.to_string(), seed, checks, overall }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Collects checks, optionally timing each one.
pub struct Recorder {
    prefix: String,
    timings: bool,
    pub checks: Vec<Check>,
}

impl Recorder {
    pub fn new(prefix: &str, timings: bool) -> Self {
        Recorder { prefix: prefix.to_string(), timings, checks: Vec::new() }
    }

    /// Run `f` and record its check under `<prefix>.<id>`.
    pub fn run(&mut self, f: impl FnOnce() -> Check) {
        let start = Instant::now();
        let mut c = f();
        c.id = format!("{}.{}", self.prefix, c.id);
        if self.timings {
            c.runtime_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        }
        self.checks.push(c);
    }

    /// Like [`run`](Self::run) for a batch of checks sharing one timer.
    pub fn run_many(&mut self, f: impl FnOnce() -> Vec<Check>) {
        let start = Instant::now();
        let cs = f();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        for mut c in cs {
            c.id = format!("{}.{}", self.prefix, c.id);
            if self.timings {
                c.runtime_ms = Some(ms);
            }
            self.checks.push(c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_status() {
        let r = SuiteReport::new("x", 0, vec![Check::compare("a", 1, 1), Check::truth("b", true)]);
        assert!(r.passed());
        let r = SuiteReport::new("x", 0, vec![Check::compare("a", 1, 2)]);
        assert_eq!(r.overall, Status::Fail);
        assert!(r.to_json().ends_with("}\n"));
    }
}
