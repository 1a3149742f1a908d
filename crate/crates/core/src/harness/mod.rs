//! Seeded verification suites and their reports.
//!
//! Every suite is a sequence of named checks. A check passes, fails with a
//! [`Counterexample`], or is skipped when a generated instance does not meet
//! the hypothesis being exercised. Randomized blocks derive one generator
//! per trial from `seed ^ trial`, so parallel and sequential runs agree, and
//! the reported counterexample is always the one with the least trial number.

pub mod gen;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::Result;
use crate::presentation::Params;

pub use suites::{
    decomposition_trial, density_trial, kill_trial, renaming_trial, run_density_suite,
    run_example_suite, run_lemma_decomposition_suite, run_presentation_check, run_sc_check,
    run_theorem_check, DensityInfo,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trial: Option<u64>,
    pub inputs: BTreeMap<String, String>,
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<String>,
}

impl Counterexample {
    pub fn new(check: &str, detail: impl Into<String>) -> Self {
        Counterexample {
            check: check.to_string(),
            trial: None,
            inputs: BTreeMap::new(),
            detail: detail.into(),
            trace: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn trace(mut self, lines: Vec<String>) -> Self {
        self.trace = lines;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Box<Counterexample>),
    Skip,
}

impl Outcome {
    pub fn check(ok: bool, fail: impl FnOnce() -> Counterexample) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(Box::new(fail()))
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: BTreeMap<String, Value>,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    pub duration_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub stats: BTreeMap<String, Value>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn checks(&self) -> u64 {
        self.passed + self.failed + self.skipped
    }

    pub fn stat_u64(&self, key: &str) -> Option<u64> {
        self.stats.get(key).and_then(Value::as_u64)
    }

    /// Counts and first counterexample, without the wall time.
    pub fn fingerprint(&self) -> (u64, u64, u64, Option<Counterexample>) {
        (
            self.passed,
            self.failed,
            self.skipped,
            self.counterexample.clone(),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        writeln!(
            f,
            "[{}] {} ({}) passed={} failed={} skipped={} in {} ms",
            if self.ok() { "PASS" } else { "FAIL" },
            self.suite,
            params.join(" "),
            self.passed,
            self.failed,
            self.skipped,
            self.duration_ms
        )?;
        for (k, v) in &self.stats {
            writeln!(f, "  {k}: {v}")?;
        }
        if let Some(c) = &self.counterexample {
            match c.trial {
                Some(t) => writeln!(f, "  counterexample ({}, trial {t}): {}", c.check, c.detail)?,
                None => writeln!(f, "  counterexample ({}): {}", c.check, c.detail)?,
            }
            for (k, v) in &c.inputs {
                writeln!(f, "    {k} = {v}")?;
            }
            for line in &c.trace {
                writeln!(f, "    | {line}")?;
            }
        }
        Ok(())
    }
}

/// Accumulates outcomes in check order.
pub(crate) struct Tally {
    report: SuiteReport,
    started: Instant,
    parallel: bool,
}

impl Tally {
    pub(crate) fn new(suite: &str, parallel: bool) -> Self {
        Tally {
            report: SuiteReport {
                suite: suite.to_string(),
                params: BTreeMap::new(),
                passed: 0,
                failed: 0,
                skipped: 0,
                duration_ms: 0,
                counterexample: None,
                stats: BTreeMap::new(),
            },
            started: Instant::now(),
            parallel,
        }
    }

    pub(crate) fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.report.params.insert(key.to_string(), value.into());
    }

    pub(crate) fn stat(&mut self, key: &str, value: impl Into<Value>) {
        self.report.stats.insert(key.to_string(), value.into());
    }

    pub(crate) fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Pass => self.report.passed += 1,
            Outcome::Skip => self.report.skipped += 1,
            Outcome::Fail(c) => {
                self.report.failed += 1;
                if self.report.counterexample.is_none() {
                    self.report.counterexample = Some(*c);
                }
            }
        }
    }

    /// Runs `trial` for `0..trials`, in parallel when enabled, and records
    /// the outcomes in trial order. Returns the per-trial payloads.
    pub(crate) fn trials<T, F>(&mut self, trials: u64, trial: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> (Outcome, T) + Sync + Send,
    {
        let results: Vec<(Outcome, T)> = if self.parallel {
            (0..trials).into_par_iter().map(&trial).collect()
        } else {
            (0..trials).map(&trial).collect()
        };
        let mut payloads = Vec::with_capacity(results.len());
        for (t, (outcome, payload)) in results.into_iter().enumerate() {
            let outcome = match outcome {
                Outcome::Fail(mut c) => {
                    c.trial = Some(t as u64);
                    Outcome::Fail(c)
                }
                other => other,
            };
            self.record(outcome);
            payloads.push(payload);
        }
        payloads
    }

    pub(crate) fn finish(mut self) -> SuiteReport {
        self.report.duration_ms = self.started.elapsed().as_millis() as u64;
        self.report
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Suite {
    SmallCancellation,
    Theorem,
    LemmaDecomposition,
    Density,
    SemigroupExample,
}

/// Everything a suite run depends on. Fields a suite does not use are ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub k: u32,
    pub max_index: u32,
    pub m: u32,
    pub trials: u64,
    pub seed: u64,
    pub max_len: usize,
    pub parallel: bool,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig {
            suite,
            k: 8,
            max_index: 20,
            m: 5,
            trials: 200,
            seed: 0,
            max_len: 40,
            parallel: true,
        }
    }

    pub fn run(&self) -> Result<SuiteReport> {
        let params = || Params::new(self.k);
        match self.suite {
            Suite::SmallCancellation => suites::sc_check(&params()?, self.max_index),
            Suite::Theorem => suites::theorem_check(&params()?, self.max_index),
            Suite::LemmaDecomposition => suites::lemma_decomposition(
                &params()?,
                self.m,
                self.trials,
                self.seed,
                self.max_len,
                self.parallel,
            ),
            Suite::Density => suites::density(&params()?, self.trials, self.seed, self.parallel),
            Suite::SemigroupExample => {
                suites::example(self.trials, self.seed, self.max_index, self.parallel)
            }
        }
    }
}
