//! Verification suites: each suite expands into a list of checked
//! instances, and every instance yields one JSON report line.
//!
//! Instances run on a rayon pool (size from `MACDONALD_INTERP_THREADS`) and
//! reports come back in instance order, so a report depends only on the
//! suite, the bounds and the seed.

pub mod fixtures;
mod suites;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{BigRat, Ctx, PointSampler};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "MACDONALD_INTERP_THREADS";

/// Coefficient field an instance is checked over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Rational functions in `q` and `t`.
    Symbolic,
    /// Rationals, at a sampled point `(q0, t0)`.
    Specialized,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Symbolic => "symbolic",
            Mode::Specialized => "specialized",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub instance: String,
    pub mode: Mode,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}`; known suites: all, {list}", list = SUITES.join(", "))]
    UnknownSuite(String),
    #[error("invalid value for {0}: {1}")]
    Threads(&'static str, String),
}

/// Bounds and sampling for a run. `None` bounds fall back to each suite's
/// own defaults.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    pub max_n: Option<usize>,
    pub max_size: Option<i32>,
    /// Restrict to one coefficient mode.
    pub mode: Option<Mode>,
    /// Number of sampled points for specialized checks.
    pub points: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 7, max_n: None, max_size: None, mode: None, points: 5 }
    }
}

impl VerifyConfig {
    pub(crate) fn n(&self, default: usize) -> usize {
        self.max_n.unwrap_or(default)
    }

    pub(crate) fn size(&self, default: i32) -> i32 {
        self.max_size.unwrap_or(default)
    }

    pub(crate) fn wants(&self, mode: Mode) -> bool {
        self.mode.is_none_or(|m| m == mode)
    }

    /// The sampled `(q0, t0)` points; identical for every suite.
    pub(crate) fn sample_points(&self) -> Vec<Ctx<BigRat>> {
        let mut sampler = PointSampler::new(self.seed, 12);
        (0..self.points).map(|_| sampler.next_ctx()).collect()
    }

    pub(crate) fn sampler(&self, salt: u64) -> PointSampler {
        PointSampler::new(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15), 12)
    }
}

/// `Ok(None)` passes, `Ok(Some(witness))` fails, `Err` reports an error.
pub(crate) type Outcome = Result<Option<String>, String>;

pub(crate) struct Instance {
    name: String,
    mode: Mode,
    check: Box<dyn FnOnce() -> Outcome + Send>,
}

impl Instance {
    pub(crate) fn new(name: impl Into<String>, mode: Mode, check: impl FnOnce() -> Outcome + Send + 'static) -> Self {
        Instance { name: name.into(), mode, check: Box::new(check) }
    }
}

/// Every suite name, in the order `all` runs them.
pub const SUITES: [&str; 14] = [
    "golden",
    "counts",
    "weight-golden",
    "main-theorem",
    "characterization",
    "hecke-relations",
    "hecke-action",
    "packed-recursion",
    "extended-asep",
    "twoline-recursion",
    "pairing-order",
    "tableaux",
    "integrality",
    "factorization-q1",
];

fn build(suite: &str, cfg: &VerifyConfig) -> Result<Vec<Instance>, VerifyError> {
    use suites::*;
    Ok(match suite {
        "golden" => golden(cfg),
        "counts" => counts(cfg),
        "weight-golden" => weight_golden(cfg),
        "main-theorem" => main_theorem(cfg),
        "characterization" => characterization(cfg),
        "hecke-relations" => hecke_relations(cfg),
        "hecke-action" => hecke_action(cfg),
        "packed-recursion" => packed_recursion(cfg),
        "extended-asep" => extended_asep(cfg),
        "twoline-recursion" => twoline_recursion(cfg),
        "pairing-order" => pairing_order(cfg),
        "tableaux" => tableaux(cfg),
        "integrality" => integrality(cfg),
        "factorization-q1" => factorization_q1(cfg),
        other => return Err(VerifyError::UnknownSuite(other.to_string())),
    })
}

fn thread_pool() -> Result<rayon::ThreadPool, VerifyError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let n: usize = raw.trim().parse().map_err(|_| VerifyError::Threads(THREADS_ENV, raw.clone()))?;
        if n == 0 {
            return Err(VerifyError::Threads(THREADS_ENV, raw));
        }
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| VerifyError::Threads(THREADS_ENV, e.to_string()))
}

/// Run one suite, or every suite for `"all"`.
pub fn run(suite: &str, cfg: &VerifyConfig) -> Result<Vec<Report>, VerifyError> {
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let pool = thread_pool()?;
    let mut reports = Vec::new();
    for name in names {
        let instances = build(name, cfg)?;
        let batch: Vec<Report> = pool.install(|| {
            instances
                .into_par_iter()
                .map(|inst| {
                    let (status, witness) = match (inst.check)() {
                        Ok(None) => (Status::Pass, None),
                        Ok(Some(w)) => (Status::Fail, Some(w)),
                        Err(e) => (Status::Error, Some(e)),
                    };
                    Report { suite: name.to_string(), instance: inst.name, mode: inst.mode, status, witness }
                })
                .collect()
        });
        reports.extend(batch);
    }
    Ok(reports)
}

/// Summary of a suite run, for human-facing output.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

impl Tally {
    pub fn of(reports: &[Report]) -> Self {
        let mut t = Tally::default();
        for r in reports {
            match r.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Error => t.error += 1,
            }
        }
        t
    }

    pub fn all_pass(&self) -> bool {
        self.fail == 0 && self.error == 0 && self.pass > 0
    }
}

/// Run a suite and time it.
pub fn run_timed(suite: &str, cfg: &VerifyConfig) -> Result<(Vec<Report>, std::time::Duration), VerifyError> {
    let start = Instant::now();
    let reports = run(suite, cfg)?;
    Ok((reports, start.elapsed()))
}
