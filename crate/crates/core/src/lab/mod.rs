//! The verification engine: instance enumerators and samplers, named
//! check suites over those instance streams, counterexample search, and
//! JSON reports.
//!
//! A [`SuiteSpec`] names a suite, a universe-size bound, and a mode —
//! exhaustive (every instance with n ≤ max_n) or sampled (seeded
//! pseudo-random instances at exactly max_n). [`run_suite`] evaluates the
//! suite's predicate on every instance and returns a [`SuiteReport`]
//! whose failures carry fully serialized instances, so any failure can
//! be re-checked in isolation with [`replay_failure`].
//!
//! Reports are deterministic: instance streams are fixed by the suite spec
//! (sampling included), workers process contiguous index ranges, and
//! results merge in index order — the report does not depend on the
//! worker count. The canonical JSON form zeroes the wall-clock field,
//! making runs of the same suite spec byte-comparable.

pub mod enumerate;
pub mod sample;
pub mod search;
mod suites;

pub use search::{list_claims, search_counterexample, ClaimInfo, SearchStatus};
pub use suites::{list_suites, InstanceKind, SuiteInfo};

use crate::error::{Error, Result};
use crate::foundation::{SetFamily, Universe};
use crate::nests::Nest;
use crate::relations::Relation;
use crate::topology::Topology;
use serde::{Deserialize, Serialize};
use std::time::Duration;
#[cfg(not(target_arch = "wasm32"))]
use std::time::Instant;

/// Wall-clock wrapper: a real timer on native targets, a zero clock on
/// wasm, where `std::time::Instant` is unavailable — reports built there
/// carry `wall_time_ms: 0`, matching the canonical form.
#[derive(Debug, Clone, Copy)]
pub(crate) struct WallClock {
    #[cfg(not(target_arch = "wasm32"))]
    start: Instant,
}

impl WallClock {
    pub(crate) fn start() -> WallClock {
        WallClock {
            #[cfg(not(target_arch = "wasm32"))]
            start: Instant::now(),
        }
    }

    pub(crate) fn elapsed(&self) -> Duration {
        #[cfg(not(target_arch = "wasm32"))]
        {
            self.start.elapsed()
        }
        #[cfg(target_arch = "wasm32")]
        {
            Duration::ZERO
        }
    }

    pub(crate) fn elapsed_ms(&self) -> u64 {
        self.elapsed().as_millis() as u64
    }
}

/// Largest universe for sampled suite runs (topology materialization
/// bounds the predicates, not the samplers).
pub const MAX_SAMPLED: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteMode {
    Exhaustive,
    Sampled,
}

/// A reproducible description of one suite run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSpec {
    pub suite_id: String,
    pub max_n: usize,
    pub mode: SuiteMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl SuiteSpec {
    pub fn exhaustive(suite_id: &str, max_n: usize) -> SuiteSpec {
        SuiteSpec {
            suite_id: suite_id.to_string(),
            max_n,
            mode: SuiteMode::Exhaustive,
            samples: None,
            seed: None,
        }
    }

    pub fn sampled(suite_id: &str, max_n: usize, samples: u64, seed: u64) -> SuiteSpec {
        SuiteSpec {
            suite_id: suite_id.to_string(),
            max_n,
            mode: SuiteMode::Sampled,
            samples: Some(samples),
            seed: Some(seed),
        }
    }
}

/// A fully self-describing instance, as serialized into failure reports.
/// Labels, not indices, so the JSON is readable and replayable on its own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Instance {
    Nest {
        universe: Vec<String>,
        sets: Vec<Vec<String>>,
    },
    NestPair {
        universe: Vec<String>,
        left: Vec<Vec<String>>,
        right: Vec<Vec<String>>,
    },
    Relation {
        universe: Vec<String>,
        pairs: Vec<(String, String)>,
    },
    Family {
        universe: Vec<String>,
        sets: Vec<Vec<String>>,
    },
    Topology {
        universe: Vec<String>,
        opens: Vec<Vec<String>>,
    },
}

impl Instance {
    /// Rebuilds the concrete object, validating as the constructors do
    /// (a nest instance must be a nest, a topology instance a topology).
    pub(crate) fn prepare(&self) -> Result<Prepared> {
        match self {
            Instance::Nest { universe, sets } => {
                let u = Universe::new(universe.iter().cloned())?;
                let family = SetFamily::from_label_lists(u, sets)?;
                Ok(Prepared::Nest(Nest::try_from(family)?))
            }
            Instance::NestPair {
                universe,
                left,
                right,
            } => {
                let u = Universe::new(universe.iter().cloned())?;
                let l = Nest::try_from(SetFamily::from_label_lists(u.clone(), left)?)?;
                let r = Nest::try_from(SetFamily::from_label_lists(u, right)?)?;
                Ok(Prepared::NestPair(l, r))
            }
            Instance::Relation { universe, pairs } => {
                let u = Universe::new(universe.iter().cloned())?;
                let pairs: Vec<(&str, &str)> = pairs
                    .iter()
                    .map(|(x, y)| (x.as_str(), y.as_str()))
                    .collect();
                Ok(Prepared::Relation(Relation::from_label_pairs(u, &pairs)?))
            }
            Instance::Family { universe, sets } => {
                let u = Universe::new(universe.iter().cloned())?;
                Ok(Prepared::Family(SetFamily::from_label_lists(u, sets)?))
            }
            Instance::Topology { universe, opens } => {
                let u = Universe::new(universe.iter().cloned())?;
                let family = SetFamily::from_label_lists(u, opens)?;
                Ok(Prepared::Topology(Topology::from_opens(family)?))
            }
        }
    }
}

/// A concrete, evaluated instance. Internal: suites work on these;
/// reports serialize them as [`Instance`].
#[derive(Debug, Clone)]
pub(crate) enum Prepared {
    Nest(Nest),
    NestPair(Nest, Nest),
    Relation(Relation),
    Family(SetFamily),
    Topology(Topology),
}

impl Prepared {
    pub(crate) fn to_instance(&self) -> Instance {
        let labels = |u: &Universe| u.labels().to_vec();
        match self {
            Prepared::Nest(nest) => Instance::Nest {
                universe: labels(nest.universe()),
                sets: nest.family().member_label_lists(),
            },
            Prepared::NestPair(l, r) => Instance::NestPair {
                universe: labels(l.universe()),
                left: l.family().member_label_lists(),
                right: r.family().member_label_lists(),
            },
            Prepared::Relation(r) => Instance::Relation {
                universe: labels(r.universe()),
                pairs: r.label_pairs(),
            },
            Prepared::Family(f) => Instance::Family {
                universe: labels(f.universe()),
                sets: f.member_label_lists(),
            },
            Prepared::Topology(t) => Instance::Topology {
                universe: labels(t.universe()),
                opens: t.opens().member_label_lists(),
            },
        }
    }

    pub(crate) fn size(&self) -> usize {
        match self {
            Prepared::Nest(n) => n.universe().size(),
            Prepared::NestPair(l, _) => l.universe().size(),
            Prepared::Relation(r) => r.size(),
            Prepared::Family(f) => f.universe().size(),
            Prepared::Topology(t) => t.universe().size(),
        }
    }
}

/// What a predicate reports when an instance fails it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct FailureDetail {
    pub predicate: String,
    pub detail: String,
}

/// One failed instance in a report: the instance itself, the name of the
/// violated predicate, and a human-readable explanation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub instance: Instance,
    pub predicate: String,
    pub detail: String,
}

/// Outcome of a suite run or a counterexample search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite_id: String,
    pub config: SuiteSpec,
    pub instances_checked: u64,
    pub failures: Vec<Failure>,
    pub wall_time_ms: u64,
    /// Search runs only: whether the scan exhausted its range or ran out
    /// of budget. Absent for suite runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<SearchStatus>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Pretty JSON with the measured wall time.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Pretty JSON with the wall-time field zeroed — byte-identical for
    /// identical suite specs regardless of timing or worker count.
    pub fn to_canonical_json(&self) -> String {
        let mut canonical = self.clone();
        canonical.wall_time_ms = 0;
        canonical.to_json()
    }
}

pub(crate) type CheckFn = Box<dyn Fn(&Prepared) -> Option<FailureDetail> + Send + Sync>;

pub(crate) struct Harness {
    pub instances: Vec<Prepared>,
    pub check: CheckFn,
}

/// Runs a suite with the given worker count. The report is identical for
/// any `jobs ≥ 1`: workers take contiguous index ranges and failures are
/// concatenated in range order.
pub fn run_suite(spec: &SuiteSpec, jobs: usize) -> Result<SuiteReport> {
    let start = WallClock::start();
    let harness = suites::prepare(spec)?;
    let indexed = run_checks(&harness.instances, &harness.check, jobs);
    let failures = indexed
        .into_iter()
        .map(|(idx, d)| Failure {
            instance: harness.instances[idx].to_instance(),
            predicate: d.predicate,
            detail: d.detail,
        })
        .collect();
    Ok(SuiteReport {
        suite_id: spec.suite_id.clone(),
        config: spec.clone(),
        instances_checked: harness.instances.len() as u64,
        failures,
        wall_time_ms: start.elapsed_ms(),
        status: None,
    })
}

fn run_checks(instances: &[Prepared], check: &CheckFn, jobs: usize) -> Vec<(usize, FailureDetail)> {
    let total = instances.len();
    let jobs = jobs.max(1).min(total.max(1));
    // Reports are worker-count independent, so running single-threaded
    // where threads cannot spawn loses nothing.
    #[cfg(target_arch = "wasm32")]
    let jobs = 1.min(jobs);
    let evaluate_range = |range: std::ops::Range<usize>| -> Vec<(usize, FailureDetail)> {
        range
            .filter_map(|i| check(&instances[i]).map(|d| (i, d)))
            .collect()
    };
    if jobs == 1 {
        return evaluate_range(0..total);
    }
    let chunk = total.div_ceil(jobs);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                let lo = w * chunk;
                let hi = (lo + chunk).min(total);
                scope.spawn(move || evaluate_range(lo..hi))
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite worker panicked"))
            .collect()
    })
}

/// Re-evaluates one serialized instance against one suite's predicate
/// (or one search claim's finding test — search findings replay the same
/// way). Returns the reproduced failure, or `None` if the instance passes.
pub fn replay_failure(suite_id: &str, instance: &Instance) -> Result<Option<Failure>> {
    let prepared = instance.prepare()?;
    let detail = match suites::check_single(suite_id, &prepared) {
        Err(Error::UnknownSuite(_)) => search::check_single(suite_id, &prepared)?,
        other => other?,
    };
    Ok(detail.map(|d| Failure {
        instance: instance.clone(),
        predicate: d.predicate,
        detail: d.detail,
    }))
}

pub(crate) fn unknown_suite(id: &str) -> Error {
    Error::UnknownSuite(id.to_string())
}
