//! Sweep harness: drives every catalog member through every applicable
//! bound and aggregates per-stratum extremes, equality witnesses and
//! violations.
//!
//! A sweep walks orders `n` from the class minimum up to `n_max`; each
//! stratum enumerates its catalog (or draws its share of seeded random
//! graphs), runs [`check_bounds`] on every member — in parallel under the
//! `parallel` feature — and folds the outcomes in member order, so reports
//! are identical across runs and schedules. Violations are never capped or
//! dropped; certificate and witness lists are capped at
//! [`MAX_WITNESSES`] entries with full counts retained. Wall-clock time is
//! kept out of serialized reports so artifacts stay byte-identical.
//!
//! # Checkpoint layout
//!
//! `sweep_with_checkpoint` persists a versioned JSON file after each
//! completed stratum:
//!
//! ```text
//! {
//!   "version": 1,
//!   "class": "maximal_planar",   // sweep class tag
//!   "n_max": 10,
//!   "seed": 7,                   // random_connected only, else null
//!   "samples": 10000,            // random_connected only, else null
//!   "strata": [ ... ]            // completed Stratum values, ascending n
//! }
//! ```
//!
//! Resuming revalidates `version` and every option field, reuses the stored
//! strata, and recomputes only what is missing. A stratum is the checkpoint
//! granule: re-running a partial stratum is cheaper than serializing
//! enumeration internals.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bounds::{check_bounds, registry, BoundVerdict};
use crate::enumerate::{
    enumerate_maximal_outerplanar, enumerate_quadrangulations, enumerate_triangulations,
    random_connected,
};
use crate::exec;
use crate::graph::Graph;
use crate::rat::RatJson;
use thiserror::Error;

/// Cap on stored equality witnesses and extremal certificates per bound
/// (counts are exact; lists keep the first members in catalog order).
pub const MAX_WITNESSES: usize = 4;

/// Graph classes a sweep can cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepClass {
    MaximalOuterplanar,
    MaximalPlanar,
    Quadrangulation,
    RandomConnected,
}

impl SweepClass {
    pub const ALL: [SweepClass; 4] = [
        SweepClass::MaximalOuterplanar,
        SweepClass::MaximalPlanar,
        SweepClass::Quadrangulation,
        SweepClass::RandomConnected,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SweepClass::MaximalOuterplanar => "maximal_outerplanar",
            SweepClass::MaximalPlanar => "maximal_planar",
            SweepClass::Quadrangulation => "quadrangulation",
            SweepClass::RandomConnected => "random_connected",
        }
    }

    /// Inclusive order range this class supports.
    pub fn n_range(self) -> (usize, usize) {
        match self {
            SweepClass::MaximalOuterplanar => (3, 14),
            SweepClass::MaximalPlanar => (4, 10),
            SweepClass::Quadrangulation => (4, 9),
            SweepClass::RandomConnected => (2, 16),
        }
    }
}

impl fmt::Display for SweepClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SweepClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SweepClass::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                format!(
                    "unknown sweep class '{s}'; expected one of maximal_outerplanar, \
                     maximal_planar, quadrangulation, random_connected"
                )
            })
    }
}

/// What to sweep. `seed` and `samples` only matter for
/// [`SweepClass::RandomConnected`]; `samples` is the total draw count,
/// split evenly across orders `2 ..= n_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub class: SweepClass,
    pub n_max: usize,
    pub seed: u64,
    pub samples: usize,
}

impl SweepOptions {
    pub fn new(class: SweepClass, n_max: usize) -> Self {
        SweepOptions {
            class,
            n_max,
            seed: 0,
            samples: 10_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("n_max {n_max} is out of range for class {class}: supported {min} ≤ n ≤ {max}")]
    InvalidRange {
        class: SweepClass,
        n_max: usize,
        min: usize,
        max: usize,
    },
    #[error("checkpoint version {found} is not supported (expected {expected})")]
    CheckpointVersion { found: u32, expected: u32 },
    #[error("checkpoint does not match this sweep: {field} differs")]
    CheckpointMismatch { field: &'static str },
    #[error("checkpoint I/O failed: {0}")]
    Io(String),
    #[error("checkpoint is not valid JSON: {0}")]
    Malformed(String),
}

/// Aggregated outcomes of one bound over one stratum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundAgg {
    pub id: String,
    pub quantity: String,
    pub quarantined: bool,
    /// Members the bound applied to.
    pub applicable: usize,
    /// Largest computed value of the bounded quantity over the stratum.
    pub max_computed: RatJson,
    /// Canonical graph6 of members attaining `max_computed` (first
    /// [`MAX_WITNESSES`] in catalog order).
    pub certificates: Vec<String>,
    pub equality_count: usize,
    /// Canonical graph6 of members attaining the bound exactly (capped).
    pub equality_witnesses: Vec<String>,
    pub violation_count: usize,
    /// Canonical graph6 of violating members. Never capped.
    pub violations: Vec<String>,
}

/// All members of one order, aggregated per bound (registry order).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub n: usize,
    pub count: usize,
    pub bounds: Vec<BoundAgg>,
}

/// Full sweep result.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub version: u32,
    pub class: SweepClass,
    pub n_max: usize,
    /// Present for random_connected sweeps.
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub total_count: usize,
    pub strata: Vec<Stratum>,
    /// Wall-clock milliseconds; excluded from serialized artifacts so
    /// identical sweeps emit byte-identical reports.
    #[serde(skip, default)]
    pub runtime_ms: u128,
}

// Report identity excludes wall-clock noise.
impl PartialEq for SweepReport {
    fn eq(&self, other: &Self) -> bool {
        self.version == other.version
            && self.class == other.class
            && self.n_max == other.n_max
            && self.seed == other.seed
            && self.samples == other.samples
            && self.total_count == other.total_count
            && self.strata == other.strata
    }
}
impl Eq for SweepReport {}

impl SweepReport {
    /// Violating canonical codes across all strata, verdict-bearing bounds only.
    pub fn violations(&self) -> Vec<(&str, usize, &str)> {
        let mut out = Vec::new();
        for stratum in &self.strata {
            for agg in &stratum.bounds {
                if agg.quarantined {
                    continue;
                }
                for code in &agg.violations {
                    out.push((agg.id.as_str(), stratum.n, code.as_str()));
                }
            }
        }
        out
    }

    /// The aggregation of `id` at order `n`, if that bound ever applied.
    pub fn agg(&self, n: usize, id: &str) -> Option<&BoundAgg> {
        self.strata
            .iter()
            .find(|s| s.n == n)?
            .bounds
            .iter()
            .find(|b| b.id == id)
    }
}

const CHECKPOINT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct Checkpoint {
    version: u32,
    class: SweepClass,
    n_max: usize,
    seed: Option<u64>,
    samples: Option<usize>,
    strata: Vec<Stratum>,
}

/// Runs a full sweep.
///
/// # Errors
///
/// Rejects `n_max` outside the class's enumeration range.
pub fn sweep(options: &SweepOptions) -> Result<SweepReport, SweepError> {
    sweep_resuming(options, Vec::new(), |_| Ok(()))
}

/// Runs a sweep with a checkpoint file: previously completed strata are
/// reused, and the file is rewritten after each newly completed stratum.
///
/// # Errors
///
/// Propagates range errors, checkpoint I/O and format errors, and option
/// mismatches against an existing checkpoint.
pub fn sweep_with_checkpoint(
    options: &SweepOptions,
    path: &Path,
) -> Result<SweepReport, SweepError> {
    let done: Vec<Stratum> = if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| SweepError::Io(e.to_string()))?;
        let ckpt: Checkpoint =
            serde_json::from_str(&text).map_err(|e| SweepError::Malformed(e.to_string()))?;
        if ckpt.version != CHECKPOINT_VERSION {
            return Err(SweepError::CheckpointVersion {
                found: ckpt.version,
                expected: CHECKPOINT_VERSION,
            });
        }
        let (seed, samples) = random_options(options);
        if ckpt.class != options.class {
            return Err(SweepError::CheckpointMismatch { field: "class" });
        }
        if ckpt.n_max != options.n_max {
            return Err(SweepError::CheckpointMismatch { field: "n_max" });
        }
        if ckpt.seed != seed {
            return Err(SweepError::CheckpointMismatch { field: "seed" });
        }
        if ckpt.samples != samples {
            return Err(SweepError::CheckpointMismatch { field: "samples" });
        }
        ckpt.strata
    } else {
        Vec::new()
    };
    let (seed, samples) = random_options(options);
    sweep_resuming(options, done, |strata| {
        let ckpt = Checkpoint {
            version: CHECKPOINT_VERSION,
            class: options.class,
            n_max: options.n_max,
            seed,
            samples,
            strata: strata.to_vec(),
        };
        let text = serde_json::to_string_pretty(&ckpt).expect("checkpoint serializes");
        std::fs::write(path, text).map_err(|e| SweepError::Io(e.to_string()))
    })
}

fn random_options(options: &SweepOptions) -> (Option<u64>, Option<usize>) {
    if options.class == SweepClass::RandomConnected {
        (Some(options.seed), Some(options.samples))
    } else {
        (None, None)
    }
}

fn sweep_resuming(
    options: &SweepOptions,
    done: Vec<Stratum>,
    mut persist: impl FnMut(&[Stratum]) -> Result<(), SweepError>,
) -> Result<SweepReport, SweepError> {
    let (min_n, max_n) = options.class.n_range();
    if options.n_max < min_n || options.n_max > max_n {
        return Err(SweepError::InvalidRange {
            class: options.class,
            n_max: options.n_max,
            min: min_n,
            max: max_n,
        });
    }
    let start = Instant::now();
    let mut strata = Vec::new();
    for n in min_n..=options.n_max {
        if let Some(existing) = done.iter().find(|s| s.n == n) {
            strata.push(existing.clone());
            continue;
        }
        strata.push(run_stratum(options, n));
        persist(&strata)?;
    }
    let (seed, samples) = random_options(options);
    Ok(SweepReport {
        version: CHECKPOINT_VERSION,
        class: options.class,
        n_max: options.n_max,
        seed,
        samples,
        total_count: strata.iter().map(|s| s.count).sum(),
        strata,
        runtime_ms: start.elapsed().as_millis(),
    })
}

/// Stratum members in their deterministic sweep order.
fn members(options: &SweepOptions, n: usize) -> Vec<Graph> {
    match options.class {
        SweepClass::MaximalOuterplanar => {
            enumerate_maximal_outerplanar(n).expect("range validated")
        }
        SweepClass::MaximalPlanar => enumerate_triangulations(n).expect("range validated"),
        SweepClass::Quadrangulation => enumerate_quadrangulations(n).expect("range validated"),
        SweepClass::RandomConnected => {
            // Even split of the total budget across orders 2 ..= n_max; the
            // stream id mixes n and index, so strata never share draws.
            let sizes = options.n_max - 1;
            let per_n = options.samples.div_ceil(sizes);
            (0..per_n)
                .map(|i| random_connected(options.seed, ((n as u64) << 32) | i as u64, n))
                .collect()
        }
    }
}

fn run_stratum(options: &SweepOptions, n: usize) -> Stratum {
    let graphs = members(options, n);
    let count = graphs.len();
    let reports = exec::map_collect(graphs, |g| check_bounds(&g));
    let mut aggs: Vec<Option<BoundAgg>> = vec![None; registry().len()];
    for report in &reports {
        for outcome in &report.applicable {
            let slot = registry()
                .iter()
                .position(|s| s.id == outcome.id)
                .expect("outcome ids come from the registry");
            let agg = aggs[slot].get_or_insert_with(|| BoundAgg {
                id: outcome.id.to_string(),
                quantity: outcome.quantity.as_str().to_string(),
                quarantined: outcome.quarantined,
                applicable: 0,
                max_computed: RatJson::from(outcome.computed),
                certificates: Vec::new(),
                equality_count: 0,
                equality_witnesses: Vec::new(),
                violation_count: 0,
                violations: Vec::new(),
            });
            agg.applicable += 1;
            let code = report.graph_id.0.as_str();
            let current = crate::rat::Rat::from(agg.max_computed);
            if outcome.computed > current || agg.certificates.is_empty() {
                agg.max_computed = RatJson::from(outcome.computed);
                agg.certificates = vec![code.to_string()];
            } else if outcome.computed == current && agg.certificates.len() < MAX_WITNESSES {
                agg.certificates.push(code.to_string());
            }
            match &outcome.verdict {
                BoundVerdict::Equality => {
                    agg.equality_count += 1;
                    if agg.equality_witnesses.len() < MAX_WITNESSES {
                        agg.equality_witnesses.push(code.to_string());
                    }
                }
                BoundVerdict::Violation(_) => {
                    agg.violation_count += 1;
                    agg.violations.push(code.to_string());
                }
                BoundVerdict::Slack(_) => {}
            }
        }
    }
    Stratum {
        n,
        count,
        bounds: aggs.into_iter().flatten().collect(),
    }
}
