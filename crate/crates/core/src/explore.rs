//! The exploration pipeline: scramble each seed, apply every non-coherent
//! band, simplify and identify the results, and aggregate the identified
//! pairs into an adjacency report with replayable witnesses.
//!
//! Work is sharded per scrambled grid. Task `t` draws its randomness from
//! `base_seed XOR t`, and results are merged in task order, so a run is
//! deterministic and independent of the worker count.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::band::{BandKind, BandMove};
use crate::grid::GridDiagram;
use crate::invariants::DEFAULT_CROSSING_CAP;
use crate::scramble::{scramble, ScramblePolicy, SimplifyPolicy};
use crate::table::{factor_pair_order, KnotTable, TableError};

#[derive(Debug, Error)]
pub enum ExploreError {
    #[error("unknown class {0} in explore config")]
    UnknownClass(String),
    #[error("explore config counts must be positive")]
    EmptyBudget,
    #[error("witness cannot be replayed: {0}")]
    BadWitness(String),
    #[error(transparent)]
    Table(#[from] TableError),
}

/// Budget and policies for one exploration run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExploreConfig {
    /// Class names to explore; empty means every class in the table.
    #[serde(default)]
    pub classes: Vec<String>,
    pub scrambles_per_seed: u32,
    /// Template for the per-task scramble; its seed field is ignored and
    /// derived per task.
    #[serde(default)]
    pub scramble: ScramblePolicy,
    /// Identification effort ladder; seeds are derived per band.
    #[serde(default = "default_effort_templates")]
    pub efforts: Vec<SimplifyPolicy>,
    /// Band results whose diagrams stay above this crossing count after the
    /// final effort are recorded as unknown events.
    #[serde(default = "default_cap")]
    pub crossing_cap: usize,
    /// Worker count; 0 means one worker per available core.
    #[serde(default)]
    pub jobs: usize,
    pub base_seed: u64,
}

fn default_cap() -> usize {
    DEFAULT_CROSSING_CAP
}

fn default_effort_templates() -> Vec<SimplifyPolicy> {
    vec![
        SimplifyPolicy::default(),
        SimplifyPolicy { rounds: 400, shuffle_moves: 80, patience: 40, rng_seed: 0 },
    ]
}

impl Default for ExploreConfig {
    fn default() -> Self {
        ExploreConfig {
            classes: Vec::new(),
            scrambles_per_seed: 400,
            scramble: ScramblePolicy::default(),
            efforts: default_effort_templates(),
            crossing_cap: DEFAULT_CROSSING_CAP,
            jobs: 0,
            base_seed: 0,
        }
    }
}

/// One identified band attachment, replayable from its record alone.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Witness {
    pub src: String,
    pub grid: GridDiagram,
    #[serde(rename = "move")]
    pub band: BandMove,
    pub dst: String,
    pub seed: u64,
    pub task: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCount {
    pub a: String,
    pub b: String,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosmeticRow {
    pub class: String,
    /// Identified band attachments that landed on the mirror class.
    pub occ: u64,
    /// All applied band attachments for this class.
    pub sample: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunMeta {
    pub classes: Vec<String>,
    pub scrambles_per_seed: u32,
    pub moves_per_scramble: u32,
    pub max_grid_size: usize,
    pub crossing_cap: usize,
    pub base_seed: u64,
    pub jobs: usize,
    pub version: String,
}

/// Aggregated result of an exploration run. Pairs are unordered and stored
/// once, in canonical order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AdjacencyReport {
    pub meta: RunMeta,
    pub pairs: Vec<PairCount>,
    pub cosmetic: Vec<CosmeticRow>,
    pub unknown_events: u64,
}

impl AdjacencyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// CSV with columns `class_a,class_b,count`.
    pub fn pairs_csv(&self) -> String {
        let mut out = String::from("class_a,class_b,count\n");
        for p in &self.pairs {
            out.push_str(&format!("{},{},{}\n", p.a, p.b, p.count));
        }
        out
    }

    /// The derived statistics table: (class, probability, occurrences,
    /// sample size) per explored class.
    pub fn cosmetic_stats(&self) -> Vec<(String, f64, u64, u64)> {
        self.cosmetic
            .iter()
            .map(|row| {
                let p = if row.sample == 0 { 0.0 } else { row.occ as f64 / row.sample as f64 };
                (row.class.clone(), p, row.occ, row.sample)
            })
            .collect()
    }
}

struct TaskOutcome {
    class_index: usize,
    witnesses: Vec<Witness>,
    applied: u64,
    unknown: u64,
}

fn mix(seed: u64, salt: u64) -> u64 {
    // splitmix64 round, for deriving per-band seeds from the task seed
    let mut z = seed.wrapping_add(salt.wrapping_mul(0x9e3779b97f4a7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Run the full pipeline, streaming witnesses to `sink` in deterministic
/// task order.
pub fn explore(
    config: &ExploreConfig,
    table: &KnotTable,
    mut sink: impl FnMut(&Witness),
) -> Result<AdjacencyReport, ExploreError> {
    if config.scrambles_per_seed == 0 || config.efforts.is_empty() {
        return Err(ExploreError::EmptyBudget);
    }
    let class_names: Vec<String> = if config.classes.is_empty() {
        table.classes().iter().map(|c| c.name.clone()).collect()
    } else {
        config.classes.clone()
    };
    for name in &class_names {
        if table.get(name).is_none() {
            return Err(ExploreError::UnknownClass(name.clone()));
        }
    }

    let total_tasks = class_names.len() as u64 * config.scrambles_per_seed as u64;
    let run_task = |task: u64| -> Result<TaskOutcome, ExploreError> {
        let class_index = (task / config.scrambles_per_seed as u64) as usize;
        let class = table.get(&class_names[class_index]).expect("validated above");
        let task_seed = config.base_seed ^ task;
        let policy = config.scramble.with_seed(task_seed);
        let scrambled = scramble(&class.seed, &policy);
        let bands = scrambled.band_moves(BandKind::NonCoherent);
        let mut witnesses = Vec::new();
        let mut unknown = 0u64;
        for (b_idx, band) in bands.iter().enumerate() {
            let result = scrambled.with_band(band).expect("enumerated move applies");
            let efforts: Vec<SimplifyPolicy> = config
                .efforts
                .iter()
                .enumerate()
                .map(|(lvl, e)| e.with_seed(mix(task_seed, (b_idx as u64) << 8 | lvl as u64)))
                .collect();
            match table.identify(&result, &efforts, config.crossing_cap)? {
                Some(target) => witnesses.push(Witness {
                    src: class.name.clone(),
                    grid: scrambled.clone(),
                    band: *band,
                    dst: target.name.clone(),
                    seed: config.base_seed,
                    task,
                }),
                None => unknown += 1,
            }
        }
        let applied = bands.len() as u64;
        Ok(TaskOutcome { class_index, witnesses, applied, unknown })
    };

    let mut pair_counts: std::collections::BTreeMap<(String, String), u64> = Default::default();
    let mut cosmetic: Vec<(u64, u64)> = vec![(0, 0); class_names.len()];
    let mut unknown_events = 0u64;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .expect("worker pool");
    // chunked so witness memory stays bounded while merge order stays fixed
    let chunk = 512u64;
    let mut start = 0u64;
    while start < total_tasks {
        let end = (start + chunk).min(total_tasks);
        let tasks: Vec<u64> = (start..end).collect();
        let outcomes: Result<Vec<TaskOutcome>, ExploreError> = pool.install(|| {
            use rayon::prelude::*;
            tasks.par_iter().map(|&t| run_task(t)).collect()
        });
        for outcome in outcomes? {
            let (ref mut occ, ref mut sample) = cosmetic[outcome.class_index];
            *sample += outcome.applied;
            unknown_events += outcome.unknown;
            for w in &outcome.witnesses {
                if table.is_cosmetic_pair(&w.src, &w.dst)? {
                    *occ += 1;
                }
                let key = factor_pair_order(&w.src, &w.dst);
                *pair_counts.entry(key).or_insert(0) += 1;
                sink(w);
            }
        }
        start = end;
    }

    let pairs = pair_counts
        .into_iter()
        .map(|((a, b), count)| PairCount { a, b, count })
        .collect();
    let cosmetic = class_names
        .iter()
        .zip(cosmetic)
        .map(|(name, (occ, sample))| CosmeticRow { class: name.clone(), occ, sample })
        .collect();
    Ok(AdjacencyReport {
        meta: RunMeta {
            classes: class_names,
            scrambles_per_seed: config.scrambles_per_seed,
            moves_per_scramble: config.scramble.moves,
            max_grid_size: config.scramble.max_size,
            crossing_cap: config.crossing_cap,
            base_seed: config.base_seed,
            jobs: config.jobs,
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        pairs,
        cosmetic,
        unknown_events,
    })
}

/// Outcome of replaying one witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReplayOutcome {
    Verified,
    Mismatch { expected_src: String, found_src: String, expected_dst: String, found_dst: String },
}

/// Re-run a witness: the stored grid must identify as its source class and
/// the stored band move must lead to its target class.
pub fn replay(w: &Witness, table: &KnotTable, cap: usize) -> Result<ReplayOutcome, ExploreError> {
    let efforts = crate::table::default_efforts(mix(w.seed ^ w.task, 0xbeef));
    let found_src = match table.identify(&w.grid, &efforts, cap)? {
        Some(c) => c.name.clone(),
        None => "unknown".to_string(),
    };
    let banded = w
        .grid
        .with_band(&w.band)
        .map_err(|e| ExploreError::BadWitness(e.to_string()))?;
    let found_dst = match table.identify(&banded, &efforts, cap)? {
        Some(c) => c.name.clone(),
        None => "unknown".to_string(),
    };
    if found_src == w.src && found_dst == w.dst {
        Ok(ReplayOutcome::Verified)
    } else {
        Ok(ReplayOutcome::Mismatch {
            expected_src: w.src.clone(),
            found_src,
            expected_dst: w.dst.clone(),
            found_dst,
        })
    }
}
