//! `gridband`: scramble, simplify, identify and explore knot grid diagrams.
//!
//! Grids are read and written as JSON objects `{"n": int, "x": [...],
//! "o": [...]}` with arrays in bottom-to-top row order. Batch outputs are
//! JSON Lines. Exit codes: 0 success, 1 validation error, 2 replay mismatch.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use gridband_core::band::BandKind;
use gridband_core::explore::{explore, replay, ExploreConfig, ReplayOutcome, Witness};
use gridband_core::grid::GridDiagram;
use gridband_core::invariants::DEFAULT_CROSSING_CAP;
use gridband_core::scramble::{scramble, simplify, ScramblePolicy, SimplifyPolicy, SizeStats};
use gridband_core::table::{default_efforts, KnotTable};

#[derive(Parser)]
#[command(name = "gridband", version, about = "Grid-diagram knot explorer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GridInput {
    /// Input grid JSON file.
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Apply random knot-preserving moves to a grid.
    Scramble {
        #[command(flatten)]
        grid: GridInput,
        /// Number of random moves.
        #[arg(long, default_value_t = 1000)]
        moves: u32,
        /// Grid size cap.
        #[arg(long, default_value_t = 30)]
        cap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Scramble policy JSON file; flags override its fields.
        #[arg(long)]
        policy: Option<PathBuf>,
        /// Number of scrambles (seeds derived per index). With count > 1 the
        /// output is JSON Lines.
        #[arg(long, default_value_t = 1)]
        count: u32,
        /// Write a (grid size, crossing count) histogram CSV for the batch.
        #[arg(long)]
        histogram_csv: Option<PathBuf>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Greedily simplify a grid.
    Simplify {
        #[command(flatten)]
        grid: GridInput,
        /// Simplify policy JSON file.
        #[arg(long)]
        policy: Option<PathBuf>,
        /// Overrides the policy file's rng seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Identify the knot type of a grid against the built-in table.
    Identify {
        #[command(flatten)]
        grid: GridInput,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Enumerate band moves on a grid, optionally applying them.
    Bands {
        #[command(flatten)]
        grid: GridInput,
        /// coherent | noncoherent | all
        #[arg(long, default_value = "noncoherent")]
        kind: String,
        /// Also emit the grid resulting from each move.
        #[arg(long)]
        apply: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the scramble / band / simplify / identify pipeline.
    Explore {
        /// Comma-separated class names; all classes when omitted.
        #[arg(long)]
        knot: Option<String>,
        #[arg(long, default_value_t = 400)]
        scrambles: u32,
        /// Random moves per scramble.
        #[arg(long, default_value_t = 1000)]
        moves: u32,
        /// Grid size cap during scrambling.
        #[arg(long, default_value_t = 30)]
        max_size: usize,
        /// Crossing cap for identification.
        #[arg(long, default_value_t = DEFAULT_CROSSING_CAP)]
        cap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker count; GRIDBAND_JOBS overrides, 0 = all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Report JSON output path.
        #[arg(long)]
        out: PathBuf,
        /// Witness JSON Lines output path.
        #[arg(long)]
        witnesses: Option<PathBuf>,
    },
    /// Print statistics from an exploration report.
    Stats {
        /// report.json from explore.
        #[arg(long)]
        report: PathBuf,
        /// Write the adjacency pair counts as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Re-verify stored witnesses.
    Replay {
        /// Witness JSON Lines file.
        #[arg(long)]
        witness: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CROSSING_CAP)]
        cap: usize,
    },
}

fn read_grid(path: &Path) -> Result<GridDiagram> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    GridDiagram::from_json(&text).map_err(|e| anyhow::anyhow!("invalid grid: {e}"))
}

fn read_policy<T: serde::de::DeserializeOwned>(path: &Option<PathBuf>) -> Result<Option<T>> {
    match path {
        None => Ok(None),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .with_context(|| format!("reading {}", p.display()))?;
            Ok(Some(serde_json::from_str(&text).context("parsing policy file")?))
        }
    }
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, content).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run() -> Result<i32> {
    match Cli::parse().command {
        Command::Scramble { grid, moves, cap, seed, policy, count, histogram_csv, out } => {
            let g = read_grid(&grid.input)?;
            let base: ScramblePolicy = read_policy(&policy)?.unwrap_or_default();
            let policy = ScramblePolicy { moves, max_size: cap, ..base };
            let mut grids = Vec::new();
            for i in 0..count {
                grids.push(scramble(&g, &policy.with_seed(seed ^ i as u64)));
            }
            if let Some(csv) = &histogram_csv {
                std::fs::write(csv, SizeStats::collect(&grids).to_csv())?;
            }
            let mut text = String::new();
            for s in &grids {
                text.push_str(&s.to_json());
                text.push('\n');
            }
            write_output(&out, &text)?;
            Ok(0)
        }
        Command::Simplify { grid, policy, seed, out } => {
            let g = read_grid(&grid.input)?;
            let mut policy: SimplifyPolicy = read_policy(&policy)?.unwrap_or_default();
            if let Some(seed) = seed {
                policy = policy.with_seed(seed);
            }
            let result = simplify(&g, &policy);
            write_output(&out, &format!("{}\n", result.to_json()))?;
            Ok(0)
        }
        Command::Identify { grid, seed } => {
            let g = read_grid(&grid.input)?;
            let table = KnotTable::standard();
            let found = table
                .identify(&g, &default_efforts(seed), DEFAULT_CROSSING_CAP)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            match found {
                Some(class) => println!("{}", class.name),
                None => println!("unknown"),
            }
            Ok(0)
        }
        Command::Bands { grid, kind, apply, out } => {
            let g = read_grid(&grid.input)?;
            let kind = match kind.as_str() {
                "coherent" => BandKind::Coherent,
                "noncoherent" => BandKind::NonCoherent,
                "all" => BandKind::All,
                other => bail!("unknown band kind {other}; use coherent|noncoherent|all"),
            };
            let mut text = String::new();
            for m in g.band_moves(kind) {
                if apply {
                    let result = g.with_band(&m).expect("enumerated move applies");
                    text.push_str(&serde_json::to_string(&serde_json::json!({
                        "move": m,
                        "grid": result,
                    }))?);
                } else {
                    text.push_str(&serde_json::to_string(&m)?);
                }
                text.push('\n');
            }
            write_output(&out, &text)?;
            Ok(0)
        }
        Command::Explore { knot, scrambles, moves, max_size, cap, seed, jobs, out, witnesses } => {
            let table = KnotTable::standard();
            let classes = match knot {
                None => Vec::new(),
                Some(s) => s.split(',').map(|x| x.trim().to_string()).collect(),
            };
            let jobs = match std::env::var("GRIDBAND_JOBS") {
                Ok(v) => v.parse().context("GRIDBAND_JOBS must be an integer")?,
                Err(_) => jobs,
            };
            let config = ExploreConfig {
                classes,
                scrambles_per_seed: scrambles,
                scramble: ScramblePolicy { moves, max_size, ..Default::default() },
                crossing_cap: cap,
                jobs,
                base_seed: seed,
                ..Default::default()
            };
            let mut sink: Box<dyn std::io::Write> = match &witnesses {
                Some(p) => Box::new(std::io::BufWriter::new(
                    std::fs::File::create(p).with_context(|| format!("creating {}", p.display()))?,
                )),
                None => Box::new(std::io::sink()),
            };
            let report = explore(&config, table, |w| {
                serde_json::to_writer(&mut sink, w).expect("witness serializes");
                sink.write_all(b"\n").expect("witness stream writable");
            })
            .map_err(|e| anyhow::anyhow!("{e}"))?;
            sink.flush()?;
            std::fs::write(&out, report.to_json())
                .with_context(|| format!("writing {}", out.display()))?;
            eprintln!(
                "explored {} classes: {} pairs, {} unknown events",
                report.meta.classes.len(),
                report.pairs.len(),
                report.unknown_events
            );
            Ok(0)
        }
        Command::Stats { report, csv } => {
            let text = std::fs::read_to_string(&report)
                .with_context(|| format!("reading {}", report.display()))?;
            let report = gridband_core::explore::AdjacencyReport::from_json(&text)?;
            println!("class,probability,occurrences,sample_size");
            for (class, p, occ, sample) in report.cosmetic_stats() {
                println!("{class},{p:.6},{occ},{sample}");
            }
            if let Some(p) = csv {
                std::fs::write(&p, report.pairs_csv())?;
            }
            Ok(0)
        }
        Command::Replay { witness, cap } => {
            let table = KnotTable::standard();
            let text = std::fs::read_to_string(&witness)
                .with_context(|| format!("reading {}", witness.display()))?;
            let mut verified = 0usize;
            let mut mismatched = 0usize;
            for (lineno, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let w: Witness = serde_json::from_str(line)
                    .with_context(|| format!("witness line {}", lineno + 1))?;
                match replay(&w, table, cap).map_err(|e| anyhow::anyhow!("{e}"))? {
                    ReplayOutcome::Verified => {
                        verified += 1;
                        println!("line {}: verified {} -> {}", lineno + 1, w.src, w.dst);
                    }
                    ReplayOutcome::Mismatch { found_src, found_dst, .. } => {
                        mismatched += 1;
                        println!(
                            "line {}: MISMATCH expected {} -> {}, found {} -> {}",
                            lineno + 1,
                            w.src,
                            w.dst,
                            found_src,
                            found_dst
                        );
                    }
                }
            }
            println!("{verified} verified, {mismatched} mismatched");
            Ok(if mismatched > 0 { 2 } else { 0 })
        }
    }
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}
