//! Randomized grid walks and the greedy simplification loop.
//!
//! Scrambling applies knot-preserving moves (translation, commutation,
//! stabilization, destabilization) drawn from a weighted distribution.
//! Simplification alternates exhaustive greedy destabilization with bursts
//! of random translations and commutations until it runs out of patience;
//! monotonic in size by construction, and in practice overwhelmingly likely
//! to land on a minimal grid.
//!
//! All randomness flows from explicit 64-bit seeds through a counter-based
//! generator, so every operation is reproducible.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::grid::{Axis, GridDiagram, MarkerKind};
use crate::moves::{Corner, Interleaving, StabSpec};

/// Relative probabilities of the four knot-preserving move families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MoveWeights {
    pub translate: f64,
    pub commute: f64,
    pub stabilize: f64,
    pub destabilize: f64,
}

impl Default for MoveWeights {
    fn default() -> Self {
        MoveWeights { translate: 0.35, commute: 0.35, stabilize: 0.2, destabilize: 0.1 }
    }
}

impl MoveWeights {
    fn validate(&self) {
        let all = [self.translate, self.commute, self.stabilize, self.destabilize];
        assert!(all.iter().all(|w| *w >= 0.0), "move weights must be non-negative");
        assert!(all.iter().sum::<f64>() > 0.0, "move weights must not all be zero");
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScramblePolicy {
    /// Number of random moves to attempt.
    pub moves: u32,
    /// Hard cap on the grid size; stabilizations at the cap are skipped.
    pub max_size: usize,
    #[serde(default)]
    pub weights: MoveWeights,
    pub rng_seed: u64,
}

impl Default for ScramblePolicy {
    fn default() -> Self {
        ScramblePolicy { moves: 1000, max_size: 30, weights: MoveWeights::default(), rng_seed: 0 }
    }
}

impl ScramblePolicy {
    pub fn with_seed(self, rng_seed: u64) -> Self {
        ScramblePolicy { rng_seed, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimplifyPolicy {
    /// Maximum outer rounds of destabilize-then-shuffle.
    pub rounds: u32,
    /// Random translations/commutations between destabilization sweeps.
    pub shuffle_moves: u32,
    /// Rounds without a size decrease before giving up.
    pub patience: u32,
    pub rng_seed: u64,
}

impl Default for SimplifyPolicy {
    fn default() -> Self {
        SimplifyPolicy { rounds: 200, shuffle_moves: 50, patience: 20, rng_seed: 0 }
    }
}

impl SimplifyPolicy {
    pub fn with_seed(self, rng_seed: u64) -> Self {
        SimplifyPolicy { rng_seed, ..self }
    }

    fn validate(&self) {
        assert!(self.rounds > 0 && self.shuffle_moves > 0 && self.patience > 0,
                "simplify policy fields must be positive");
    }
}

fn random_axis(rng: &mut ChaCha8Rng) -> Axis {
    if rng.gen::<bool>() {
        Axis::Row
    } else {
        Axis::Col
    }
}

fn legal_commutations(g: &GridDiagram) -> Vec<(Axis, usize)> {
    let mut out = Vec::new();
    for axis in [Axis::Row, Axis::Col] {
        for i in 0..g.size() {
            if matches!(g.interleaving(axis, i), Interleaving::Disjoint | Interleaving::Nested) {
                out.push((axis, i));
            }
        }
    }
    out
}

fn random_translate(g: &GridDiagram, rng: &mut ChaCha8Rng) -> GridDiagram {
    let axis = random_axis(rng);
    let k = rng.gen_range(1..g.size()) as i64;
    g.translated(axis, k)
}

fn random_commute(g: &GridDiagram, rng: &mut ChaCha8Rng) -> Option<GridDiagram> {
    let legal = legal_commutations(g);
    let (axis, i) = *legal.choose(rng)?;
    Some(g.commuted(axis, i).expect("chosen commutation is legal"))
}

/// Random knot-preserving walk. Deterministic in the policy seed; the knot
/// type of the result equals the input's.
pub fn scramble(g: &GridDiagram, policy: &ScramblePolicy) -> GridDiagram {
    policy.weights.validate();
    assert!(policy.max_size >= g.size(), "size cap below current grid size");
    let mut rng = ChaCha8Rng::seed_from_u64(policy.rng_seed);
    let w = &policy.weights;
    let cumulative = [
        w.translate,
        w.translate + w.commute,
        w.translate + w.commute + w.stabilize,
        w.translate + w.commute + w.stabilize + w.destabilize,
    ];
    let total = cumulative[3];
    let mut cur = g.clone();
    for _ in 0..policy.moves {
        let roll = rng.gen::<f64>() * total;
        if roll < cumulative[0] {
            cur = random_translate(&cur, &mut rng);
        } else if roll < cumulative[1] {
            if let Some(next) = random_commute(&cur, &mut rng) {
                cur = next;
            }
        } else if roll < cumulative[2] {
            if cur.size() < policy.max_size {
                let spec = StabSpec {
                    row: rng.gen_range(0..cur.size()),
                    kind: if rng.gen::<bool>() { MarkerKind::X } else { MarkerKind::O },
                    corner: *Corner::ALL.choose(&mut rng).unwrap(),
                };
                cur = cur.stabilized(&spec);
            }
        } else {
            let ds = cur.destabilizations();
            if let Some(pos) = ds.choose(&mut rng) {
                cur = cur.destabilized(*pos).expect("listed destabilization applies");
            }
        }
    }
    cur
}

/// Greedy monotonic simplification: destabilize to exhaustion, shuffle with
/// random translations and commutations, repeat. The size never increases;
/// the knot type is preserved.
pub fn simplify(g: &GridDiagram, policy: &SimplifyPolicy) -> GridDiagram {
    policy.validate();
    let mut rng = ChaCha8Rng::seed_from_u64(policy.rng_seed);
    let mut cur = g.clone();
    let mut stale_rounds = 0u32;
    for _ in 0..policy.rounds {
        let before = cur.size();
        loop {
            if cur.size() == 2 {
                return cur;
            }
            let ds = cur.destabilizations();
            match ds.first() {
                Some(&pos) => cur = cur.destabilized(pos).expect("listed destabilization applies"),
                None => break,
            }
        }
        if cur.size() < before {
            stale_rounds = 0;
        } else {
            stale_rounds += 1;
            if stale_rounds > policy.patience {
                break;
            }
        }
        for _ in 0..policy.shuffle_moves {
            if rng.gen::<bool>() {
                cur = random_translate(&cur, &mut rng);
            } else if let Some(next) = random_commute(&cur, &mut rng) {
                cur = next;
            }
        }
    }
    cur
}

/// Histogram of (grid size, crossing count) pairs over a batch of grids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeStats {
    counts: std::collections::BTreeMap<(usize, usize), usize>,
}

impl SizeStats {
    pub fn collect<'a>(grids: impl IntoIterator<Item = &'a GridDiagram>) -> SizeStats {
        let mut counts = std::collections::BTreeMap::new();
        for g in grids {
            let key = (g.size(), g.to_planar().crossing_count());
            *counts.entry(key).or_insert(0) += 1;
        }
        SizeStats { counts }
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    /// CSV with columns `grid_size,crossing_count,count`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("grid_size,crossing_count,count\n");
        for ((n, c), count) in self.entries() {
            out.push_str(&format!("{n},{c},{count}\n"));
        }
        out
    }
}
