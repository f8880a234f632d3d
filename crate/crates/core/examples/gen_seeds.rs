//! Seed and reference data generator.
//!
//! Builds `data/seeds.json` and `data/references.json` for the knot table.
//! Torus knots come from shift grids; every other prime knot is found by a
//! randomized grid search certified against classical table data:
//!
//!   - the symmetrized Alexander polynomial (normalized to Δ(1) = 1) must
//!     match the published value exactly — within this range of knots that
//!     pins the type up to mirror image and a handful of coincidences,
//!   - the Jones polynomial must satisfy V(1) = 1, V'(1) = 0,
//!     V''(1) = -6·a2 and V(-1) = Δ(-1),
//!   - for alternating knots the Jones span must equal the crossing number
//!     and the coefficient magnitudes must sum to the determinant, which
//!     excludes higher-crossing impostors sharing the Alexander polynomial,
//!   - where the full published Jones polynomial is recorded below, the
//!     computed value must equal it (or its mirror) exactly.
//!
//! Chirality of the unsuffixed name follows the recorded Jones polynomial
//! when present, else the recorded sign of the Jones exponent-range center.
//! Composites are connected sums of the certified primes. Run with:
//!
//!   cargo run --release -p gridband-core --example gen_seeds

use std::collections::HashMap;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use gridband_core::grid::GridDiagram;
use gridband_core::invariants::{alexander, jones, key, InvariantKey, DEFAULT_CROSSING_CAP};
use gridband_core::poly::Laurent;
use gridband_core::band::BandKind;
use gridband_core::scramble::{scramble, simplify, ScramblePolicy, SimplifyPolicy};

/// Chirality anchor for the bare (unsuffixed) class name.
enum Anchor {
    /// Full Jones polynomial in the variable t, as (coeff, exp) terms.
    Exact(&'static [(i64, i64)]),
    /// Sign of (min + max) of the t-exponent range.
    CenterSign(i64),
    /// Amphichiral: no chirality to fix.
    Amphichiral,
}

struct PrimeKnot {
    name: &'static str,
    crossings: i64,
    alternating: bool,
    /// Symmetric Alexander coefficients [a0, a1, ...] with Δ(1) = 1.
    alex: &'static [i64],
    anchor: Anchor,
}

const PRIMES: &[PrimeKnot] = &[
    PrimeKnot { name: "3_1", crossings: 3, alternating: true, alex: &[-1, 1],
        anchor: Anchor::Exact(&[(-1, -4), (1, -3), (1, -1)]) },
    PrimeKnot { name: "4_1", crossings: 4, alternating: true, alex: &[3, -1],
        anchor: Anchor::Amphichiral },
    PrimeKnot { name: "5_1", crossings: 5, alternating: true, alex: &[1, -1, 1],
        anchor: Anchor::Exact(&[(-1, -7), (1, -6), (-1, -5), (1, -4), (1, -2)]) },
    PrimeKnot { name: "5_2", crossings: 5, alternating: true, alex: &[-3, 2],
        anchor: Anchor::Exact(&[(-1, -6), (1, -5), (-1, -4), (2, -3), (-1, -2), (1, -1)]) },
    PrimeKnot { name: "6_1", crossings: 6, alternating: true, alex: &[5, -2],
        anchor: Anchor::Exact(&[(1, -4), (-1, -3), (1, -2), (-2, -1), (2, 0), (-1, 1), (1, 2)]) },
    PrimeKnot { name: "6_2", crossings: 6, alternating: true, alex: &[-3, 3, -1],
        anchor: Anchor::Exact(&[(1, -5), (-2, -4), (2, -3), (-2, -2), (2, -1), (-1, 0), (1, 1)]) },
    PrimeKnot { name: "6_3", crossings: 6, alternating: true, alex: &[5, -3, 1],
        anchor: Anchor::Amphichiral },
    PrimeKnot { name: "7_1", crossings: 7, alternating: true, alex: &[-1, 1, -1, 1],
        anchor: Anchor::Exact(&[(-1, -10), (1, -9), (-1, -8), (1, -7), (-1, -6), (1, -5), (1, -3)]) },
    PrimeKnot { name: "7_2", crossings: 7, alternating: true, alex: &[-5, 3],
        anchor: Anchor::Exact(&[(-1, -8), (1, -7), (-1, -6), (2, -5), (-2, -4), (2, -3), (-1, -2), (1, -1)]) },
    PrimeKnot { name: "7_3", crossings: 7, alternating: true, alex: &[3, -3, 2],
        anchor: Anchor::Exact(&[(1, 2), (-1, 3), (2, 4), (-2, 5), (3, 6), (-2, 7), (1, 8), (-1, 9)]) },
    PrimeKnot { name: "7_4", crossings: 7, alternating: true, alex: &[-7, 4],
        anchor: Anchor::Exact(&[(1, -1), (-2, -2), (3, -3), (-2, -4), (3, -5), (-2, -6), (1, -7), (-1, -8)]) },
    PrimeKnot { name: "7_5", crossings: 7, alternating: true, alex: &[5, -4, 2],
        anchor: Anchor::Exact(&[(-1, -9), (2, -8), (-3, -7), (3, -6), (-3, -5), (3, -4), (-1, -3), (1, -2)]) },
    PrimeKnot { name: "7_6", crossings: 7, alternating: true, alex: &[-7, 5, -1],
        anchor: Anchor::Exact(&[(-1, -6), (2, -5), (-3, -4), (4, -3), (-3, -2), (3, -1), (-2, 0), (1, 1)]) },
    PrimeKnot { name: "7_7", crossings: 7, alternating: true, alex: &[9, -5, 1],
        anchor: Anchor::Exact(&[(1, 4), (-2, 3), (3, 2), (-4, 1), (4, 0), (-3, -1), (3, -2), (-1, -3)]) },
    PrimeKnot { name: "8_1", crossings: 8, alternating: true, alex: &[7, -3],
        anchor: Anchor::Exact(&[(1, -6), (-1, -5), (1, -4), (-2, -3), (2, -2), (-2, -1), (2, 0), (-1, 1), (1, 2)]) },
    PrimeKnot { name: "8_2", crossings: 8, alternating: true, alex: &[3, -3, 3, -1],
        anchor: Anchor::Exact(&[(1, -8), (-2, -7), (2, -6), (-3, -5), (3, -4), (-2, -3), (2, -2), (-1, -1), (1, 0)]) },
    PrimeKnot { name: "8_3", crossings: 8, alternating: true, alex: &[9, -4],
        anchor: Anchor::Amphichiral },
    PrimeKnot { name: "8_4", crossings: 8, alternating: true, alex: &[-5, 5, -2],
        anchor: Anchor::Exact(&[(1, 5), (-2, 4), (3, 3), (-3, 2), (3, 1), (-3, 0), (2, -1), (-1, -2), (1, -3)]) },
    PrimeKnot { name: "8_5", crossings: 8, alternating: true, alex: &[5, -4, 3, -1],
        anchor: Anchor::Exact(&[(1, 0), (-1, -1), (3, -2), (-3, -3), (3, -4), (-4, -5), (3, -6), (-2, -7), (1, -8)]) },
    PrimeKnot { name: "8_6", crossings: 8, alternating: true, alex: &[-7, 6, -2],
        anchor: Anchor::CenterSign(-1) },
    PrimeKnot { name: "8_7", crossings: 8, alternating: true, alex: &[-5, 5, -3, 1],
        anchor: Anchor::CenterSign(1) },
    PrimeKnot { name: "8_8", crossings: 8, alternating: true, alex: &[9, -6, 2],
        anchor: Anchor::CenterSign(1) },
    PrimeKnot { name: "8_9", crossings: 8, alternating: true, alex: &[7, -5, 3, -1],
        anchor: Anchor::Amphichiral },
    PrimeKnot { name: "8_10", crossings: 8, alternating: true, alex: &[-7, 6, -3, 1],
        anchor: Anchor::CenterSign(1) },
    PrimeKnot { name: "8_11", crossings: 8, alternating: true, alex: &[-9, 7, -2],
        anchor: Anchor::CenterSign(-1) },
    PrimeKnot { name: "8_12", crossings: 8, alternating: true, alex: &[13, -7, 1],
        anchor: Anchor::Amphichiral },
    PrimeKnot { name: "8_13", crossings: 8, alternating: true, alex: &[11, -7, 2],
        anchor: Anchor::CenterSign(1) },
    PrimeKnot { name: "8_14", crossings: 8, alternating: true, alex: &[-11, 8, -2],
        anchor: Anchor::CenterSign(-1) },
    PrimeKnot { name: "8_15", crossings: 8, alternating: true, alex: &[11, -8, 3],
        anchor: Anchor::CenterSign(-1) },
    PrimeKnot { name: "8_16", crossings: 8, alternating: true, alex: &[-9, 8, -4, 1],
        anchor: Anchor::CenterSign(1) },
    PrimeKnot { name: "8_17", crossings: 8, alternating: true, alex: &[11, -8, 4, -1],
        anchor: Anchor::Amphichiral },
    PrimeKnot { name: "8_18", crossings: 8, alternating: true, alex: &[13, -10, 5, -1],
        anchor: Anchor::Amphichiral },
    PrimeKnot { name: "8_19", crossings: 8, alternating: false, alex: &[1, 0, -1, 1],
        anchor: Anchor::Exact(&[(1, -3), (1, -5), (-1, -8)]) },
    PrimeKnot { name: "8_20", crossings: 8, alternating: false, alex: &[3, -2, 1],
        anchor: Anchor::Exact(&[(-1, 5), (1, 4), (-1, 3), (2, 2), (-1, 1), (2, 0), (-1, -1)]) },
    PrimeKnot { name: "8_21", crossings: 8, alternating: false, alex: &[-5, 4, -1],
        anchor: Anchor::Exact(&[(1, -7), (-2, -6), (2, -5), (-3, -4), (3, -3), (-2, -2), (2, -1)]) },
];

/// Composite classes: name (canonical factor order) and factor names.
const COMPOSITES: &[(&str, &[&str])] = &[
    ("3_1#3_1", &["3_1", "3_1"]),
    ("3_1#3_1m", &["3_1", "3_1m"]),
    ("3_1#4_1", &["3_1", "4_1"]),
    ("3_1#5_1", &["3_1", "5_1"]),
    ("3_1#5_1m", &["3_1", "5_1m"]),
    ("3_1#5_2", &["3_1", "5_2"]),
    ("3_1#5_2m", &["3_1", "5_2m"]),
    ("4_1#4_1", &["4_1", "4_1"]),
];

fn laurent(terms: &[(i64, i64)]) -> Laurent {
    Laurent::from_terms(terms.iter().copied())
}

/// Symmetric Alexander coefficients -> polynomial.
fn alex_poly(coeffs: &[i64]) -> Laurent {
    let mut terms = vec![(coeffs[0], 0)];
    for (k, &c) in coeffs.iter().enumerate().skip(1) {
        terms.push((c, k as i64));
        terms.push((c, -(k as i64)));
    }
    laurent(&terms)
}

/// Jones in the bracket variable A: t = A^-4.

fn jones_a_to_t(f: &Laurent) -> Laurent {
    Laurent::from_terms(f.iter().map(|(e, c)| {
        assert!(e % 4 == 0, "knot Jones exponents are multiples of 4 in A");
        (c, -e / 4)
    }))
}

/// Identity checks that hold for every knot; failures are engine bugs.
fn audit_jones_identities(name: &str, v: &Laurent, k: &PrimeKnot) {
    let at_one: i128 = v.iter().map(|(_, c)| c as i128).sum();
    assert_eq!(at_one, 1, "{name}: V(1) != 1");
    let d1: i128 = v.iter().map(|(e, c)| (e as i128) * c as i128).sum();
    assert_eq!(d1, 0, "{name}: V'(1) != 0");
    let a2: i64 = k.alex.iter().enumerate().skip(1).map(|(i, &c)| c * (i * i) as i64).sum();
    let d2: i128 = v.iter().map(|(e, c)| (e as i128) * (e as i128 - 1) * c as i128).sum();
    assert_eq!(d2, -6 * a2 as i128, "{name}: V''(1) != -6 a2");
    let alex = alex_poly(k.alex);
    assert_eq!(v.eval_unit(-1), alex.eval_unit(-1), "{name}: V(-1) != Alexander(-1)");
}

/// Target-match criteria that an Alexander-coincident impostor would fail.
fn candidate_matches_target(v: &Laurent, k: &PrimeKnot) -> bool {
    if k.alternating {
        if v.span() != k.crossings {
            return false;
        }
        let mag: i128 = v.iter().map(|(_, c)| (c as i128).abs()).sum();
        if mag != alex_poly(k.alex).eval_unit(-1).abs() {
            return false;
        }
        let mut last_sign = 0i64;
        for (e, c) in v.iter() {
            let s = c.signum() * if e.rem_euclid(2) == 0 { 1 } else { -1 };
            if last_sign != 0 && s != last_sign {
                return false;
            }
            last_sign = s;
        }
    }
    match &k.anchor {
        Anchor::Exact(terms) => {
            let want = laurent(terms);
            *v == want || v.invert_variable() == want
        }
        Anchor::Amphichiral => v.is_palindromic(),
        Anchor::CenterSign(_) => v.min_exp().unwrap() + v.max_exp().unwrap() != 0,
    }
}

/// Try to lower the grid size with several simplify seeds.
fn minimize(g: &GridDiagram, tries: u64) -> GridDiagram {
    let mut best = g.clone();
    for seed in 0..tries {
        let p = SimplifyPolicy { rounds: 300, shuffle_moves: 60, patience: 30, rng_seed: seed ^ 0xabcd };
        let out = simplify(&best, &p);
        if out.size() < best.size() {
            best = out;
        }
    }
    best
}

fn torus_shift_grid(n: usize) -> GridDiagram {
    let xs: Vec<usize> = (0..n).collect();
    let os: Vec<usize> = (0..n).map(|r| (r + 2) % n).collect();
    GridDiagram::new(xs, os).unwrap()
}

struct Found {
    grid: GridDiagram,
    key: InvariantKey,
}

/// Pick grid or mirror according to the chirality anchor; `jt` is the
/// computed Jones of `g` in t-form.
fn orient_chirality(name: &str, g: GridDiagram, jt: &Laurent, anchor: &Anchor) -> GridDiagram {
    match anchor {
        Anchor::Amphichiral => {
            assert!(jt.is_palindromic(), "{name}: amphichiral Jones must be palindromic");
            g
        }
        Anchor::Exact(terms) => {
            let want = laurent(terms);
            if *jt == want {
                g
            } else if jt.invert_variable() == want {
                g.mirror()
            } else {
                panic!("{name}: computed Jones {jt} matches neither the recorded value nor its mirror");
            }
        }
        Anchor::CenterSign(sign) => {
            let center = jt.min_exp().unwrap() + jt.max_exp().unwrap();
            assert!(center != 0, "{name}: center sign anchor needs an asymmetric range");
            if center.signum() == *sign {
                g
            } else {
                g.mirror()
            }
        }
    }
}

fn data_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

fn main() {
    let wanted: HashMap<Laurent, &PrimeKnot> =
        PRIMES.iter().map(|k| (alex_poly(k.alex), k)).collect();
    assert_eq!(wanted.len(), PRIMES.len(), "Alexander values must be distinct");

    let mut found: HashMap<&'static str, Found> = HashMap::new();

    // reload previously certified grids; they are re-certified below
    let cache_path = data_dir().join("seed_cache.json");
    let mut cached: HashMap<String, GridDiagram> = HashMap::new();
    if let Ok(text) = std::fs::read_to_string(&cache_path) {
        let entries: Vec<(String, GridDiagram)> =
            serde_json::from_str(&text).expect("seed cache parses");
        cached = entries.into_iter().collect();
    }
    for k in PRIMES {
        let Some(g) = cached.get(k.name) else { continue };
        let d = g.to_planar();
        assert_eq!(alexander(&d).unwrap(), alex_poly(k.alex), "cached {} fails Alexander", k.name);
        let jt = jones_a_to_t(&jones(&d, DEFAULT_CROSSING_CAP).unwrap());
        audit_jones_identities(k.name, &jt, k);
        assert!(candidate_matches_target(&jt, k), "cached {} fails target criteria", k.name);
        let g = orient_chirality(k.name, g.clone(), &jt, &k.anchor);
        let key = key(&g, DEFAULT_CROSSING_CAP).unwrap();
        found.insert(k.name, Found { grid: g, key });
        eprintln!("re-certified {} from cache", k.name);
    }
    let save_cache = |found: &HashMap<&'static str, Found>| {
        let entries: Vec<(&str, &GridDiagram)> =
            found.iter().map(|(&n, f)| (n, &f.grid)).collect();
        std::fs::write(&cache_path, serde_json::to_string(&entries).unwrap()).unwrap();
    };

    // torus knots from shift grids
    for (name, n) in [("3_1", 5usize), ("5_1", 7), ("7_1", 9)] {
        let k = PRIMES.iter().find(|k| k.name == name).unwrap();
        if found.contains_key(k.name) {
            continue;
        }
        let g = torus_shift_grid(n);
        let computed = alexander(&g.to_planar()).unwrap();
        assert_eq!(computed, alex_poly(k.alex), "{name}: torus grid Alexander mismatch");
        let jt = jones_a_to_t(&jones(&g.to_planar(), DEFAULT_CROSSING_CAP).unwrap());
        audit_jones_identities(name, &jt, k);
        assert!(candidate_matches_target(&jt, k), "{name}: torus grid fails the target criteria");
        let g = orient_chirality(name, g, &jt, &k.anchor);
        let key = key(&g, DEFAULT_CROSSING_CAP).unwrap();
        found.insert(k.name, Found { grid: g, key });
        eprintln!("certified {name} (torus shift grid, size {n})");
    }

    // Walk over candidate knots: scramble a start grid, attach every
    // non-coherent band, simplify, and try to certify each result against
    // the missing targets. Start grids alternate between a drifting pool
    // and certified classes known (from the bundled adjacency data) to sit
    // one band away from a missing target.
    let adjacency: HashMap<String, Vec<String>> =
        serde_json::from_str(include_str!("../data/known_adjacency.json")).unwrap();
    let sources_for = |target: &str, found: &HashMap<&'static str, Found>| -> Vec<GridDiagram> {
        let mut out = Vec::new();
        for (row, entries) in &adjacency {
            for e in entries {
                let (base, mirrored) = match e.strip_suffix('m') {
                    Some(b) if !b.contains('#') => (b, true),
                    _ => (e.as_str(), false),
                };
                if base != target || row.contains('#') {
                    continue;
                }
                if let Some(f) = found.get(row.as_str()) {
                    out.push(if mirrored { f.grid.mirror() } else { f.grid.clone() });
                }
            }
        }
        out
    };

    let mut rng = ChaCha8Rng::seed_from_u64(20260810);
    let mut pool: Vec<GridDiagram> = found.values().map(|f| f.grid.clone()).collect();
    if pool.is_empty() {
        pool.push(GridDiagram::unknot());
    }
    let mut attempts: u64 = 0;
    let mut certify = |g: &GridDiagram,
                       found: &mut HashMap<&'static str, Found>,
                       rng: &mut ChaCha8Rng|
     -> Option<&'static str> {
        let d = g.to_planar();
        if d.crossing_count() > 18 {
            return None;
        }
        let alex_computed = alexander(&d).unwrap();
        let &k = wanted.get(&alex_computed)?;
        if found.contains_key(k.name) {
            return None;
        }
        let jt = jones_a_to_t(&jones(&d, DEFAULT_CROSSING_CAP).unwrap());
        audit_jones_identities(k.name, &jt, k);
        if !candidate_matches_target(&jt, k) {
            return None;
        }
        let g = minimize(g, 6 + rng.gen_range(0..4));
        if g.size() > 10 {
            eprintln!("note: {} candidate stuck at size {}", k.name, g.size());
            return None;
        }
        let drawn = g.to_planar().crossing_count() as i64;
        if drawn > k.crossings {
            eprintln!("note: {} seed draws with {drawn} crossings (crossing number {})", k.name, k.crossings);
        }
        let g = orient_chirality(k.name, g, &jt, &k.anchor);
        let key = key(&g, DEFAULT_CROSSING_CAP).unwrap();
        found.insert(k.name, Found { grid: g, key });
        Some(k.name)
    };

    while found.len() < PRIMES.len() {
        attempts += 1;
        let missing: Vec<&str> = PRIMES
            .iter()
            .filter(|k| !found.contains_key(k.name))
            .map(|k| k.name)
            .collect();
        if attempts % 2000 == 0 {
            eprintln!("{attempts} walk steps; missing: {missing:?}");
        }
        if attempts > 300_000 {
            panic!("search budget exhausted; still missing {missing:?}");
        }
        // alternate between targeted starts and free drift
        let start = if attempts % 2 == 0 {
            let target: &str = missing.choose(&mut rng).unwrap();
            let sources = sources_for(target, &found);
            match sources.choose(&mut rng) {
                Some(g) => g.clone(),
                None => pool.choose(&mut rng).unwrap().clone(),
            }
        } else {
            pool.choose(&mut rng).unwrap().clone()
        };
        let sp = ScramblePolicy { moves: 40, max_size: 13, ..Default::default() }.with_seed(rng.gen());
        let scrambled = scramble(&start, &sp);
        let bands = scrambled.band_moves(BandKind::NonCoherent);
        for band in &bands {
            let banded = scrambled.with_band(band).expect("enumerated move applies");
            let quick =
                SimplifyPolicy { rounds: 60, shuffle_moves: 40, patience: 10, rng_seed: rng.gen() };
            let g = simplify(&banded, &quick);
            if g.size() > 12 {
                continue;
            }
            if let Some(name) = certify(&g, &mut found, &mut rng) {
                pool.push(found[name].grid.clone());
                save_cache(&found);
                eprintln!("certified {name} after {attempts} walk steps (size {})", found[name].grid.size());
            } else if pool.len() < 400 {
                pool.push(g);
            } else {
                let slot = rng.gen_range(0..pool.len());
                pool[slot] = g;
            }
        }
    }
    save_cache(&found);

    // composites from connected sums
    let amphichiral: std::collections::HashSet<&str> = PRIMES
        .iter()
        .filter(|k| matches!(k.anchor, Anchor::Amphichiral))
        .map(|k| k.name)
        .collect();
    let prime_grid = |name: &str| -> GridDiagram {
        match name.strip_suffix('m') {
            Some(base) if !amphichiral.contains(base) => found[base].grid.mirror(),
            _ => found[name.trim_end_matches('m')].grid.clone(),
        }
    };
    let mut composite_found: Vec<(&str, GridDiagram)> = Vec::new();
    for &(name, factors) in COMPOSITES {
        let mut g = prime_grid(factors[0]);
        for f in &factors[1..] {
            g = g.connect_sum(&prime_grid(f)).unwrap();
        }
        let g = minimize(&g, 12);
        assert!(g.size() <= 10, "{name}: composite seed too large ({})", g.size());
        // multiplicativity audit against the factors
        let k = key(&g, DEFAULT_CROSSING_CAP).unwrap();
        let mut jones_expect = Laurent::one();
        let mut alex_expect = Laurent::one();
        for f in factors.iter() {
            let base = f.trim_end_matches('m');
            let fk = &found[base].key;
            let jf = if f.ends_with('m') && !amphichiral.contains(base) {
                fk.jones.invert_variable()
            } else {
                fk.jones.clone()
            };
            jones_expect = &jones_expect * &jf;
            alex_expect = &alex_expect * &fk.alexander;
        }
        assert_eq!(k.jones, jones_expect, "{name}: Jones not multiplicative");
        assert_eq!(k.alexander, alex_expect, "{name}: Alexander not multiplicative");
        eprintln!("certified {name} (size {})", g.size());
        composite_found.push((name, g));
    }

    // assemble output records
    #[derive(serde::Serialize)]
    struct SeedOut<'a> {
        name: &'a str,
        grid: &'a GridDiagram,
    }
    #[derive(serde::Serialize)]
    struct RefOut<'a> {
        name: &'a str,
        jones: String,
        alexander: String,
        amphichiral: bool,
    }

    let mut seeds: Vec<(String, GridDiagram)> = Vec::new();
    let mut refs: Vec<(String, InvariantKey, bool)> = Vec::new();

    seeds.push(("0_1".into(), GridDiagram::unknot()));
    refs.push(("0_1".into(), InvariantKey { jones: Laurent::one(), alexander: Laurent::one() }, true));

    for k in PRIMES {
        let f = &found[k.name];
        let amphi = matches!(k.anchor, Anchor::Amphichiral);
        seeds.push((k.name.into(), f.grid.clone()));
        refs.push((k.name.into(), f.key.clone(), amphi));
        if !amphi {
            refs.push((format!("{}m", k.name), f.key.mirrored(), false));
        }
    }
    for (name, g) in &composite_found {
        let k = key(g, DEFAULT_CROSSING_CAP).unwrap();
        let amphi = k == k.mirrored();
        seeds.push((name.to_string(), g.clone()));
        refs.push((name.to_string(), k.clone(), amphi));
        if !amphi {
            let mname = gridband_core::table::mirror_name(
                name,
                &amphichiral.iter().map(|s| s.to_string()).collect(),
            );
            refs.push((mname, k.mirrored(), false));
        }
    }

    let expected_amphichiral = ["3_1#3_1m", "4_1#4_1"];
    for (name, _, amphi) in &refs {
        if name.contains('#') {
            assert_eq!(*amphi, expected_amphichiral.contains(&name.as_str()),
                       "{name}: unexpected composite amphichirality");
        }
    }
    assert_eq!(refs.len(), 78, "expected 78 named classes, got {}", refs.len());

    let seeds_json = serde_json::to_string_pretty(
        &seeds.iter().map(|(n, g)| SeedOut { name: n, grid: g }).collect::<Vec<_>>(),
    )
    .unwrap();
    let refs_json = serde_json::to_string_pretty(
        &refs
            .iter()
            .map(|(n, k, a)| RefOut {
                name: n,
                jones: k.jones.to_text(),
                alexander: k.alexander.to_text(),
                amphichiral: *a,
            })
            .collect::<Vec<_>>(),
    )
    .unwrap();

    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    std::fs::write(dir.join("seeds.json"), seeds_json).unwrap();
    std::fs::write(dir.join("references.json"), refs_json).unwrap();
    eprintln!("wrote {} seeds and {} references", seeds.len(), refs.len());
}
