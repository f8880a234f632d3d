//! The reference table of knot types with at most eight crossings
//! (including connected sums, mirrors named with the `m` suffix) keyed by
//! the (Jones, Alexander) invariant pair, and identification of arbitrary
//! grids against it.
//!
//! Seed grids and reference polynomials are checked-in data. Building the
//! table recomputes every seed's key and demands an exact match with the
//! reference polynomials, and that the key-to-name map is injective, so the
//! bundled data is audited on every load.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::GridDiagram;
use crate::invariants::{key, InvariantError, InvariantKey, DEFAULT_CROSSING_CAP};
use crate::poly::Laurent;
use crate::scramble::{simplify, SimplifyPolicy};

/// Largest grid size allowed for a table seed; every knot type in the table
/// admits a grid at most this large.
pub const MAX_SEED_SIZE: usize = 10;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("seed for {class}: computed key does not match the reference polynomials")]
    SeedMismatch { class: String },
    #[error("invariant key collision between classes {a} and {b}; the key must be strengthened")]
    KeyCollision { a: String, b: String },
    #[error("class name {0} not in the table")]
    UnknownName(String),
    #[error("no reference polynomials for class {0}")]
    MissingReference(String),
    #[error("seed for {class} is invalid: {source}")]
    BadSeed { class: String, source: crate::grid::GridError },
    #[error("seed for {class} has {components} components; table classes are knots")]
    NotAKnot { class: String, components: usize },
    #[error("seed for {class} has size {size}, above the cap of {MAX_SEED_SIZE}")]
    SeedTooLarge { class: String, size: usize },
    #[error("mirror class {0} is missing from the reference data")]
    MirrorClosure(String),
    #[error("invariant computation failed for {class}: {source}")]
    Invariant { class: String, source: InvariantError },
    #[error("malformed table data: {0}")]
    Json(String),
}

/// A named knot type with its seed grid and invariant key.
#[derive(Debug, Clone)]
pub struct KnotClass {
    pub name: String,
    pub amphichiral: bool,
    pub seed: GridDiagram,
    pub key: InvariantKey,
}

#[derive(Serialize, Deserialize)]
struct SeedRecord {
    name: String,
    grid: GridDiagram,
}

#[derive(Serialize, Deserialize)]
struct ReferenceRecord {
    name: String,
    jones: Laurent,
    alexander: Laurent,
    #[serde(default)]
    amphichiral: bool,
}

/// Immutable lookup table from invariant keys to class names.
#[derive(Debug)]
pub struct KnotTable {
    classes: Vec<KnotClass>,
    by_name: HashMap<String, usize>,
    by_key: HashMap<InvariantKey, usize>,
    by_jones: HashMap<Laurent, Vec<usize>>,
    mirror_of: Vec<usize>,
}

/// Name components for canonical ordering: crossing number, table index,
/// mirror flag.
fn factor_sort_key(factor: &str) -> (u32, u32, u8) {
    let (body, m) = match factor.strip_suffix('m') {
        Some(b) => (b, 1),
        None => (factor, 0),
    };
    let (c, i) = body.split_once('_').unwrap_or((body, "0"));
    (c.parse().unwrap_or(u32::MAX), i.parse().unwrap_or(u32::MAX), m)
}

fn name_sort_key(name: &str) -> (Vec<(u32, u32, u8)>, String) {
    (name.split('#').map(factor_sort_key).collect(), name.to_string())
}

/// Canonical storage order for an unordered class pair: smaller knots first.
pub fn factor_pair_order(a: &str, b: &str) -> (String, String) {
    if name_sort_key(a) <= name_sort_key(b) {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

/// Canonical name of the mirror class: toggle the `m` suffix on every
/// non-amphichiral factor and re-sort the factors.
pub fn mirror_name(name: &str, amphichiral_primes: &std::collections::HashSet<String>) -> String {
    let mut factors: Vec<String> = name
        .split('#')
        .map(|f| {
            if amphichiral_primes.contains(f.trim_end_matches('m')) {
                f.to_string()
            } else if let Some(b) = f.strip_suffix('m') {
                b.to_string()
            } else {
                format!("{f}m")
            }
        })
        .collect();
    factors.sort_by_key(|f| factor_sort_key(f));
    factors.join("#")
}

impl KnotTable {
    /// Build and audit the table from the seed and reference data files.
    ///
    /// Seeds are supplied for base classes only; mirror-class seeds are the
    /// mirrored grids. Every computed key must equal its reference and the
    /// key map must be injective.
    pub fn build(seeds_json: &str, references_json: &str) -> Result<KnotTable, TableError> {
        let seeds: Vec<SeedRecord> =
            serde_json::from_str(seeds_json).map_err(|e| TableError::Json(e.to_string()))?;
        let refs: Vec<ReferenceRecord> =
            serde_json::from_str(references_json).map_err(|e| TableError::Json(e.to_string()))?;
        let ref_by_name: HashMap<&str, &ReferenceRecord> =
            refs.iter().map(|r| (r.name.as_str(), r)).collect();
        let amphichiral_primes: std::collections::HashSet<String> = refs
            .iter()
            .filter(|r| r.amphichiral && !r.name.contains('#'))
            .map(|r| r.name.trim_end_matches('m').to_string())
            .collect();

        let mut classes: Vec<KnotClass> = Vec::new();
        let mut add = |name: String, grid: GridDiagram| -> Result<(), TableError> {
            let reference = ref_by_name
                .get(name.as_str())
                .ok_or_else(|| TableError::MissingReference(name.clone()))?;
            let components = grid.components();
            if components != 1 {
                return Err(TableError::NotAKnot { class: name, components });
            }
            if grid.size() > MAX_SEED_SIZE {
                return Err(TableError::SeedTooLarge { class: name, size: grid.size() });
            }
            let computed = key(&grid, DEFAULT_CROSSING_CAP)
                .map_err(|source| TableError::Invariant { class: name.clone(), source })?;
            if computed.jones != reference.jones || computed.alexander != reference.alexander {
                return Err(TableError::SeedMismatch { class: name });
            }
            if reference.amphichiral && computed != computed.mirrored() {
                return Err(TableError::SeedMismatch { class: name });
            }
            classes.push(KnotClass {
                name,
                amphichiral: reference.amphichiral,
                seed: grid,
                key: computed,
            });
            Ok(())
        };

        for record in &seeds {
            add(record.name.clone(), record.grid.clone())?;
            let reference = ref_by_name
                .get(record.name.as_str())
                .ok_or_else(|| TableError::MissingReference(record.name.clone()))?;
            if !reference.amphichiral {
                let mname = mirror_name(&record.name, &amphichiral_primes);
                if !ref_by_name.contains_key(mname.as_str()) {
                    return Err(TableError::MirrorClosure(mname));
                }
                add(mname, record.grid.mirror())?;
            }
        }

        let mut by_name: HashMap<String, usize> = HashMap::new();
        let mut by_key: HashMap<InvariantKey, usize> = HashMap::new();
        let mut by_jones: HashMap<Laurent, Vec<usize>> = HashMap::new();
        for (idx, class) in classes.iter().enumerate() {
            if by_name.insert(class.name.clone(), idx).is_some() {
                return Err(TableError::Json(format!("duplicate class name {}", class.name)));
            }
            if let Some(&other) = by_key.get(&class.key) {
                return Err(TableError::KeyCollision {
                    a: classes[other].name.clone(),
                    b: class.name.clone(),
                });
            }
            by_key.insert(class.key.clone(), idx);
            by_jones.entry(class.key.jones.clone()).or_default().push(idx);
        }
        let mut mirror_of = vec![usize::MAX; classes.len()];
        for (idx, class) in classes.iter().enumerate() {
            let mname = mirror_name(&class.name, &amphichiral_primes);
            let midx = *by_name
                .get(&mname)
                .ok_or(TableError::MirrorClosure(mname))?;
            mirror_of[idx] = midx;
        }
        Ok(KnotTable { classes, by_name, by_key, by_jones, mirror_of })
    }

    /// The built-in table audited against the bundled reference data.
    pub fn standard() -> &'static KnotTable {
        static TABLE: OnceLock<KnotTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            KnotTable::build(
                include_str!("../data/seeds.json"),
                include_str!("../data/references.json"),
            )
            .expect("bundled table data must build")
        })
    }

    pub fn classes(&self) -> &[KnotClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&KnotClass> {
        self.by_name.get(name).map(|&i| &self.classes[i])
    }

    pub fn lookup_key(&self, k: &InvariantKey) -> Option<&KnotClass> {
        self.by_key.get(k).map(|&i| &self.classes[i])
    }

    /// Name of the mirror class.
    pub fn mirror_class(&self, name: &str) -> Result<&KnotClass, TableError> {
        let &idx = self.by_name.get(name).ok_or_else(|| TableError::UnknownName(name.into()))?;
        Ok(&self.classes[self.mirror_of[idx]])
    }

    /// True when a band from `a` to `b` would be chirally cosmetic: `b` is
    /// the mirror class of `a` (for amphichiral classes, `b == a`).
    pub fn is_cosmetic_pair(&self, a: &str, b: &str) -> Result<bool, TableError> {
        if !self.by_name.contains_key(b) {
            return Err(TableError::UnknownName(b.into()));
        }
        let mirror = self.mirror_class(a)?;
        let amphichiral = self.get(a).expect("checked above").amphichiral;
        if amphichiral {
            // the mirror class is the class itself; a true cosmetic event
            // still requires landing back on it
            Ok(a == b)
        } else {
            Ok(mirror.name == b)
        }
    }

    /// Simplify with escalating effort and look the key up. `None` means
    /// the grid's knot type is not in the table, the crossing count stayed
    /// above the cap after the final effort, or a key match could not be
    /// certified.
    ///
    /// A key match alone is not conclusive: knots outside the table can
    /// share both polynomials with a table class (the classical example has
    /// ten crossings and the key of 5_1). A match is therefore accepted
    /// only once the grid simplifies down to the matched class's seed size,
    /// a bound no larger-grid-number impostor can reach.
    pub fn identify(
        &self,
        g: &GridDiagram,
        efforts: &[SimplifyPolicy],
        cap: usize,
    ) -> Result<Option<&KnotClass>, TableError> {
        let components = g.components();
        if components != 1 {
            return Err(TableError::NotAKnot { class: "input".into(), components });
        }
        let mut current = g.clone();
        let mut matched: Option<usize> = None;
        for effort in efforts {
            current = simplify(&current, effort);
            if matched.is_none() {
                let d = current.to_planar();
                if d.crossing_count() > cap {
                    continue;
                }
                let jones = crate::invariants::jones(&d, cap)
                    .map_err(|source| TableError::Invariant { class: "input".into(), source })?;
                let Some(candidates) = self.by_jones.get(&jones) else {
                    return Ok(None);
                };
                let alexander = crate::invariants::alexander(&d)
                    .map_err(|source| TableError::Invariant { class: "input".into(), source })?;
                let full = InvariantKey { jones, alexander };
                match candidates.iter().copied().find(|&i| self.classes[i].key == full) {
                    Some(i) => matched = Some(i),
                    None => return Ok(None),
                }
            }
            if let Some(idx) = matched {
                if current.size() <= self.classes[idx].seed.size() {
                    return Ok(Some(&self.classes[idx]));
                }
            }
        }
        let Some(idx) = matched else { return Ok(None) };
        let bound = self.classes[idx].seed.size();
        let base = efforts.last().expect("efforts checked non-empty by callers");
        for extra in 0..6u64 {
            if current.size() <= bound {
                return Ok(Some(&self.classes[idx]));
            }
            current = simplify(&current, &base.with_seed(base.rng_seed ^ (0xc0ffee + extra)));
        }
        if current.size() <= bound {
            return Ok(Some(&self.classes[idx]));
        }
        Ok(None)
    }
}

/// Default escalation ladder for identification after band attachments.
pub fn default_efforts(seed: u64) -> Vec<SimplifyPolicy> {
    vec![
        SimplifyPolicy::default().with_seed(seed),
        SimplifyPolicy { rounds: 400, shuffle_moves: 80, patience: 40, rng_seed: seed ^ 0x9e3779b97f4a7c15 },
    ]
}
