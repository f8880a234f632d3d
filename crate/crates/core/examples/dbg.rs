use gridband_core::explore::Witness;
use gridband_core::invariants::{alexander, jones, DEFAULT_CROSSING_CAP};
use gridband_core::scramble::{simplify, SimplifyPolicy};
use gridband_core::table::KnotTable;

fn main() {
    let line = std::fs::read_to_string("/tmp/suspect.jsonl").unwrap();
    let w: Witness = serde_json::from_str(line.lines().next().unwrap()).unwrap();
    let table = KnotTable::standard();
    let banded = w.grid.with_band(&w.band).unwrap();
    println!("band result size {}", banded.size());
    // simplify very hard with many seeds, track the smallest grid
    let mut best = banded.clone();
    for seed in 0..40u64 {
        let p = SimplifyPolicy { rounds: 500, shuffle_moves: 80, patience: 50, rng_seed: seed };
        let s = simplify(&best, &p);
        if s.size() < best.size() {
            best = s;
        }
    }
    let d = best.to_planar();
    println!(
        "hard-simplified: size {}, drawn crossings {}",
        best.size(),
        d.crossing_count()
    );
    let j = jones(&d, DEFAULT_CROSSING_CAP).unwrap();
    let a = alexander(&d).unwrap();
    println!("jones    = {j}");
    println!("alexander= {a}");
    let five = table.get("5_1").unwrap();
    println!("5_1 jones = {}", five.key.jones);
    println!("5_1 alex  = {}", five.key.alexander);
    println!("key match: {}", j == five.key.jones && a == five.key.alexander);
    println!("grid: {}", best.to_json());
    println!("{best}");
}
