//! Test-only oracles, kept independent of the production evaluation paths.
//!
//! The bracket oracle enumerates all 2^c smoothings with a union-find loop
//! count; the Alexander oracle evaluates the winding-number determinant of
//! the grid. Production code instead sweeps boundary pairings and runs Fox
//! calculus on the Wirtinger presentation, so agreement is meaningful.

use gridband_core::grid::GridDiagram;
use gridband_core::planar::{port, PlanarDiagram, PortDir};
use gridband_core::poly::Laurent;

/// Union-find over crossing ports.
struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, a: usize) -> usize {
        if self.0[a] != a {
            let r = self.find(self.0[a]);
            self.0[a] = r;
        }
        self.0[a]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

/// Kauffman bracket by brute-force state enumeration: for each of the 2^c
/// smoothing assignments, count loops and accumulate A^(a-b) δ^(loops-1).
pub fn bracket_state_sum(d: &PlanarDiagram) -> Laurent {
    let c = d.crossing_count();
    assert!(c <= 20, "state sum oracle is for small diagrams");
    let delta = Laurent::from_terms([(-1, 2), (-1, -2)]);
    let mut total = Laurent::zero();
    for state in 0u32..1 << c {
        let mut dsu = Dsu::new(4 * c);
        for ci in 0..c {
            let w = port(ci, PortDir::West);
            let s = port(ci, PortDir::South);
            let e = port(ci, PortDir::East);
            let n = port(ci, PortDir::North);
            if state >> ci & 1 == 0 {
                // A-smoothing
                dsu.union(w, s);
                dsu.union(e, n);
            } else {
                dsu.union(w, n);
                dsu.union(s, e);
            }
        }
        for p in 0..4 * c {
            let q = d.mate(p);
            dsu.union(p, q);
        }
        let mut loops = 0;
        for p in 0..4 * c {
            if dsu.find(p) == p {
                loops += 1;
            }
        }
        loops += d.free_loops();
        let a_count = c as i64 - 2 * state.count_ones() as i64;
        let term = delta.pow(loops as u32 - 1).scaled(1, a_count);
        total += &term;
    }
    total
}

/// Plain fraction-free determinant over the Laurent ring; local to the
/// oracle so the production path is not reused.
fn det(mut m: Vec<Vec<Laurent>>) -> Laurent {
    let n = m.len();
    if n == 0 {
        return Laurent::one();
    }
    let mut sign = 1i64;
    let mut prev = Laurent::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Laurent::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("fraction-free step divides");
            }
            m[i][k] = Laurent::zero();
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].scaled(sign, 0)
}

/// Alexander polynomial straight from the grid: the determinant of the
/// matrix (t^w(i,j)) over the n² lattice points, where w is the winding
/// number of the oriented link around the point, equals
/// ±t^k (1-t)^(n-1) Δ(t).
pub fn alexander_winding(g: &GridDiagram) -> Laurent {
    let n = g.size();
    // vertical arc of column c spans rows [lo, hi], oriented up iff the X
    // sits below the O
    let mut columns = Vec::with_capacity(n);
    for c in 0..n {
        let (xr, or) = (g.x_row(c), g.o_row(c));
        columns.push((xr.min(or), xr.max(or), xr < or));
    }
    let winding = |i: usize, j: usize| -> i64 {
        let mut w = 0i64;
        for (c, &(lo, hi, up)) in columns.iter().enumerate() {
            if c < j && lo < i && i <= hi {
                w += if up { 1 } else { -1 };
            }
        }
        w
    };
    let m: Vec<Vec<Laurent>> = (0..n)
        .map(|i| (0..n).map(|j| Laurent::monomial(1, winding(i, j))).collect())
        .collect();
    let raw = det(m);
    assert!(!raw.is_zero(), "winding determinant of a knot grid is nonzero");
    let one_minus_t = Laurent::from_terms([(1, 0), (-1, 1)]);
    let mut reduced = raw;
    for _ in 0..n - 1 {
        reduced = reduced
            .div_exact(&one_minus_t)
            .expect("winding determinant divisible by (1-t)^(n-1)");
    }
    // strip the unit: make it palindromic with value 1 at t = 1
    let at_one = reduced.eval_unit(1);
    assert!(at_one == 1 || at_one == -1, "unit normalization expects ±1 at t=1");
    let mut p = reduced.scaled(at_one as i64, 0);
    let (lo, hi) = (p.min_exp().unwrap(), p.max_exp().unwrap());
    assert_eq!((lo + hi) % 2, 0, "Alexander range must center on an integer");
    p.scale(1, -(lo + hi) / 2);
    assert!(p.is_palindromic(), "normalized Alexander is palindromic");
    p
}

/// Deterministic random knot grids for property tests: random marker
/// permutations filtered to single-component grids.
pub fn random_knot_grids(count: usize, max_size: usize, seed: u64) -> Vec<GridDiagram> {
    use rand::prelude::*;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(4..=max_size);
        let mut xs: Vec<usize> = (0..n).collect();
        xs.shuffle(&mut rng);
        let mut os: Vec<usize> = (0..n).collect();
        loop {
            os.shuffle(&mut rng);
            if xs.iter().zip(&os).all(|(a, b)| a != b) {
                break;
            }
        }
        let g = GridDiagram::new(xs, os).unwrap();
        if g.components() == 1 {
            out.push(g);
        }
    }
    out
}
