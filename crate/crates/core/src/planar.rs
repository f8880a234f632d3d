//! Planar link diagrams extracted from grids.
//!
//! A grid draws its link with one crossing wherever a horizontal segment
//! strictly spans a column whose vertical segment strictly spans that row.
//! The vertical strand is always the overpass. Each crossing exposes four
//! ports (west, south, east, north); arcs join ports pairwise, and closed
//! components that meet no crossing are counted separately.

use crate::grid::GridDiagram;

/// Compass port of a crossing, in counterclockwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PortDir {
    West = 0,
    South = 1,
    East = 2,
    North = 3,
}

pub const PORT_DIRS: [PortDir; 4] = [PortDir::West, PortDir::South, PortDir::East, PortDir::North];

/// Global port id: `4 * crossing + direction`.
pub type PortId = usize;

pub fn port(crossing: usize, dir: PortDir) -> PortId {
    4 * crossing + dir as usize
}

pub fn port_crossing(p: PortId) -> usize {
    p / 4
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    /// Row of the horizontal (under) strand.
    pub row: usize,
    /// Column of the vertical (over) strand.
    pub col: usize,
    /// +1 or -1 from the two strand orientations.
    pub sign: i8,
    /// True when the under strand runs west-to-east (O west of X).
    pub under_east: bool,
    /// True when the over strand runs south-to-north (X below O).
    pub over_north: bool,
}

/// A 4-valent diagram: crossings plus an arc involution on their ports.
#[derive(Debug, Clone)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    /// `mate[p]` is the port at the far end of the arc leaving port `p`.
    mate: Vec<PortId>,
    /// Closed components that pass through no crossing.
    free_loops: usize,
    components: usize,
}

impl PlanarDiagram {
    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn mate(&self, p: PortId) -> PortId {
        self.mate[p]
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Entry port of the under strand.
    pub fn under_in(&self, ci: usize) -> PortId {
        let c = &self.crossings[ci];
        port(ci, if c.under_east { PortDir::West } else { PortDir::East })
    }

    pub fn under_out(&self, ci: usize) -> PortId {
        let c = &self.crossings[ci];
        port(ci, if c.under_east { PortDir::East } else { PortDir::West })
    }

    /// Entry port of the over strand.
    pub fn over_in(&self, ci: usize) -> PortId {
        let c = &self.crossings[ci];
        port(ci, if c.over_north { PortDir::South } else { PortDir::North })
    }

    pub fn over_out(&self, ci: usize) -> PortId {
        let c = &self.crossings[ci];
        port(ci, if c.over_north { PortDir::North } else { PortDir::South })
    }
}

impl GridDiagram {
    /// Extract the planar diagram: crossings, arc connectivity, orientation
    /// data and signs. Component count matches `components()`.
    pub fn to_planar(&self) -> PlanarDiagram {
        let n = self.size();
        let mut x_row = vec![0usize; n];
        let mut o_row = vec![0usize; n];
        for r in 0..n {
            x_row[self.xs()[r]] = r;
            o_row[self.os()[r]] = r;
        }
        let row_span = |r: usize| {
            let (a, b) = (self.xs()[r], self.os()[r]);
            (a.min(b), a.max(b))
        };
        let col_span = |c: usize| {
            let (a, b) = (x_row[c], o_row[c]);
            (a.min(b), a.max(b))
        };

        let mut crossings = Vec::new();
        // crossing index per (row, col) for arc building
        let mut at = std::collections::HashMap::new();
        for r in 0..n {
            let (lo, hi) = row_span(r);
            for c in lo + 1..hi {
                let (clo, chi) = col_span(c);
                if clo < r && r < chi {
                    let under_east = self.os()[r] < self.xs()[r];
                    let over_north = x_row[c] < o_row[c];
                    // sign = +1 iff rotating the over direction 90 degrees
                    // counterclockwise gives the under direction
                    let hx: i8 = if under_east { 1 } else { -1 };
                    let vy: i8 = if over_north { 1 } else { -1 };
                    at.insert((r, c), crossings.len());
                    crossings.push(Crossing { row: r, col: c, sign: -hx * vy, under_east, over_north });
                }
            }
        }

        // Walk every component in its orientation, collecting the port
        // passage sequence; consecutive passages bound one arc.
        let mut mate = vec![usize::MAX; 4 * crossings.len()];
        let mut free_loops = 0;
        let mut components = 0;
        let mut seen_row = vec![false; n];
        for r0 in 0..n {
            if seen_row[r0] {
                continue;
            }
            components += 1;
            let mut passages: Vec<(PortId, PortId)> = Vec::new(); // (enter, exit)
            let mut r = r0;
            loop {
                if seen_row[r] {
                    break;
                }
                seen_row[r] = true;
                // horizontal arc of row r, from O to X
                let (oc, xc) = (self.os()[r], self.xs()[r]);
                let mut cols: Vec<usize> = (oc.min(xc) + 1..oc.max(xc))
                    .filter(|&c| at.contains_key(&(r, c)))
                    .collect();
                let east = oc < xc;
                if !east {
                    cols.reverse();
                }
                for c in cols {
                    let ci = at[&(r, c)];
                    passages.push((self.via_under(&crossings, ci, true), self.via_under(&crossings, ci, false)));
                }
                // vertical arc of column xc, from X to O
                let (top, bot) = (x_row[xc].max(o_row[xc]), x_row[xc].min(o_row[xc]));
                let mut rows: Vec<usize> = (bot + 1..top)
                    .filter(|&rr| at.contains_key(&(rr, xc)))
                    .collect();
                let north = x_row[xc] < o_row[xc];
                if !north {
                    rows.reverse();
                }
                for rr in rows {
                    let ci = at[&(rr, xc)];
                    passages.push((self.via_over(&crossings, ci, true), self.via_over(&crossings, ci, false)));
                }
                r = o_row[xc];
            }
            if passages.is_empty() {
                free_loops += 1;
            } else {
                for w in 0..passages.len() {
                    let exit = passages[w].1;
                    let enter = passages[(w + 1) % passages.len()].0;
                    mate[exit] = enter;
                    mate[enter] = exit;
                }
            }
        }
        debug_assert!(mate.iter().all(|&m| m != usize::MAX));
        debug_assert_eq!(components, self.components());
        PlanarDiagram { crossings, mate, free_loops, components }
    }

    fn via_under(&self, crossings: &[Crossing], ci: usize, entering: bool) -> PortId {
        let c = &crossings[ci];
        let west = port(ci, PortDir::West);
        let east = port(ci, PortDir::East);
        if c.under_east == entering {
            west
        } else {
            east
        }
    }

    fn via_over(&self, crossings: &[Crossing], ci: usize, entering: bool) -> PortId {
        let c = &crossings[ci];
        let south = port(ci, PortDir::South);
        let north = port(ci, PortDir::North);
        if c.over_north == entering {
            south
        } else {
            north
        }
    }
}
