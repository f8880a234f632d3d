//! Grid diagrams: the central combinatorial object.
//!
//! A grid diagram of size `n` is an `n x n` array with one X and one O
//! marking per row and per column, no two in the same small square. Rows are
//! indexed bottom to top, columns left to right. Closing each row with a
//! horizontal arc from its O to its X, and each column with a vertical arc
//! from its X to its O, with vertical strands crossing over horizontal ones,
//! draws an oriented link diagram.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GridError {
    #[error("grid size {0} is below the minimum of 2")]
    TooSmall(usize),
    #[error("marker arrays have mismatched lengths ({xs} X rows vs {os} O rows)")]
    LengthMismatch { xs: usize, os: usize },
    #[error("{kind} columns do not form a permutation (column {col} repeats)")]
    NotAPermutation { kind: MarkerKind, col: usize },
    #[error("X and O share the square at row {row}")]
    SquareCollision { row: usize },
    #[error("operation requires a knot, but the grid has {0} components")]
    NotAKnot(usize),
    #[error("invalid grid JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MarkerKind {
    X,
    O,
}

impl std::fmt::Display for MarkerKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MarkerKind::X => f.write_str("X"),
            MarkerKind::O => f.write_str("O"),
        }
    }
}

/// Row or column axis. Column operations act on the transposed grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axis {
    #[serde(rename = "row")]
    Row,
    #[serde(rename = "col")]
    Col,
}

/// A validated grid diagram.
///
/// Immutable after construction; all operations return new grids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GridDiagram {
    n: usize,
    xs: Vec<usize>,
    os: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawGrid {
    n: usize,
    x: Vec<usize>,
    o: Vec<usize>,
}

impl GridDiagram {
    /// Validate raw marker data. `xs[r]` / `os[r]` are the X / O column of
    /// row `r`, row 0 at the bottom.
    pub fn new(xs: Vec<usize>, os: Vec<usize>) -> Result<Self, GridError> {
        if xs.len() != os.len() {
            return Err(GridError::LengthMismatch { xs: xs.len(), os: os.len() });
        }
        let n = xs.len();
        if n < 2 {
            return Err(GridError::TooSmall(n));
        }
        for (kind, cols) in [(MarkerKind::X, &xs), (MarkerKind::O, &os)] {
            let mut seen = vec![false; n];
            for &c in cols.iter() {
                if c >= n || seen[c] {
                    return Err(GridError::NotAPermutation { kind, col: c });
                }
                seen[c] = true;
            }
        }
        if let Some(row) = (0..n).find(|&r| xs[r] == os[r]) {
            return Err(GridError::SquareCollision { row });
        }
        Ok(GridDiagram { n, xs, os })
    }

    /// The canonical size-2 unknot grid.
    pub fn unknot() -> Self {
        GridDiagram { n: 2, xs: vec![0, 1], os: vec![1, 0] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn xs(&self) -> &[usize] {
        &self.xs
    }

    pub fn os(&self) -> &[usize] {
        &self.os
    }

    pub fn x_col(&self, row: usize) -> usize {
        self.xs[row]
    }

    pub fn o_col(&self, row: usize) -> usize {
        self.os[row]
    }

    /// Row of the X marker in column `col`.
    pub fn x_row(&self, col: usize) -> usize {
        self.xs.iter().position(|&c| c == col).expect("valid grid")
    }

    /// Row of the O marker in column `col`.
    pub fn o_row(&self, col: usize) -> usize {
        self.os.iter().position(|&c| c == col).expect("valid grid")
    }

    /// Number of link components: cycles of the successor map
    /// `r -> o_row(xs[r])` (follow the horizontal arc of row `r` to its X,
    /// then the vertical arc of that column to its O).
    pub fn components(&self) -> usize {
        let mut o_row = vec![0usize; self.n];
        for (r, &c) in self.os.iter().enumerate() {
            o_row[c] = r;
        }
        let mut seen = vec![false; self.n];
        let mut cycles = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut r = start;
            while !seen[r] {
                seen[r] = true;
                r = o_row[self.xs[r]];
            }
        }
        cycles
    }

    /// Horizontal reflection: the mirror knot.
    pub fn mirror(&self) -> Self {
        GridDiagram {
            n: self.n,
            xs: self.xs.iter().map(|&c| self.n - 1 - c).collect(),
            os: self.os.iter().map(|&c| self.n - 1 - c).collect(),
        }
    }

    /// Reflect across the main diagonal, exchanging the roles of rows and
    /// columns. Used internally to run row algorithms on columns; preserves
    /// the knot type (the reflection and the over/under flip cancel).
    pub fn transposed(&self) -> Self {
        let mut xs = vec![0usize; self.n];
        let mut os = vec![0usize; self.n];
        for r in 0..self.n {
            xs[self.xs[r]] = r;
            os[self.os[r]] = r;
        }
        GridDiagram { n: self.n, xs, os }
    }

    pub(crate) fn shift_cols(&self, k: usize) -> Self {
        let k = k % self.n;
        GridDiagram {
            n: self.n,
            xs: self.xs.iter().map(|&c| (c + k) % self.n).collect(),
            os: self.os.iter().map(|&c| (c + k) % self.n).collect(),
        }
    }

    pub(crate) fn from_parts_unchecked(xs: Vec<usize>, os: Vec<usize>) -> Self {
        debug_assert!(GridDiagram::new(xs.clone(), os.clone()).is_ok());
        let n = xs.len();
        GridDiagram { n, xs, os }
    }

    /// Connected sum. Places `b`'s block diagonally above-right of `a`'s,
    /// merging one row: `a` is rotated so its top-row X sits in the top-right
    /// corner, `b` so its bottom-row O sits in the bottom-left corner, then
    /// the two corner markers are deleted and the cut rows fused.
    pub fn connect_sum(&self, other: &GridDiagram) -> Result<Self, GridError> {
        for g in [self, other] {
            let c = g.components();
            if c != 1 {
                return Err(GridError::NotAKnot(c));
            }
        }
        let m = self.n;
        let k = other.n;
        // xs[m-1] == m-1 after the shift
        let a = self.shift_cols(m - 1 - self.xs[m - 1]);
        // os[0] == 0 after the shift
        let b = other.shift_cols(k - other.os[0]);
        let n = m + k - 1;
        let mut xs = Vec::with_capacity(n);
        let mut os = Vec::with_capacity(n);
        for r in 0..m - 1 {
            xs.push(a.xs[r]);
            os.push(a.os[r]);
        }
        // fused row: a's top O and b's bottom X
        xs.push(b.xs[0] + m - 1);
        os.push(a.os[m - 1]);
        for r in 1..k {
            xs.push(b.xs[r] + m - 1);
            os.push(b.os[r] + m - 1);
        }
        let joined = GridDiagram::new(xs, os).expect("connected sum is a valid grid");
        debug_assert_eq!(joined.components(), 1);
        Ok(joined)
    }

    /// Serialize to the JSON grid format `{"n": int, "x": [...], "o": [...]}`
    /// with arrays in bottom-to-top row order. Byte-stable for a fixed grid.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&RawGrid { n: self.n, x: self.xs.clone(), o: self.os.clone() })
            .expect("grid serialization cannot fail")
    }

    /// Parse the JSON grid format, validating all grid invariants.
    pub fn from_json(text: &str) -> Result<Self, GridError> {
        let raw: RawGrid =
            serde_json::from_str(text).map_err(|e| GridError::Json(e.to_string()))?;
        if raw.x.len() != raw.n || raw.o.len() != raw.n {
            return Err(GridError::LengthMismatch { xs: raw.x.len(), os: raw.o.len() });
        }
        GridDiagram::new(raw.x, raw.o)
    }
}

impl std::fmt::Debug for GridDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GridDiagram(n={}, xs={:?}, os={:?})", self.n, self.xs, self.os)
    }
}

impl std::fmt::Display for GridDiagram {
    /// ASCII picture, top row first.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in (0..self.n).rev() {
            for c in 0..self.n {
                let ch = if self.xs[r] == c {
                    'X'
                } else if self.os[r] == c {
                    'O'
                } else {
                    '.'
                };
                write!(f, "{ch} ")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Serialize for GridDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RawGrid { n: self.n, x: self.xs.clone(), o: self.os.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GridDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawGrid::deserialize(d)?;
        if raw.x.len() != raw.n || raw.o.len() != raw.n {
            return Err(serde::de::Error::custom("marker arrays disagree with n"));
        }
        GridDiagram::new(raw.x, raw.o).map_err(serde::de::Error::custom)
    }
}

/// Type-erased grid: each row holds the columns of its two markers. Used
/// transiently while re-decorating after a non-coherent marker swap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnorientedGrid {
    rows: Vec<[usize; 2]>,
}

impl UnorientedGrid {
    /// Build from per-row marker pairs. Every row and column must contain
    /// exactly two markers. Pairs are stored sorted, so equality of
    /// `UnorientedGrid`s is equality of type-erased marker layouts.
    pub fn new(mut rows: Vec<[usize; 2]>) -> Option<Self> {
        let n = rows.len();
        let mut col_count = vec![0usize; n];
        for row in &mut rows {
            if row[0] == row[1] || row[0] >= n || row[1] >= n {
                return None;
            }
            row.sort_unstable();
            col_count[row[0]] += 1;
            col_count[row[1]] += 1;
        }
        if col_count.iter().any(|&c| c != 2) {
            return None;
        }
        Some(UnorientedGrid { rows })
    }

    pub fn from_grid(g: &GridDiagram) -> Self {
        UnorientedGrid::new((0..g.size()).map(|r| [g.x_col(r), g.o_col(r)]).collect())
            .expect("valid grids erase to valid layouts")
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[[usize; 2]] {
        &self.rows
    }

    /// Trace the closed curves: alternate row arcs and column arcs. Returns
    /// the number of cycles.
    pub fn cycle_count(&self) -> usize {
        let n = self.rows.len();
        // markers indexed (row, which of the two)
        let mut col_mates: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (r, pair) in self.rows.iter().enumerate() {
            for (i, &c) in pair.iter().enumerate() {
                col_mates[c].push((r, i));
            }
        }
        let mut seen = vec![[false; 2]; n];
        let mut cycles = 0;
        for r0 in 0..n {
            for i0 in 0..2 {
                if seen[r0][i0] {
                    continue;
                }
                cycles += 1;
                let (mut r, mut i) = (r0, i0);
                loop {
                    if seen[r][i] {
                        break;
                    }
                    seen[r][i] = true;
                    // cross the row to the sibling marker
                    let j = 1 - i;
                    seen[r][j] = true;
                    // then travel the sibling's column to its other marker
                    let c = self.rows[r][j];
                    let (nr, ni) = if col_mates[c][0] == (r, j) {
                        col_mates[c][1]
                    } else {
                        col_mates[c][0]
                    };
                    r = nr;
                    i = ni;
                }
            }
        }
        cycles
    }

    /// Re-decorate into an oriented grid: walk the single closed curve and
    /// place an O at the tail and an X at the head of every horizontal
    /// traversal. Returns `None` when the trace has more than one cycle.
    ///
    /// The walk starts in row 0 at its left marker and first moves
    /// horizontally, which makes the decoration deterministic. Reversing the
    /// traversal direction would give the reverse-oriented knot; callers
    /// disregard orientation.
    pub fn orient(&self) -> Option<GridDiagram> {
        if self.cycle_count() != 1 {
            return None;
        }
        let n = self.rows.len();
        let mut col_mates: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (r, pair) in self.rows.iter().enumerate() {
            for &c in pair {
                col_mates[c].push(r);
            }
        }
        let mut xs = vec![usize::MAX; n];
        let mut os = vec![usize::MAX; n];
        // current marker: (row, col); about to traverse the row
        let (mut r, mut c) = (0usize, *self.rows[0].iter().min().unwrap());
        for _ in 0..n {
            os[r] = c;
            let head = if self.rows[r][0] == c { self.rows[r][1] } else { self.rows[r][0] };
            xs[r] = head;
            // vertical arc in `head`'s column to the other marker of that column
            let next_row = if col_mates[head][0] == r { col_mates[head][1] } else { col_mates[head][0] };
            r = next_row;
            c = head;
        }
        debug_assert!(xs.iter().all(|&v| v != usize::MAX));
        Some(GridDiagram::from_parts_unchecked(xs, os))
    }
}
