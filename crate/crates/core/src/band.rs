//! Band attachments as marker swaps between cyclically adjacent grid lines.
//!
//! Swapping two markers of the same kind (both O or both X) between
//! adjacent rows or columns attaches a coherent band: on a knot it always
//! changes the component count by one. Swapping an X with an O attaches a
//! non-coherent band: the component count is unchanged, but the grid is left
//! with two same-type markers per line, so the whole diagram is re-decorated
//! by erasing marker types, tracing the closed curve and re-assigning O at
//! the tail and X at the head of every horizontal traversal.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::{Axis, GridDiagram, UnorientedGrid};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BandError {
    #[error("swap would place X and O in one square (line {line})")]
    SquareCollision { line: usize },
    #[error("non-coherent band attachment requires a knot; the grid has {0} components")]
    MultiComponent(usize),
    #[error("pair index {i} out of range for grid size {n}")]
    IndexOutOfRange { i: usize, n: usize },
}

/// The four marker-swap rewrites on an adjacent pair of lines.
///
/// `NonCoherentA` swaps the X of line `i` with the O of line `i+1`;
/// `NonCoherentB` swaps the O of line `i` with the X of line `i+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BandVariant {
    #[serde(rename = "cO")]
    CoherentO,
    #[serde(rename = "cX")]
    CoherentX,
    #[serde(rename = "ncA")]
    NonCoherentA,
    #[serde(rename = "ncB")]
    NonCoherentB,
}

impl BandVariant {
    pub const ALL: [BandVariant; 4] = [
        BandVariant::CoherentO,
        BandVariant::CoherentX,
        BandVariant::NonCoherentA,
        BandVariant::NonCoherentB,
    ];

    pub fn is_coherent(self) -> bool {
        matches!(self, BandVariant::CoherentO | BandVariant::CoherentX)
    }
}

/// Which kinds of band moves to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BandKind {
    Coherent,
    NonCoherent,
    All,
}

impl BandKind {
    fn admits(self, v: BandVariant) -> bool {
        match self {
            BandKind::Coherent => v.is_coherent(),
            BandKind::NonCoherent => !v.is_coherent(),
            BandKind::All => true,
        }
    }
}

/// One two-line marker rewrite: the combinatorial stand-in for a band.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BandMove {
    pub axis: Axis,
    pub i: usize,
    pub variant: BandVariant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandClass {
    Coherent,
    NonCoherent,
}

impl GridDiagram {
    /// Apply a band move. Coherent swaps exchange the two same-type markers
    /// between the lines; non-coherent swaps exchange an X with an O and
    /// re-decorate the resulting unoriented grid.
    pub fn with_band(&self, m: &BandMove) -> Result<GridDiagram, BandError> {
        let n = self.size();
        if m.i >= n {
            return Err(BandError::IndexOutOfRange { i: m.i, n });
        }
        match m.axis {
            Axis::Col => {
                let row_move = BandMove { axis: Axis::Row, ..*m };
                Ok(self.transposed().with_band(&row_move)?.transposed())
            }
            Axis::Row => self.row_band(m.i, m.variant),
        }
    }

    fn row_band(&self, i: usize, variant: BandVariant) -> Result<GridDiagram, BandError> {
        let n = self.size();
        let j = (i + 1) % n;
        match variant {
            BandVariant::CoherentO | BandVariant::CoherentX => {
                let mut xs = self.xs().to_vec();
                let mut os = self.os().to_vec();
                match variant {
                    BandVariant::CoherentO => os.swap(i, j),
                    _ => xs.swap(i, j),
                }
                if xs[i] == os[i] {
                    return Err(BandError::SquareCollision { line: i });
                }
                if xs[j] == os[j] {
                    return Err(BandError::SquareCollision { line: j });
                }
                Ok(GridDiagram::from_parts_unchecked(xs, os))
            }
            BandVariant::NonCoherentA | BandVariant::NonCoherentB => {
                let c = self.components();
                if c != 1 {
                    return Err(BandError::MultiComponent(c));
                }
                let mut rows: Vec<[usize; 2]> =
                    (0..n).map(|r| [self.xs()[r], self.os()[r]]).collect();
                match variant {
                    // X of line i trades rows with the O of line i+1
                    BandVariant::NonCoherentA => {
                        rows[i] = [self.os()[i], self.os()[j]];
                        rows[j] = [self.xs()[i], self.xs()[j]];
                    }
                    // O of line i trades rows with the X of line i+1
                    _ => {
                        rows[i] = [self.xs()[i], self.xs()[j]];
                        rows[j] = [self.os()[i], self.os()[j]];
                    }
                }
                let unoriented = UnorientedGrid::new(rows)
                    .expect("marker swap keeps two markers per line");
                match unoriented.orient() {
                    Some(g) => Ok(g),
                    None => Err(BandError::MultiComponent(unoriented.cycle_count())),
                }
            }
        }
    }

    /// All band moves of the requested kind whose application succeeds, over
    /// every cyclically adjacent row pair and column pair.
    pub fn band_moves(&self, kind: BandKind) -> Vec<BandMove> {
        let mut out = Vec::new();
        for axis in [Axis::Row, Axis::Col] {
            for i in 0..self.size() {
                for variant in BandVariant::ALL {
                    if !kind.admits(variant) {
                        continue;
                    }
                    let m = BandMove { axis, i, variant };
                    if self.with_band(&m).is_ok() {
                        out.push(m);
                    }
                }
            }
        }
        out
    }

    /// Class and component delta of an applicable move.
    pub fn classify_band(&self, m: &BandMove) -> Result<(BandClass, i64), BandError> {
        let before = self.components() as i64;
        let after = self.with_band(m)?.components() as i64;
        let class = if m.variant.is_coherent() { BandClass::Coherent } else { BandClass::NonCoherent };
        Ok((class, after - before))
    }
}
