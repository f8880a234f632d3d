//! Knot-type-preserving grid moves (translation, commutation,
//! stabilization, destabilization) plus the interleaved-exchange crossing
//! change.
//!
//! Adjacency is cyclic throughout: the pair `(n-1, 0)` counts as adjacent,
//! which treats the grid as drawn on a torus and matches translation
//! invariance. Column moves act through the transposed grid.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::{Axis, GridDiagram, MarkerKind};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MoveError {
    #[error("rows/columns {i} and {j} are {found:?}; commutation requires Disjoint or Nested spans")]
    IllegalCommutation { i: usize, j: usize, found: Interleaving },
    #[error("rows/columns {i} and {j} are {found:?}; exchange requires Interleaved spans")]
    NotInterleaved { i: usize, j: usize, found: Interleaving },
    #[error("no destabilization at block ({row}, {col})")]
    InvalidPosition { row: usize, col: usize },
}

/// Classification of the marker spans of two cyclically adjacent lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Interleaving {
    Disjoint,
    Nested,
    Interleaved,
    SharedColumn,
}

/// Corner of the 2x2 block created by a stabilization; names the square
/// holding the lone opposite-type marker, with S/W toward lower indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Corner {
    SW,
    SE,
    NW,
    NE,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::SW, Corner::SE, Corner::NW, Corner::NE];

    fn offsets(self) -> (usize, usize) {
        match self {
            Corner::SW => (0, 0),
            Corner::SE => (0, 1),
            Corner::NW => (1, 0),
            Corner::NE => (1, 1),
        }
    }
}

/// A stabilization: replace one marker by three in a fresh 2x2 block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabSpec {
    pub row: usize,
    pub kind: MarkerKind,
    pub corner: Corner,
}

/// A 2x2 block holding exactly three markers: rows `(row, row+1 mod n)`,
/// columns `(col, col+1 mod n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DestabPos {
    pub row: usize,
    pub col: usize,
}

impl GridDiagram {
    /// Cyclic rotation of rows or columns by `k`; the grid on row `r` of the
    /// result is the input's row `(r + k) mod n`.
    pub fn translated(&self, axis: Axis, k: i64) -> GridDiagram {
        match axis {
            Axis::Row => {
                let n = self.size();
                let k = k.rem_euclid(n as i64) as usize;
                let pick = |v: &[usize], r: usize| v[(r + k) % n];
                let xs = (0..n).map(|r| pick(self.xs(), r)).collect();
                let os = (0..n).map(|r| pick(self.os(), r)).collect();
                GridDiagram::from_parts_unchecked(xs, os)
            }
            Axis::Col => self.transposed().translated(Axis::Row, k).transposed(),
        }
    }

    /// Classify the cyclically adjacent pair `(i, i+1 mod n)` of rows or
    /// columns by how their marker spans overlap.
    pub fn interleaving(&self, axis: Axis, i: usize) -> Interleaving {
        match axis {
            Axis::Col => self.transposed().interleaving(Axis::Row, i),
            Axis::Row => {
                let n = self.size();
                let j = (i + 1) % n;
                let (a1, b1) = (self.xs()[i].min(self.os()[i]), self.xs()[i].max(self.os()[i]));
                let (a2, b2) = (self.xs()[j].min(self.os()[j]), self.xs()[j].max(self.os()[j]));
                if a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2 {
                    return Interleaving::SharedColumn;
                }
                if b1 < a2 || b2 < a1 {
                    return Interleaving::Disjoint;
                }
                let inside = |x: usize, lo: usize, hi: usize| lo < x && x < hi;
                let lower_in_upper = [a1, b1].iter().filter(|&&x| inside(x, a2, b2)).count();
                let upper_in_lower = [a2, b2].iter().filter(|&&x| inside(x, a1, b1)).count();
                match (lower_in_upper, upper_in_lower) {
                    (2, 0) | (0, 2) => Interleaving::Nested,
                    (1, 1) => Interleaving::Interleaved,
                    other => unreachable!("impossible span overlap {other:?}"),
                }
            }
        }
    }

    fn swapped_lines(&self, axis: Axis, i: usize) -> GridDiagram {
        match axis {
            Axis::Col => self.transposed().swapped_lines(Axis::Row, i).transposed(),
            Axis::Row => {
                let j = (i + 1) % self.size();
                let mut xs = self.xs().to_vec();
                let mut os = self.os().to_vec();
                xs.swap(i, j);
                os.swap(i, j);
                GridDiagram::from_parts_unchecked(xs, os)
            }
        }
    }

    /// Exchange two adjacent non-interleaved lines: a planar isotopy.
    pub fn commuted(&self, axis: Axis, i: usize) -> Result<GridDiagram, MoveError> {
        let found = self.interleaving(axis, i);
        match found {
            Interleaving::Disjoint | Interleaving::Nested => Ok(self.swapped_lines(axis, i)),
            _ => Err(MoveError::IllegalCommutation { i, j: (i + 1) % self.size(), found }),
        }
    }

    /// Exchange two adjacent interleaved lines: a crossing change on the
    /// underlying link. Involutive at a fixed position.
    pub fn cross_exchanged(&self, axis: Axis, i: usize) -> Result<GridDiagram, MoveError> {
        let found = self.interleaving(axis, i);
        match found {
            Interleaving::Interleaved => Ok(self.swapped_lines(axis, i)),
            _ => Err(MoveError::NotInterleaved { i, j: (i + 1) % self.size(), found }),
        }
    }

    /// Markers inside the 2x2 block at `pos`, as (row, col, kind) triples.
    fn block_markers(&self, pos: DestabPos) -> Vec<(usize, usize, MarkerKind)> {
        let n = self.size();
        let rows = [pos.row, (pos.row + 1) % n];
        let cols = [pos.col, (pos.col + 1) % n];
        let mut out = Vec::with_capacity(4);
        for &r in &rows {
            for &c in &cols {
                if self.xs()[r] == c {
                    out.push((r, c, MarkerKind::X));
                }
                if self.os()[r] == c {
                    out.push((r, c, MarkerKind::O));
                }
            }
        }
        out
    }

    /// All 2x2 blocks containing exactly three markers, each collapsible by
    /// `destabilized`. Empty at the minimum size.
    pub fn destabilizations(&self) -> Vec<DestabPos> {
        let n = self.size();
        if n <= 2 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for row in 0..n {
            for col in 0..n {
                let pos = DestabPos { row, col };
                if self.block_markers(pos).len() == 3 {
                    out.push(pos);
                }
            }
        }
        out
    }

    /// Collapse a three-marker 2x2 block, shrinking the grid by one. The
    /// lone minority-type marker sits where the block's full row and full
    /// column meet; its row and column are deleted and the majority marker
    /// pair contracts to the diagonally opposite square.
    pub fn destabilized(&self, pos: DestabPos) -> Result<GridDiagram, MoveError> {
        let n = self.size();
        let invalid = MoveError::InvalidPosition { row: pos.row, col: pos.col };
        if n <= 2 || pos.row >= n || pos.col >= n {
            return Err(invalid);
        }
        let markers = self.block_markers(pos);
        if markers.len() != 3 {
            return Err(invalid);
        }
        let rows = [pos.row, (pos.row + 1) % n];
        let cols = [pos.col, (pos.col + 1) % n];
        // the middle marker lies in the block row and column that each hold
        // two of the three markers
        let full_row = *rows
            .iter()
            .find(|&&r| markers.iter().filter(|m| m.0 == r).count() == 2)
            .expect("three markers in a 2x2 block fill one row");
        let full_col = *cols
            .iter()
            .find(|&&c| markers.iter().filter(|m| m.1 == c).count() == 2)
            .expect("three markers in a 2x2 block fill one column");
        let other_row = rows[usize::from(rows[0] == full_row)];
        let other_col = cols[usize::from(cols[0] == full_col)];
        let &(_, _, majority) = markers
            .iter()
            .find(|&&(r, c, _)| r == other_row && c == full_col)
            .expect("corner marker of the hook");

        let mut xs = Vec::with_capacity(n - 1);
        let mut os = Vec::with_capacity(n - 1);
        for r in 0..n {
            if r == full_row {
                continue;
            }
            let (mut x, mut o) = (self.xs()[r], self.os()[r]);
            if r == other_row {
                match majority {
                    MarkerKind::X => x = other_col,
                    MarkerKind::O => o = other_col,
                }
            }
            let remap = |c: usize| if c > full_col { c - 1 } else { c };
            xs.push(remap(x));
            os.push(remap(o));
        }
        Ok(GridDiagram::from_parts_unchecked(xs, os))
    }

    /// Replace one marker by a three-marker hook in a fresh 2x2 block,
    /// growing the grid by one. Inverse of `destabilized` at the created
    /// block.
    pub fn stabilized(&self, spec: &StabSpec) -> GridDiagram {
        let n = self.size();
        let r = spec.row;
        let (c, partner_col) = match spec.kind {
            MarkerKind::X => (self.xs()[r], self.os()[r]),
            MarkerKind::O => (self.os()[r], self.xs()[r]),
        };
        let (dr, dc) = spec.corner.offsets();
        let col_partner_row = match spec.kind {
            MarkerKind::X => self.o_row(c),
            MarkerKind::O => self.x_row(c),
        };

        let map_row = |rr: usize| if rr > r { rr + 1 } else { rr };
        let map_col = |cc: usize| if cc > c { cc + 1 } else { cc };
        let mut xs = vec![usize::MAX; n + 1];
        let mut os = vec![usize::MAX; n + 1];
        for rr in 0..n {
            if rr == r {
                continue;
            }
            xs[map_row(rr)] = map_col(self.xs()[rr]);
            os[map_row(rr)] = map_col(self.os()[rr]);
        }
        // the row partner moves to the block row not filled by the hook;
        // the column partner shifts to the block column not holding the
        // lone opposite marker
        let (stab, opp) = match spec.kind {
            MarkerKind::X => (&mut xs, &mut os),
            MarkerKind::O => (&mut os, &mut xs),
        };
        opp[r + dr] = c + dc;
        stab[r + dr] = c + 1 - dc;
        stab[r + 1 - dr] = c + dc;
        opp[r + 1 - dr] = map_col(partner_col);
        opp[map_row(col_partner_row)] = c + 1 - dc;
        GridDiagram::from_parts_unchecked(xs, os)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Axis;

    fn trefoil() -> GridDiagram {
        GridDiagram::new(vec![0, 1, 2, 3, 4], vec![2, 3, 4, 0, 1]).unwrap()
    }

    #[test]
    fn translate_unknot_by_one() {
        let g = GridDiagram::unknot().translated(Axis::Row, 1);
        assert_eq!(g.xs(), &[1, 0]);
        assert_eq!(g.os(), &[0, 1]);
    }

    #[test]
    fn translate_identity_and_full_cycle() {
        let g = trefoil();
        for axis in [Axis::Row, Axis::Col] {
            assert_eq!(g.translated(axis, 0), g);
            assert_eq!(g.translated(axis, g.size() as i64), g);
            assert_eq!(g.translated(axis, -1).translated(axis, 1), g);
        }
    }

    #[test]
    fn interleaving_classification() {
        // rows 0,1 of the shift-by-2 size-4 grid span {0..2} and {1..3}
        let g = GridDiagram::new(vec![0, 1, 2, 3], vec![2, 3, 0, 1]).unwrap();
        assert_eq!(g.interleaving(Axis::Row, 0), Interleaving::Interleaved);
        // marker at column 1 in both rows
        let g = GridDiagram::new(vec![0, 1, 2], vec![1, 2, 0]).unwrap();
        assert_eq!(g.interleaving(Axis::Row, 0), Interleaving::SharedColumn);
        // spans {0..1} and {2..3}
        let g = GridDiagram::new(vec![0, 2, 1, 3], vec![1, 3, 0, 2]).unwrap();
        assert_eq!(g.interleaving(Axis::Row, 0), Interleaving::Disjoint);
        // span {1..2} nested in {0..3}
        let g = GridDiagram::new(vec![1, 0, 2, 3], vec![2, 3, 0, 1]).unwrap();
        assert_eq!(g.interleaving(Axis::Row, 0), Interleaving::Nested);
    }

    #[test]
    fn commute_requires_disjoint_or_nested() {
        let g = GridDiagram::new(vec![0, 2, 1, 3], vec![1, 3, 0, 2]).unwrap();
        let swapped = g.commuted(Axis::Row, 0).unwrap();
        assert_eq!(swapped.xs(), &[2, 0, 1, 3]);
        assert_eq!(swapped.components(), g.components());

        let hopf = GridDiagram::new(vec![0, 1, 2, 3], vec![2, 3, 0, 1]).unwrap();
        assert!(matches!(
            hopf.commuted(Axis::Row, 0),
            Err(MoveError::IllegalCommutation { found: Interleaving::Interleaved, .. })
        ));
        let shared = GridDiagram::new(vec![0, 1, 2], vec![1, 2, 0]).unwrap();
        assert!(matches!(
            shared.commuted(Axis::Row, 0),
            Err(MoveError::IllegalCommutation { found: Interleaving::SharedColumn, .. })
        ));
    }

    #[test]
    fn cross_exchange_is_involutive_and_preserves_components() {
        let hopf = GridDiagram::new(vec![0, 1, 2, 3], vec![2, 3, 0, 1]).unwrap();
        let once = hopf.cross_exchanged(Axis::Row, 0).unwrap();
        assert_eq!(once.components(), 2);
        assert_eq!(once.cross_exchanged(Axis::Row, 0).unwrap(), hopf);
        assert!(matches!(
            GridDiagram::unknot().cross_exchanged(Axis::Row, 0),
            Err(MoveError::NotInterleaved { .. })
        ));
    }

    #[test]
    fn destabilizations_of_small_grids() {
        assert!(GridDiagram::unknot().destabilizations().is_empty());
        let g = GridDiagram::new(vec![0, 1, 2], vec![1, 2, 0]).unwrap();
        let found = g.destabilizations();
        assert!(found.contains(&DestabPos { row: 0, col: 0 }));
        // every reported position collapses to a valid smaller grid
        for pos in found {
            let shrunk = g.destabilized(pos).unwrap();
            assert_eq!(shrunk.size(), 2);
            assert_eq!(shrunk.components(), 1);
        }
    }

    #[test]
    fn destabilize_rejects_stale_position() {
        let g = GridDiagram::new(vec![0, 1, 2], vec![1, 2, 0]).unwrap();
        assert!(matches!(
            g.destabilized(DestabPos { row: 1, col: 0 }),
            Err(MoveError::InvalidPosition { .. })
        ));
    }

    #[test]
    fn stabilize_then_destabilize_round_trips() {
        let g = trefoil();
        for kind in [MarkerKind::X, MarkerKind::O] {
            for corner in Corner::ALL {
                for row in 0..g.size() {
                    let spec = StabSpec { row, kind, corner };
                    let big = g.stabilized(&spec);
                    assert_eq!(big.size(), g.size() + 1);
                    assert_eq!(big.components(), g.components());
                    let c = match kind {
                        MarkerKind::X => g.xs()[row],
                        MarkerKind::O => g.os()[row],
                    };
                    let pos = DestabPos { row, col: c };
                    assert!(big.destabilizations().contains(&pos));
                    assert_eq!(big.destabilized(pos).unwrap(), g);
                }
            }
        }
    }

    #[test]
    fn cyclic_pair_moves_work() {
        let g = trefoil();
        let n = g.size();
        // commuting the wrapped pair equals translate, commute, untranslate
        let k = g.interleaving(Axis::Row, n - 1);
        let direct = match k {
            Interleaving::Disjoint | Interleaving::Nested => g.commuted(Axis::Row, n - 1).ok(),
            Interleaving::Interleaved => g.cross_exchanged(Axis::Row, n - 1).ok(),
            Interleaving::SharedColumn => None,
        };
        if let Some(direct) = direct {
            let via_translate = g
                .translated(Axis::Row, -1)
                .swapped_lines(Axis::Row, 0)
                .translated(Axis::Row, 1);
            assert_eq!(direct, via_translate);
        }
    }
}
