//! Grid-diagram knot manipulation and identification.
//!
//! The crate models knots as grid diagrams and provides the move set used
//! for randomized exploration: Cromwell moves (translation, commutation,
//! stabilization, destabilization), interleaved crossing exchanges, and the
//! four marker-swap band attachments. Polynomial invariants (Jones via the
//! Kauffman bracket, Alexander via Fox calculus) identify simplified grids
//! against a built-in table of the knot types with at most eight crossings,
//! and the `explore` module drives the scramble / band / simplify / identify
//! pipeline that tabulates which knot pairs are related by a single
//! non-coherent band.
//!
//! Everything is a pure function over immutable values; all randomness comes
//! from explicitly seeded generators.

pub mod band;
pub mod explore;
pub mod grid;
pub mod invariants;
pub mod moves;
pub mod planar;
pub mod poly;
pub mod scramble;
pub mod table;

pub use band::{BandError, BandKind, BandMove, BandVariant};
pub use grid::{Axis, GridDiagram, GridError, MarkerKind, UnorientedGrid};
pub use invariants::{alexander, jones, kauffman_bracket, key, InvariantError, InvariantKey, DEFAULT_CROSSING_CAP};
pub use moves::{Corner, DestabPos, Interleaving, MoveError, StabSpec};
pub use planar::PlanarDiagram;
pub use poly::Laurent;
pub use scramble::{ScramblePolicy, SimplifyPolicy, SizeStats};
pub use table::{KnotClass, KnotTable, TableError};
