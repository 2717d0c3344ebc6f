//! Laufer operator, the diagonal computation sequence and the lattice
//! point count of empty polygons.

pub mod diagonal;
pub mod laufer;
pub mod polygon;

pub use diagonal::{bamboo_multiplicity, diagonal_sequence, pg_from_sequence, pg_from_sequence_with, DiagonalRun};
pub use laufer::{ceil_mod, laufer_sequence, laufer_x, SequenceStep};
pub use polygon::{polygon_count, PolygonCount};
