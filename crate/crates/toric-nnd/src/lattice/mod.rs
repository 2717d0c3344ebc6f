//! Integer lattices, exact linear algebra, continued fractions and lattice
//! polygons.

pub mod cf;
pub mod linalg;
pub mod plane;
pub mod vector;

pub use cf::{alpha, beta, canonical_primitive_sequence, hj_eval, hj_expand, CfData, PrimitiveSequence};
pub use linalg::Rat;
pub use vector::{content_primitive, pairing, DualVector, LatticeVector};
