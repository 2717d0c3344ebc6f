pub mod error;
pub mod lattice;
pub mod graph;
pub mod invariants;
pub mod newton;
pub mod reduction;
pub mod report;
pub mod sequence;

pub use error::{Error, Result};
