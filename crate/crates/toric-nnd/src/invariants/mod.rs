//! Curve invariants, isolatedness, geometric genus and δ by lattice point
//! counting.

pub mod counting;
pub mod curve;
pub mod isolated;

pub use counting::{is_normal_surface, pg_count, surface_delta, BoundaryCircle, Delta, DEFAULT_SHELL_CAP};
pub use curve::{curve_invariants, CurveReport};
pub use isolated::{isolated_by_transverse_curves, isolated_test, FaceCheck, IsolatedReport};
