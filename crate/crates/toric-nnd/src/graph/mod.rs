//! Plumbing graphs of the resolution, intersection forms and canonical
//! cycles.

pub mod build;
pub mod cycle;
pub mod export;
pub mod form;
pub mod qhs;

pub use build::{build_graph, Bamboo, PlumbingGraph, PlumbingVertex, VertexKind};
pub use cycle::Cycle;
pub use export::{graph_to_dot, graph_to_json};
pub use form::{
    canonical_cycle_adjunction, canonical_cycle_formula, dual_cycle, form_determinant, intersection_form,
    is_negative_definite, node_multiplicities, pairing, pairings_with_basis,
};
pub use qhs::{diagram_criterion, graph_criterion, is_qhs_link};
