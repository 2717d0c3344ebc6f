//! Removal of B₁-facets, restriction to the tropicalization, and graph
//! normal forms used to compare links.

pub mod b1;
pub mod normal_form;
pub mod polygon;

pub use b1::{
    find_removable_b1, reduce_to_nonnegative_zk, remove_b1_facet, restrict_to_tropicalization, B1Facet, LeafGraph,
    Reduction, ReductionStep, Removal,
};
pub use normal_form::{graph_normal_form, graphs_isomorphic, tree_code};
pub use polygon::{classify_lattice_polygon, face_polygon, PolygonClass};
