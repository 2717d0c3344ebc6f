//! Canonical cycle from adjunction and from the closed formula.

use toric_nnd::graph::build_graph;
use toric_nnd::graph::form::{canonical_cycle_adjunction, canonical_cycle_formula, form_determinant};
use toric_nnd::newton::{dual_fan, NewtonData};

fn main() -> toric_nnd::Result<()> {
    let nd = NewtonData::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 7]])?;
    let g = build_graph(&nd, &dual_fan(&nd)?)?;
    println!("det = {}", form_determinant(&g));
    println!("adjunction: {}", canonical_cycle_adjunction(&g)?);
    println!("formula:    {}", canonical_cycle_formula(&g)?);
    Ok(())
}
