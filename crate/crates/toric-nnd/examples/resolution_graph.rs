//! Resolution graph of a non-simplicial example, its DOT rendering and
//! the blown-down normal form.

use toric_nnd::graph::{build_graph, graph_to_dot};
use toric_nnd::newton::{dual_fan, NewtonData};
use toric_nnd::reduction::graph_normal_form;
use toric_nnd::report::graph_summary;

fn main() -> toric_nnd::Result<()> {
    let nd = NewtonData::from_i64(
        &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]],
        &[&[0, 0, 2], &[1, 0, 1], &[0, 2, 0], &[1, 2, -1]],
    )?;
    let g = build_graph(&nd, &dual_fan(&nd)?)?;
    print!("{}", graph_to_dot(&g));
    println!("raw: {}", graph_summary(&g));
    println!("normal form: {}", graph_summary(&graph_normal_form(&g)?));
    Ok(())
}
