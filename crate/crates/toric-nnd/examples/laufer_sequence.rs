//! Generalized Laufer operator on a small string, with the step trace.

use num_bigint::BigInt;
use toric_nnd::graph::{Cycle, PlumbingGraph};
use toric_nnd::sequence::{laufer_sequence, laufer_x};

fn main() -> toric_nnd::Result<()> {
    let g = PlumbingGraph::from_decorations(&[-2, -3, -2, -2], &[0; 4], &[(0, 1), (1, 2), (2, 3)])?;
    let z = Cycle::from_ints(&[0, 3, 0, 0].map(BigInt::from));
    println!("x(Z) = {}", laufer_x(&g, &z, &[1])?);
    for s in laufer_sequence(&g, &z, &[1])? {
        println!("{} + E{} (d = {}, contributes {})", s.cycle_before, s.vertex, s.d, s.contribution);
    }
    Ok(())
}
