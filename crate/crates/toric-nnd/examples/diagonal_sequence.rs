//! Geometric genus from the diagonal computation sequence, compared with
//! the lattice point count.

use toric_nnd::graph::build_graph;
use toric_nnd::graph::form::canonical_cycle_adjunction;
use toric_nnd::invariants::pg_count;
use toric_nnd::newton::{dual_fan, NewtonData};
use toric_nnd::sequence::{diagonal_sequence, pg_from_sequence};

fn main() -> toric_nnd::Result<()> {
    let nd = NewtonData::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 7]])?;
    let fan = dual_fan(&nd)?;
    let g = build_graph(&nd, &fan)?;
    let run = diagonal_sequence(&g, &canonical_cycle_adjunction(&g)?, None)?;
    for s in run.steps.iter().filter(|s| s.diagonal) {
        println!("node step at {}: d = {}, contributes {}", s.vertex, s.d, s.contribution);
    }
    println!("sequence: {}, count: {}", pg_from_sequence(&g, &nd, &fan)?, pg_count(&fan)?);
    Ok(())
}
