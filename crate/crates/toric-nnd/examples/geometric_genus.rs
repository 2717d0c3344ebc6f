//! Geometric genus by counting lattice points, for a few Brieskorn
//! diagrams x^a + y^b + z^c.

use toric_nnd::invariants::pg_count;
use toric_nnd::newton::{dual_fan, NewtonData};

fn main() -> toric_nnd::Result<()> {
    for (a, b, c) in [(2, 3, 5), (2, 3, 7), (2, 5, 11), (3, 4, 5), (4, 5, 6)] {
        let nd = NewtonData::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], &[&[a, 0, 0], &[0, b, 0], &[0, 0, c]])?;
        println!("x^{a} + y^{b} + z^{c}: p_g = {}", pg_count(&dual_fan(&nd)?)?);
    }
    Ok(())
}
