//! Lattice points in a scaled empty polygon with some edges removed.

use toric_nnd::lattice::linalg::Rat;
use toric_nnd::lattice::plane::{p2, Polygon};
use toric_nnd::sequence::polygon_count;

fn main() -> toric_nnd::Result<()> {
    let f = Polygon::hull(&[p2(0, 0), p2(5, 0), p2(0, 1), p2(3, 1)])?;
    for (num, den) in [(1, 2), (2, 3), (3, 4)] {
        let rho = Rat::new(num.into(), den.into());
        for faces in [vec![], vec![0], vec![0, 2]] {
            let c = polygon_count(&f, &rho, &faces)?;
            println!("rho = {rho}, removed edges {faces:?}: {} points, a = {}", c.count, c.a);
        }
    }
    Ok(())
}
