//! Dual fan of x^2 + y^3 + z^7 over the positive octant.

use toric_nnd::newton::{dual_fan, NewtonData};

fn main() -> toric_nnd::Result<()> {
    let nd = NewtonData::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 7]])?;
    let fan = dual_fan(&nd)?;
    for (i, r) in fan.rays.iter().enumerate() {
        let kind = if r.is_node() {
            "node"
        } else if r.is_extended_node() {
            "extended node"
        } else {
            "boundary"
        };
        println!("ray {i}: ell = {}, m = {}, {kind}", r.ell, r.m);
    }
    println!("boundary cycle: {:?}", fan.boundary_cycle);
    Ok(())
}
