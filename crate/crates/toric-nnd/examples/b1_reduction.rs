//! Removing a B1-facet from x^3 + x y^3 + z^5 + y^10 z.

use toric_nnd::invariants::{pg_count, DEFAULT_SHELL_CAP};
use toric_nnd::newton::{dual_fan, NewtonData};
use toric_nnd::reduction::{find_removable_b1, reduce_to_nonnegative_zk, ReductionStep};

fn main() -> toric_nnd::Result<()> {
    let nd = NewtonData::from_i64(
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        &[&[3, 0, 0], &[1, 3, 0], &[0, 0, 5], &[0, 10, 1]],
    )?;
    let fan = dual_fan(&nd)?;
    for f in find_removable_b1(&nd, &fan)? {
        let [p1, p2, p3] = &f.vertices;
        println!("facet {} : p1 {p1}, p2 {p2}, p3 {p3}, witness {} (m = {}), removable {}", f.normal, f.witness, f.witness_m, f.removable);
    }
    let red = reduce_to_nonnegative_zk(&nd, DEFAULT_SHELL_CAP)?;
    for step in &red.log {
        match step {
            ReductionStep::Restricted { to, .. } => println!("restricted cone to {to:?}"),
            ReductionStep::Removed { removal, node_multiplicity } => println!(
                "removed (m(Z_K - E) = {node_multiplicity}): t = {}, cut {} >= {}",
                removal.t, removal.ell_plus, removal.m_plus
            ),
        }
    }
    let support: Vec<String> = red.data.support().iter().map(|p| p.to_string()).collect();
    println!("reduced support: {}", support.join(" "));
    println!("p_g before {}, after {}", pg_count(&fan)?, pg_count(&dual_fan(&red.data)?)?);
    Ok(())
}
