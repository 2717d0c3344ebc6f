//! Branches, multiplicity and δ of plane curve germs from their Newton
//! polygons.

use toric_nnd::invariants::curve_invariants;
use toric_nnd::newton::NewtonData;

fn main() -> toric_nnd::Result<()> {
    let cases: &[(&str, &[&[i64]])] = &[
        ("y^2 - x^3", &[&[3, 0], &[0, 2]]),
        ("y^3 - x^7", &[&[7, 0], &[0, 3]]),
        ("x^4 + x^2 y^3 + y^7", &[&[4, 0], &[2, 3], &[0, 7]]),
        ("x", &[&[1, 0]]),
    ];
    for (name, support) in cases {
        let c = curve_invariants(&NewtonData::from_i64(&[&[1, 0], &[0, 1]], support)?)?;
        let opt = |x: &Option<num_bigint::BigInt>| x.as_ref().map_or("-".to_string(), |v| v.to_string());
        println!(
            "{name}: branches {}, smooth {}, multiplicity {}, delta {}",
            c.branches,
            c.smooth,
            opt(&c.multiplicity),
            opt(&c.delta)
        );
    }
    Ok(())
}
