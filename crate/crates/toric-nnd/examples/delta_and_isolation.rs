//! Isolatedness test and the δ-invariant of the normalization.

use toric_nnd::invariants::{isolated_test, surface_delta, DEFAULT_SHELL_CAP};
use toric_nnd::newton::{dual_fan, NewtonData};

fn main() -> toric_nnd::Result<()> {
    let oct: &[&[i64]] = &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]];
    let cases: &[(&str, &[&[i64]])] = &[
        ("x^2 + y^3 + z^7", &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 7]]),
        ("x^2 + y^2 z", &[&[2, 0, 0], &[0, 2, 1]]),
    ];
    for (name, support) in cases {
        let nd = NewtonData::from_i64(oct, support)?;
        let fan = dual_fan(&nd)?;
        let iso = isolated_test(&nd, &fan)?;
        println!("{name}: isolated = {}, delta = {}", iso.isolated, surface_delta(&nd, &fan, DEFAULT_SHELL_CAP)?);
        for f in iso.faces.iter().filter(|f| !f.pass) {
            println!("  face {} {}: {}", f.rays.0, f.rays.1, f.reason.as_deref().unwrap_or(""));
        }
    }
    // a non-normal surface over a non-regular cone
    let nd = NewtonData::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 2]], &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 1]])?;
    let fan = dual_fan(&nd)?;
    println!("non-regular cone: delta = {}", surface_delta(&nd, &fan, DEFAULT_SHELL_CAP)?);
    Ok(())
}
