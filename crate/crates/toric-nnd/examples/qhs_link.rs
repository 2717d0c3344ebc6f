//! Rational homology sphere test, from the graph and from the diagram.

use toric_nnd::graph::{build_graph, diagram_criterion, graph_criterion};
use toric_nnd::newton::{dual_fan, NewtonData};

fn main() -> toric_nnd::Result<()> {
    let oct: &[&[i64]] = &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]];
    let cases: &[(&str, &[&[i64]])] = &[
        ("x^2 + y^3 + z^7", &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 7]]),
        ("x^4 + y^4 + z^4", &[&[4, 0, 0], &[0, 4, 0], &[0, 0, 4]]),
        ("x^3 + y^3 + z^6", &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 6]]),
    ];
    for (name, support) in cases {
        let nd = NewtonData::from_i64(oct, support)?;
        let fan = dual_fan(&nd)?;
        let g = build_graph(&nd, &fan)?;
        println!("{name}: graph says {}, diagram says {}", graph_criterion(&g), diagram_criterion(&fan)?);
    }
    Ok(())
}
