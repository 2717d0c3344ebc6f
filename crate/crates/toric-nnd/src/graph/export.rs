use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::build::PlumbingGraph;
use crate::lattice::linalg::Rat;

/// An integer as a JSON number when it fits in 64 bits, else as a string.
pub fn json_int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

/// A rational as the string `"a/b"`, or `"a"` when integral.
pub fn json_rat(x: &Rat) -> Value {
    Value::String(x.to_string())
}

pub fn json_ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(json_int).collect())
}

pub fn json_rats(xs: &[Rat]) -> Value {
    Value::Array(xs.iter().map(json_rat).collect())
}

/// Stable JSON form: vertices with id, kind, ℓ, m, Euler number and genus,
/// the edge list and the bamboos.
pub fn graph_to_json(g: &PlumbingGraph) -> Value {
    let vertices: Vec<Value> = g
        .vertices
        .iter()
        .map(|v| {
            json!({
                "id": v.id,
                "kind": v.kind.as_str(),
                "ell": json_ints(v.ell.coords()),
                "m": json_int(&v.m),
                "euler": v.euler.as_ref().map(json_int).unwrap_or(Value::Null),
                "genus": json_int(&v.genus),
            })
        })
        .collect();
    let edges: Vec<Value> = g.edges.iter().map(|&(a, b)| json!([a, b])).collect();
    let bamboos: Vec<Value> = g
        .bamboos
        .iter()
        .map(|b| {
            json!({
                "ends": [b.ends.0, b.ends.1],
                "vertices": b.vertices,
                "alpha": json_int(&b.alpha),
                "beta": json_int(&b.beta),
            })
        })
        .collect();
    json!({ "vertices": vertices, "edges": edges, "bamboos": bamboos })
}

/// Graphviz rendering; each vertex is labelled with its Euler number and
/// genus, and parallel edges are written once per copy.
pub fn graph_to_dot(g: &PlumbingGraph) -> String {
    let mut s = String::from("graph plumbing {\n  node [shape=circle, fontsize=10];\n");
    for v in &g.vertices {
        let (label, shape) = match &v.euler {
            Some(e) => (format!("{e}\\n[{}]", v.genus), "circle"),
            None => (format!("({})", v.m), "box"),
        };
        let _ = writeln!(s, "  v{} [label=\"{label}\", shape={shape}];", v.id);
    }
    for &(a, b) in &g.edges {
        let style = if g.is_core(a) && g.is_core(b) { "" } else { " [style=dashed]" };
        let _ = writeln!(s, "  v{a} -- v{b}{style};");
    }
    s.push_str("}\n");
    s
}
