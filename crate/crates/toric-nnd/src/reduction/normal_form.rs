use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::form::is_negative_definite;
use crate::graph::qhs::graph_criterion;
use crate::graph::PlumbingGraph;

/// Blows down genus zero `(-1)`-vertices with at most two neighbours until
/// none are left. Extended nodes and bamboo records are dropped. The graph
/// must be a negative definite tree of rational curves.
pub fn graph_normal_form(g: &PlumbingGraph) -> Result<PlumbingGraph> {
    if g.num_core() > 0 && !graph_criterion(g) {
        return Err(Error::Hypothesis("normal forms are only defined for trees of rational curves".into()));
    }
    if g.num_core() > 0 && !is_negative_definite(g) {
        return Err(Error::SingularForm);
    }
    let n = g.num_core();
    let mut euler: Vec<BigInt> = (0..n).map(|v| g.euler(v)).collect();
    let mut adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbours(v)).collect();
    let mut alive = vec![true; n];
    let minus_one = -BigInt::one();
    while let Some(v) = (0..n).find(|&v| alive[v] && euler[v] == minus_one && adj[v].len() <= 2) {
        alive[v] = false;
        let nb = std::mem::take(&mut adj[v]);
        for &u in &nb {
            euler[u] += 1;
            adj[u].retain(|&w| w != v);
        }
        if let [a, b] = nb[..] {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let ids: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let new_id = |v: usize| ids.iter().position(|&w| w == v).unwrap();
    let mut vertices = Vec::new();
    for (k, &v) in ids.iter().enumerate() {
        let mut x = g.vertices[v].clone();
        x.id = k;
        x.euler = Some(euler[v].clone());
        vertices.push(x);
    }
    let mut edges = Vec::new();
    for &v in &ids {
        for &u in &adj[v] {
            if v < u {
                edges.push((new_id(v), new_id(u)));
            }
        }
    }
    edges.sort();
    Ok(PlumbingGraph { vertices, edges, bamboos: vec![] })
}

/// Canonical string of a tree of rational curves labelled by Euler number
/// and genus, rooted at its centre(s).
pub fn tree_code(g: &PlumbingGraph) -> Result<String> {
    let n = g.num_core();
    if n == 0 {
        return Ok(String::new());
    }
    if !g.is_tree() {
        return Err(Error::Hypothesis("tree codes need a tree".into()));
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbours(v)).collect();
    // centres by repeated leaf removal
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in &adj[v] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    fn code(g: &PlumbingGraph, adj: &[Vec<usize>], v: usize, parent: Option<usize>) -> String {
        let mut children: Vec<String> =
            adj[v].iter().filter(|&&u| Some(u) != parent).map(|&u| code(g, adj, u, Some(v))).collect();
        children.sort();
        format!("({},{}{})", g.euler(v), g.vertices[v].genus, children.concat())
    }
    Ok(layer.iter().map(|&c| code(g, &adj, c, None)).min().unwrap())
}

/// Labelled isomorphism of two trees of rational curves.
pub fn graphs_isomorphic(a: &PlumbingGraph, b: &PlumbingGraph) -> Result<bool> {
    Ok(tree_code(a)? == tree_code(b)?)
}
