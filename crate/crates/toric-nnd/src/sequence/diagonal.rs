use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laufer::{ceil_mod, node_mask, Form, SequenceStep};
use crate::error::{Error, Result};
use crate::graph::form::{canonical_cycle_adjunction, node_multiplicities};
use crate::graph::qhs::{graph_criterion, is_qhs_link};
use crate::graph::{Cycle, PlumbingGraph};
use crate::invariants::counting::{surface_delta, Delta, DEFAULT_SHELL_CAP};
use crate::lattice::cf::{alpha, beta};
use crate::lattice::linalg::{rat_int, Rat};
use crate::newton::{gorenstein_pointed_at, DualFan, NewtonData, Ring};

/// A diagonal computation sequence with its Laufer fillers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalRun {
    pub root: usize,
    pub steps: Vec<SequenceStep>,
    /// Number of node steps taken when the nodes first reach `Z_K - E`.
    pub kbar_prime: usize,
    /// Total number of node steps.
    pub kbar: usize,
    /// `Σ max(0, d_i + 1)` over all steps.
    pub bound: BigInt,
    pub end: Cycle,
}

/// Parent pointers of the resolution tree rooted at `root`.
fn parents(g: &PlumbingGraph, root: usize) -> Vec<Option<usize>> {
    let n = g.num_core();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        for u in g.neighbours(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some(v);
                queue.push_back(u);
            }
        }
    }
    parent
}

/// `a` lies on the path from `b` to the root.
fn is_ancestor(parent: &[Option<usize>], a: usize, b: usize) -> bool {
    let mut cur = Some(b);
    while let Some(c) = cur {
        if c == a {
            return true;
        }
        cur = parent[c];
    }
    false
}

/// Leaves of the smallest subtree containing `terminals`.
fn subtree_leaves(g: &PlumbingGraph, terminals: &[usize]) -> Vec<usize> {
    let n = g.num_core();
    let mut alive = vec![true; n];
    let is_terminal = |v: usize| terminals.contains(&v);
    let degree = |v: usize, alive: &[bool]| g.neighbours(v).into_iter().filter(|&u| alive[u]).count();
    loop {
        let prune: Vec<usize> = (0..n).filter(|&v| alive[v] && !is_terminal(v) && degree(v, &alive) <= 1).collect();
        if prune.is_empty() {
            break;
        }
        for v in prune {
            alive[v] = false;
        }
    }
    let mut leaves: Vec<usize> = terminals.iter().cloned().filter(|&v| degree(v, &alive) <= 1).collect();
    leaves.sort();
    leaves
}

/// `(-1)`-vertices on bamboos with `α = 1`.
fn minus_one_bamboo_vertices(g: &PlumbingGraph) -> Vec<usize> {
    g.bamboos.iter().filter(|b| b.alpha.is_one()).flat_map(|b| b.vertices.iter().cloned()).collect()
}

/// Runs the diagonal computation sequence from `Z_K - ⌊Z_K⌋` to `x(Z_K)`.
///
/// `root` overrides the node used to order ties; by default it is the node
/// of largest `m_n(Z_K - E)`, lowest id first.
pub fn diagonal_sequence(g: &PlumbingGraph, zk: &Cycle, root: Option<usize>) -> Result<DiagonalRun> {
    if !graph_criterion(g) {
        return Err(Error::Hypothesis("the resolution graph is not a tree of rational curves".into()));
    }
    let nodes = g.nodes();
    let target1: Vec<(usize, Rat)> = node_multiplicities(g, zk);
    // when every node has 0 ≤ m_n(Z_K) < 1 the run consists of Laufer
    // steps only; otherwise all nodes must satisfy m_n(Z_K - E) ≥ 0
    let minus_one = Rat::from_integer((-1).into());
    let trivial = target1.iter().all(|(_, m)| m.is_negative() && *m >= minus_one);
    if !trivial {
        if let Some((n, m)) = target1.iter().find(|(_, m)| m.is_negative()) {
            return Err(Error::Hypothesis(format!(
                "node {n} has m(Z_K - E) = {m} < 0; remove B1-facets first (reduce)"
            )));
        }
    }
    let root = match root {
        Some(r) if nodes.contains(&r) => r,
        Some(r) => return Err(Error::InvalidArgument(format!("root {r} is not a node"))),
        None => {
            let mut best = nodes[0];
            for (n, m) in &target1 {
                if *m > target1.iter().find(|(x, _)| *x == best).unwrap().1 {
                    best = *n;
                }
            }
            best
        }
    };
    let parent = parents(g, root);
    let form = Form::new(g)?;
    let mask = node_mask(g.num_core(), &nodes)?;
    let mut steps = Vec::new();

    let z0 = zk.sub(&zk.floor());
    let mut z = form.run(z0, &mask, &mut steps)?;
    let mut kbar_prime = None;
    let mut count = 0usize;
    loop {
        if trivial {
            break;
        }
        let below: Vec<(usize, &Rat)> = target1.iter().filter(|(n, t)| z.m(*n) < t).map(|(n, t)| (*n, t)).collect();
        if below.is_empty() && kbar_prime.is_none() {
            kbar_prime = Some(count);
        }
        let at_first: Vec<usize> = target1.iter().filter(|(n, t)| z.m(*n) == t).map(|(n, _)| *n).collect();
        let chosen = if !below.is_empty() {
            let ratio = |n: usize, t: &Rat| z.m(n) / t;
            let min = below.iter().map(|(n, t)| ratio(*n, t)).min().unwrap();
            let tied: Vec<usize> = below.iter().filter(|(n, t)| ratio(*n, t) == min).map(|(n, _)| *n).collect();
            *tied
                .iter()
                .filter(|&&n| !tied.iter().any(|&m| m != n && is_ancestor(&parent, m, n)))
                .min()
                .unwrap()
        } else if !at_first.is_empty() {
            subtree_leaves(g, &at_first)[0]
        } else {
            break;
        };
        let p = form.pairings(&z);
        steps.push(SequenceStep::new(&z, chosen, &p[chosen], true));
        z.add_unit(chosen, &Rat::one());
        z = form.run(z, &mask, &mut steps)?;
        count += 1;
    }

    let mut expected = zk.clone();
    for u in minus_one_bamboo_vertices(g) {
        expected.add_unit(u, &Rat::one());
    }
    if z != expected {
        return Err(Error::Internal(format!("diagonal sequence ended at {z}, expected {expected}")));
    }
    let mut bound = Rat::zero();
    for s in &steps {
        if !s.diagonal && !s.contribution.is_zero() {
            return Err(Error::Internal("a Laufer step contributed".into()));
        }
        bound += &s.contribution;
    }
    Ok(DiagonalRun {
        root,
        steps,
        kbar_prime: kbar_prime.unwrap_or(count),
        kbar: count,
        bound: bound.to_integer(),
        end: z,
    })
}

/// Geometric genus as the bound of the diagonal computation sequence,
/// after checking normality, the rational homology sphere link and
/// Q-Gorenstein pointedness.
pub fn pg_from_sequence(g: &PlumbingGraph, nd: &NewtonData, fan: &DualFan) -> Result<BigInt> {
    pg_from_sequence_with(g, nd, fan, DEFAULT_SHELL_CAP, None)
}

pub fn pg_from_sequence_with(
    g: &PlumbingGraph,
    nd: &NewtonData,
    fan: &DualFan,
    shell_cap: usize,
    root: Option<usize>,
) -> Result<BigInt> {
    match surface_delta(nd, fan, shell_cap)? {
        Delta::Finite(d) if d.is_zero() => {}
        d => return Err(Error::Hypothesis(format!("the surface is not normal (δ = {d})"))),
    }
    if !is_qhs_link(g, nd, fan)? {
        return Err(Error::Hypothesis("the link is not a rational homology sphere".into()));
    }
    if gorenstein_pointed_at(nd, fan, Ring::Rationals)?.is_none() {
        return Err(Error::Hypothesis("the diagram is not Q-Gorenstein pointed".into()));
    }
    let zk = canonical_cycle_adjunction(g)?;
    Ok(diagonal_sequence(g, &zk, root)?.bound)
}

/// Closed form for `m_u(x(Z))` where `u` is the neighbour of `n` on a
/// bamboo joining `n` and `n2` (nodes or extended nodes).
pub fn bamboo_multiplicity(g: &PlumbingGraph, z: &Cycle, n: usize, n2: usize, u: usize) -> Result<Rat> {
    let bad = || Error::InvalidArgument(format!("{u} is not next to {n} on a bamboo towards {n2}"));
    let found = g.bamboos.iter().any(|b| {
        (b.ends == (n, n2) && b.vertices.first() == Some(&u)) || (b.ends == (n2, n) && b.vertices.last() == Some(&u))
    });
    if !found {
        return Err(bad());
    }
    let (ln, ln2) = (&g.vertices[n].ell, &g.vertices[n2].ell);
    let a = alpha(ln, ln2)?;
    let be = if a.is_one() { BigInt::one() } else { beta(ln, ln2)? };
    let m = |v: usize| if g.is_core(v) { z.m(v).clone() } else { Rat::zero() };
    let r = (rat_int(&be) * m(n) + m(n2)) / rat_int(&a);
    Ok(ceil_mod(&r, z.m(u)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::graph::form::dual_cycle;
    use crate::invariants::pg_count;
    use crate::newton::dual_fan;
    use crate::sequence::laufer::laufer_x;

    const OCT: &[&[i64]] = &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]];

    fn setup(cone: &[&[i64]], support: &[&[i64]]) -> (NewtonData, DualFan, PlumbingGraph) {
        let nd = NewtonData::from_i64(cone, support).unwrap();
        let fan = dual_fan(&nd).unwrap();
        let g = build_graph(&nd, &fan).unwrap();
        (nd, fan, g)
    }

    #[test]
    fn single_minus_three() {
        let g = PlumbingGraph::from_decorations(&[-3], &[0], &[]).unwrap();
        let zk = canonical_cycle_adjunction(&g).unwrap();
        let run = diagonal_sequence(&g, &zk, None).unwrap();
        assert_eq!(run.bound, BigInt::zero());
    }

    #[test]
    fn brieskorn_2_3_7() {
        let (nd, fan, g) = setup(OCT, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 7]]);
        assert_eq!(pg_from_sequence(&g, &nd, &fan).unwrap(), BigInt::one());
        assert_eq!(pg_count(&fan).unwrap(), BigInt::one());
        let zk = canonical_cycle_adjunction(&g).unwrap();
        let run = diagonal_sequence(&g, &zk, None).unwrap();
        for s in run.steps.iter().filter(|s| s.diagonal).skip(run.kbar_prime) {
            assert!(s.contribution.is_zero());
        }
    }

    #[test]
    fn gorenstein_remark_is_rational() {
        let cone: &[&[i64]] = &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]];
        let (nd, fan, g) = setup(cone, &[&[0, 0, 2], &[1, 0, 1], &[0, 2, 0], &[1, 2, -1]]);
        // not Q-Gorenstein pointed, but the bare sequence still runs
        assert!(matches!(pg_from_sequence(&g, &nd, &fan), Err(Error::Hypothesis(_))));
        let zk = canonical_cycle_adjunction(&g).unwrap();
        assert_eq!(diagonal_sequence(&g, &zk, None).unwrap().bound, BigInt::zero());
    }

    #[test]
    fn negative_node_is_refused() {
        let (_, _, g) = setup(OCT, &[&[3, 0, 0], &[1, 3, 0], &[0, 0, 5], &[0, 10, 1]]);
        let zk = canonical_cycle_adjunction(&g).unwrap();
        assert!(matches!(diagonal_sequence(&g, &zk, None), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn bamboo_closed_form() {
        let cases: &[&[&[i64]]] = &[
            &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 7]],
            &[&[3, 0, 0], &[1, 3, 0], &[0, 0, 5], &[0, 10, 1]],
            &[&[4, 0, 0], &[1, 2, 0], &[0, 5, 0], &[0, 0, 3]],
        ];
        for s in cases {
            let (_, _, g) = setup(OCT, s);
            let nodes = g.nodes();
            let zk = canonical_cycle_adjunction(&g).unwrap();
            let mut cycles = vec![zk.clone(), Cycle::zero(g.num_core())];
            for &n in &nodes {
                cycles.push(dual_cycle(&g, n).unwrap().add(&zk));
            }
            for z in cycles {
                let x = laufer_x(&g, &z, &nodes).unwrap();
                for b in &g.bamboos {
                    let (n, n2) = b.ends;
                    if g.is_core(n) {
                        let u = b.vertices[0];
                        assert_eq!(bamboo_multiplicity(&g, &z, n, n2, u).unwrap(), x.0[u].clone());
                    }
                    if g.is_core(n2) {
                        let u = *b.vertices.last().unwrap();
                        assert_eq!(bamboo_multiplicity(&g, &z, n2, n, u).unwrap(), x.0[u].clone());
                    }
                }
            }
        }
    }
}
