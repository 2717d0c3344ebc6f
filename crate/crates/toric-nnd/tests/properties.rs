mod common;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use toric_nnd::graph::form::{canonical_cycle_adjunction, canonical_cycle_formula, is_negative_definite};
use toric_nnd::graph::{build_graph, diagram_criterion, graph_criterion, PlumbingGraph};
use toric_nnd::invariants::{isolated_test, pg_count, surface_delta, DEFAULT_SHELL_CAP};
use toric_nnd::lattice::linalg::Rat;
use toric_nnd::lattice::plane::{p2, Polygon};
use toric_nnd::lattice::vector::{DualVector, LatticeVector};
use toric_nnd::lattice::{alpha, beta, canonical_primitive_sequence, hj_eval, hj_expand};
use toric_nnd::newton::{dual_fan, gorenstein_pointed_at, DualFan, NewtonData, Ring};
use toric_nnd::reduction::{
    classify_lattice_polygon, face_polygon, find_removable_b1, graph_normal_form, graphs_isomorphic, remove_b1_facet,
    LeafGraph, PolygonClass,
};
use toric_nnd::report::{parse_input, InputSpec, Options};
use toric_nnd::sequence::polygon_count;

fn octant_support(max: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (
        (2..=max, 2..=max, 2..=max),
        prop::collection::vec(prop::collection::vec(0..=max, 3), 0..=3),
    )
        .prop_map(|((a, b, c), extra)| {
            let mut s = vec![vec![a, 0, 0], vec![0, b, 0], vec![0, 0, c]];
            s.extend(extra.into_iter().filter(|p| p.iter().sum::<i64>() >= 2));
            s
        })
}

fn build(s: &[Vec<i64>]) -> (NewtonData, DualFan) {
    let rows: Vec<&[i64]> = s.iter().map(|p| p.as_slice()).collect();
    let nd = common::octant(&rows);
    let fan = dual_fan(&nd).unwrap();
    (nd, fan)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn hj_round_trip_large(a in 2u64..1_000_000_000_000, b in 1u64..1_000_000_000_000) {
        let b = b % a;
        prop_assume!(num_integer::gcd(a, b) == 1);
        let (al, be) = (BigInt::from(a), BigInt::from(b));
        let cf = hj_expand(&al, &be).unwrap();
        prop_assert_eq!(hj_eval(&cf.terms), (al, be));
    }

    #[test]
    fn primitive_sequence_relations(x in 1i64..40, y in -40i64..40, u in 1i64..40, v in -40i64..40) {
        let (l, l2) = (LatticeVector::from_i64(&[x, y]), LatticeVector::from_i64(&[u, v]));
        prop_assume!(x * v - y * u > 0 && l.is_primitive() && l2.is_primitive());
        let seq = canonical_primitive_sequence(&l, &l2).unwrap();
        let vs = &seq.vectors;
        prop_assert_eq!(vs.first().unwrap(), &l);
        prop_assert_eq!(vs.last().unwrap(), &l2);
        for j in 1..vs.len() - 1 {
            let lhs = vs[j].scale(&seq.selfints[j - 1]);
            prop_assert_eq!(lhs, vs[j - 1].add(&vs[j + 1]));
        }
        let a = alpha(&l, &l2).unwrap();
        if a > BigInt::one() {
            let cf = hj_expand(&a, &beta(&l, &l2).unwrap()).unwrap();
            prop_assert_eq!(cf.terms, seq.selfints.clone());
        }
    }

    #[test]
    fn graph_identities(s in octant_support(9)) {
        let (nd, fan) = build(&s);
        let g = build_graph(&nd, &fan).unwrap();
        prop_assert!(g.relation_defects().is_empty());
        if is_negative_definite(&g) {
            prop_assert_eq!(canonical_cycle_adjunction(&g).unwrap(), canonical_cycle_formula(&g).unwrap());
        }
        if isolated_test(&nd, &fan).unwrap().isolated && g.num_core() > 0 {
            prop_assert_eq!(graph_criterion(&g), diagram_criterion(&fan).unwrap());
        }
        // node polygons are empty exactly when the node has genus zero
        for v in g.nodes() {
            let x = &g.vertices[v];
            let poly = face_polygon(&x.ell, x.face.as_ref().unwrap()).unwrap();
            let empty = classify_lattice_polygon(&poly).unwrap() != PolygonClass::HasInteriorPoints;
            prop_assert_eq!(empty, x.genus.is_zero());
        }
        let lg = LeafGraph::new(&fan);
        if lg.nodes.len() > 1 {
            prop_assert_eq!(lg.leaves(), lg.boundary_leaves(&fan));
        }
    }

    #[test]
    fn genus_count_is_translation_invariant(s in octant_support(7), t in prop::collection::vec(0i64..4, 3)) {
        let (nd, fan) = build(&s);
        let c = pg_count(&fan).unwrap();
        let moved = nd.translate(&DualVector::from_i64(&t)).unwrap();
        prop_assert_eq!(pg_count(&dual_fan(&moved).unwrap()).unwrap(), c.clone());
        if isolated_test(&nd, &fan).unwrap().isolated {
            prop_assert_eq!(BigInt::from(common::brute_pg(&nd, &fan, 16)), c);
        }
    }

    #[test]
    fn polygon_count_is_linear_invariant(
        t in 1i64..=6, s in 0i64..=6, num in 0i64..4, den in 1i64..=4, mask in 0usize..16, k in -3i64..=3
    ) {
        prop_assume!(num < den && s <= t);
        let pts = if s == 0 { vec![(0, 0), (t, 0), (0, 1)] } else { vec![(0, 0), (t, 0), (0, 1), (s, 1)] };
        let rho = Rat::new(num.into(), den.into());
        let f = Polygon::hull(&pts.iter().map(|&(x, y)| p2(x, y)).collect::<Vec<_>>()).unwrap();
        let faces: Vec<usize> = (0..f.vertices.len()).filter(|j| mask >> j & 1 == 1).collect();
        let c = polygon_count(&f, &rho, &faces).unwrap();
        prop_assert_eq!(c.count.clone(), (&c.a + BigInt::one()).max(BigInt::zero()));
        // shear (x, y) -> (x + k y, y)
        let g = Polygon::hull(&pts.iter().map(|&(x, y)| p2(x + k * y, y)).collect::<Vec<_>>()).unwrap();
        let total = polygon_count(&g, &rho, &[]).unwrap();
        prop_assert_eq!(total.count, polygon_count(&f, &rho, &[]).unwrap().count);
    }

    #[test]
    fn input_round_trip(
        s in octant_support(12), root in prop::option::of(0usize..5), cap in prop::option::of(1usize..100)
    ) {
        let spec = InputSpec {
            rank: 3,
            cone: vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            support: s,
            options: Options { root, delta_shell_cap: cap, ..Options::default() },
        };
        prop_assert_eq!(parse_input(&spec.to_string()).unwrap(), spec);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn normal_form_ignores_labels(
        eulers in prop::collection::vec(-4i64..=-1, 1..7), parents in prop::collection::vec(0usize..100, 6), seed in 0u64..1000
    ) {
        let n = eulers.len();
        let edges: Vec<(usize, usize)> = (1..n).map(|k| (parents[k - 1] % k, k)).collect();
        let g = PlumbingGraph::from_decorations(&eulers, &vec![0; n], &edges).unwrap();
        // a seeded permutation of the vertex ids
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let mut e2 = vec![0i64; n];
        for v in 0..n {
            e2[perm[v]] = eulers[v];
        }
        let edges2: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        let h = PlumbingGraph::from_decorations(&e2, &vec![0; n], &edges2).unwrap();
        prop_assert!(graphs_isomorphic(&g, &h).unwrap());
        prop_assume!(is_negative_definite(&g));
        prop_assert!(graphs_isomorphic(&graph_normal_form(&g).unwrap(), &graph_normal_form(&h).unwrap()).unwrap());
        // blowing up a vertex on an edge and blowing down again is the identity
        if let (Some(&(a, b)), true) = (edges.first(), eulers.iter().all(|&e| e <= -2)) {
            let mut e3 = eulers.clone();
            e3[a] -= 1;
            e3[b] -= 1;
            e3.push(-1);
            let mut edges3: Vec<(usize, usize)> = edges[1..].to_vec();
            edges3.push((a, n));
            edges3.push((b, n));
            let up = PlumbingGraph::from_decorations(&e3, &vec![0; n + 1], &edges3).unwrap();
            prop_assert!(graphs_isomorphic(&graph_normal_form(&up).unwrap(), &graph_normal_form(&g).unwrap()).unwrap());
        }
    }
}

#[test]
fn removable_facet_is_an_empty_triangle() {
    let (nd, fan) = build(&[vec![3, 0, 0], vec![1, 3, 0], vec![0, 0, 5], vec![0, 10, 1]]);
    let f = find_removable_b1(&nd, &fan).unwrap().into_iter().find(|f| f.removable).unwrap();
    assert_eq!(f.normal, LatticeVector::from_i64(&[19, 2, 5]));
    let poly = face_polygon(&f.normal, &fan.rays[f.node].face).unwrap();
    assert_eq!(poly.vertices.len(), 3);
    assert_ne!(classify_lattice_polygon(&poly).unwrap(), PolygonClass::HasInteriorPoints);
}

fn check_removal(nd: &NewtonData, fan: &DualFan) -> Option<bool> {
    let f = find_removable_b1(nd, fan).unwrap().into_iter().find(|f| f.removable)?;
    let (red, _) = remove_b1_facet(nd, fan, &f).ok()?;
    let fan1 = dual_fan(&red).unwrap();
    assert_eq!(pg_count(fan).unwrap(), pg_count(&fan1).unwrap(), "{:?}", nd.support());
    if let (Ok(d0), Ok(d1)) = (surface_delta(nd, fan, DEFAULT_SHELL_CAP), surface_delta(&red, &fan1, DEFAULT_SHELL_CAP)) {
        assert_eq!(d0, d1, "{:?}", nd.support());
    }
    // pointedness passes from the diagram to the reduced one
    if gorenstein_pointed_at(nd, fan, Ring::Rationals).unwrap().is_some() {
        assert!(gorenstein_pointed_at(&red, &fan1, Ring::Rationals).unwrap().is_some(), "{:?}", nd.support());
    }
    let (g0, g1) = (build_graph(nd, fan).unwrap(), build_graph(&red, &fan1).unwrap());
    if graph_criterion(&g0) && g0.num_core() > 0 {
        let (n0, n1) = (graph_normal_form(&g0).unwrap(), graph_normal_form(&g1).unwrap());
        assert!(graphs_isomorphic(&n0, &n1).unwrap(), "{:?}", nd.support());
    }
    Some(true)
}

/// Diagrams x^a + x y^b + z^c + y^d z and random octant diagrams; every
/// removable B1-facet found is removed and the invariants compared.
#[test]
fn b1_removal_preserves_invariants() {
    let mut hits = 0;
    for a in 2..=4 {
        for b in 1..=4 {
            for c in 2..=6 {
                for d in (2..=14).step_by(3) {
                    let (nd, fan) = build(&[vec![a, 0, 0], vec![1, b, 0], vec![0, 0, c], vec![0, d, 1]]);
                    hits += check_removal(&nd, &fan).is_some() as usize;
                }
            }
        }
    }
    for (nd, fan) in common::corpus(77, 300, 10) {
        hits += check_removal(&nd, &fan).is_some() as usize;
    }
    assert!(hits >= 30, "only {hits} removable B1-facets exercised");
}
