use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::build_graph;
use crate::graph::form::{canonical_cycle_adjunction, node_multiplicities};
use crate::invariants::counting::{surface_delta, Delta};
use crate::lattice::linalg::Rat;
use crate::lattice::vector::{DualVector, LatticeVector};
use crate::newton::{dual_fan, tropicalization_cone, DualFan, GeneratedCone, NewtonData};

/// A triangular compact facet with vertices `p1, p2, p3` and a boundary
/// ray `σ` with `m_σ = ℓ_σ(p1) = ℓ_σ(p2) = ℓ_σ(p3) - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct B1Facet {
    /// Dual fan ray of the facet.
    pub node: usize,
    pub normal: LatticeVector,
    pub vertices: [DualVector; 3],
    pub witness: LatticeVector,
    pub witness_m: BigInt,
    /// `[p2, p3]` lies on the boundary of the diagram.
    pub removable: bool,
    /// Boundary ray whose face contains `[p2, p3]`, when removable.
    pub edge_ray: Option<LatticeVector>,
}

/// Data of one removal: `ℓ₊ = ℓ₁ + tℓ₃` and `m₊ = ℓ₊(p1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Removal {
    pub facet: B1Facet,
    pub t: BigInt,
    pub ell_plus: LatticeVector,
    pub m_plus: BigInt,
    pub removed_support: Vec<DualVector>,
}

/// Boundary ray whose face contains the segment `[a, b]`.
fn boundary_ray_through(fan: &DualFan, a: &DualVector, b: &DualVector) -> Option<usize> {
    fan.rays.iter().position(|r| r.on_boundary && r.ell.eval(a) == r.m && r.ell.eval(b) == r.m)
}

/// All B₁-facets of the diagram, each with its removability flag.
pub fn find_removable_b1(nd: &NewtonData, fan: &DualFan) -> Result<Vec<B1Facet>> {
    if nd.rank() != 3 {
        return Err(Error::UnsupportedRank(nd.rank()));
    }
    let mut out: Vec<B1Facet> = Vec::new();
    for n in fan.nodes() {
        let node = &fan.rays[n];
        let vs = &node.face.vertices;
        if vs.len() != 3 {
            continue;
        }
        for w in fan.rays.iter().filter(|r| r.on_boundary) {
            let lv: Vec<BigInt> = vs.iter().map(|v| w.ell.eval(v) - &w.m).collect();
            let zeros: Vec<usize> = (0..3).filter(|&i| lv[i].is_zero()).collect();
            let Some(top) = (0..3).find(|&i| lv[i].is_one()) else { continue };
            if zeros.len() != 2 {
                continue;
            }
            let p3 = &vs[top];
            let mut found = false;
            for (a, b) in [(zeros[1], zeros[0]), (zeros[0], zeros[1])] {
                // a plays p1, b plays p2
                if let Some(r) = boundary_ray_through(fan, &vs[b], p3) {
                    found = true;
                    push_unique(&mut out, B1Facet {
                        node: n,
                        normal: node.ell.clone(),
                        vertices: [vs[a].clone(), vs[b].clone(), p3.clone()],
                        witness: w.ell.clone(),
                        witness_m: w.m.clone(),
                        removable: true,
                        edge_ray: Some(fan.rays[r].ell.clone()),
                    });
                }
            }
            if !found {
                push_unique(&mut out, B1Facet {
                    node: n,
                    normal: node.ell.clone(),
                    vertices: [vs[zeros[0]].clone(), vs[zeros[1]].clone(), p3.clone()],
                    witness: w.ell.clone(),
                    witness_m: w.m.clone(),
                    removable: false,
                    edge_ray: None,
                });
            }
        }
    }
    Ok(out)
}

fn push_unique(out: &mut Vec<B1Facet>, f: B1Facet) {
    if !out.iter().any(|g| g.node == f.node && g.vertices == f.vertices) {
        out.push(f);
    }
}

/// Drops the support points below the level `ℓ₊ = m₊` cut out by a
/// removable B₁-facet.
pub fn remove_b1_facet(nd: &NewtonData, fan: &DualFan, facet: &B1Facet) -> Result<(NewtonData, Removal)> {
    let Some(l1) = facet.edge_ray.as_ref().filter(|_| facet.removable) else {
        return Err(Error::Hypothesis("the B1-facet is not removable".into()));
    };
    if fan.nodes().len() < 2 {
        return Err(Error::Hypothesis("the B1-facet is the whole diagram".into()));
    }
    let [p1, p2, p3] = &facet.vertices;
    let l3 = &facet.witness;
    let t = l1.eval(&p1.sub(p2));
    let ell_plus = l1.add(&l3.scale(&t));
    let m_plus = ell_plus.eval(p1);
    if !ell_plus.is_primitive() || ell_plus.eval(p3) != m_plus || !nd.cone().contains(&ell_plus) {
        return Err(Error::Internal(format!("bad cut functional {ell_plus}")));
    }
    let (keep, removed): (Vec<DualVector>, Vec<DualVector>) =
        nd.support().iter().cloned().partition(|p| ell_plus.eval(p) >= m_plus);
    let reduced = nd.with_support(keep)?;
    Ok((reduced, Removal { facet: facet.clone(), t, ell_plus, m_plus, removed_support: removed }))
}

/// Replaces Σ by the cone generated by the tropicalization.
pub fn restrict_to_tropicalization(nd: &NewtonData) -> Result<NewtonData> {
    let fan = dual_fan(nd)?;
    match tropicalization_cone(nd, &fan)? {
        GeneratedCone::Full(c) => {
            if same_rays(c.rays(), nd.cone().rays()) {
                Ok(nd.clone())
            } else {
                nd.with_cone(c)
            }
        }
        GeneratedCone::Degenerate { dim, .. } => Err(Error::Hypothesis(format!(
            "the tropicalization spans a cone of dimension {dim}; the germ is rational"
        ))),
    }
}

fn same_rays(a: &[LatticeVector], b: &[LatticeVector]) -> bool {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    a.sort();
    b.sort();
    a == b
}

/// Nodes joined when their facets share an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafGraph {
    /// Dual fan rays of the nodes.
    pub nodes: Vec<usize>,
    /// Pairs of positions in `nodes`.
    pub edges: Vec<(usize, usize)>,
}

impl LeafGraph {
    pub fn new(fan: &DualFan) -> LeafGraph {
        let nodes = fan.nodes();
        let mut edges = Vec::new();
        for c in fan.two_cones.iter().filter(|c| c.compact) {
            let (a, b) = (nodes.iter().position(|&n| n == c.rays.0), nodes.iter().position(|&n| n == c.rays.1));
            if let (Some(a), Some(b)) = (a, b) {
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort();
        LeafGraph { nodes, edges }
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == i || b == i).count()
    }

    /// Nodes with exactly one neighbour.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.degree(i) == 1).map(|i| self.nodes[i]).collect()
    }

    /// Nodes all of whose facet edges but one lie on the boundary of the
    /// diagram.
    pub fn boundary_leaves(&self, fan: &DualFan) -> Vec<usize> {
        self.nodes
            .iter()
            .cloned()
            .filter(|&n| {
                let inner = fan.rays[n]
                    .face
                    .edges
                    .iter()
                    .filter(|(a, b)| boundary_ray_through(fan, a, b).is_none())
                    .count();
                inner == 1
            })
            .collect()
    }
}

/// One stage of [`reduce_to_nonnegative_zk`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionStep {
    Restricted { from: Vec<LatticeVector>, to: Vec<LatticeVector> },
    Removed { removal: Box<Removal>, node_multiplicity: Rat },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub data: NewtonData,
    pub log: Vec<ReductionStep>,
}

/// Every node has `m_n(Z_K - E) ≥ 0`, or every node has
/// `0 ≤ m_n(Z_K) < 1`.
pub(crate) fn nonnegative_or_trivial(m: &[(usize, Rat)]) -> bool {
    let zero = Rat::zero();
    let minus_one = -Rat::one();
    m.iter().all(|(_, x)| *x >= zero) || m.iter().all(|(_, x)| *x < zero && *x >= minus_one)
}

/// Restricts to the tropicalization and removes B₁-facets of nodes with
/// `m_n(Z_K - E) < 0` until no such node is left.
pub fn reduce_to_nonnegative_zk(nd: &NewtonData, shell_cap: usize) -> Result<Reduction> {
    let fan = dual_fan(nd)?;
    match surface_delta(nd, &fan, shell_cap)? {
        Delta::Finite(d) if d.is_zero() => {}
        d => {
            return Err(Error::Hypothesis(format!(
                "reduction needs a normal surface, but δ = {d}; restricting Σ would change the germ"
            )))
        }
    }
    let mut cur = nd.clone();
    let mut log = Vec::new();
    let budget = nd.facet_normals().len() + 1;
    for _ in 0..=budget {
        let next = restrict_to_tropicalization(&cur)?;
        if !same_rays(next.cone().rays(), cur.cone().rays()) {
            log.push(ReductionStep::Restricted { from: cur.cone().rays().to_vec(), to: next.cone().rays().to_vec() });
        }
        cur = next;
        let fan = dual_fan(&cur)?;
        let g = build_graph(&cur, &fan)?;
        let zk = canonical_cycle_adjunction(&g)?;
        let m = node_multiplicities(&g, &zk);
        if nonnegative_or_trivial(&m) {
            return Ok(Reduction { data: cur, log });
        }
        let negative: Vec<(usize, Rat)> = m
            .iter()
            .filter(|(_, x)| *x < Rat::zero())
            .map(|(v, x)| (g.vertices[*v].fan_ray.unwrap(), x.clone()))
            .collect();
        let facets = find_removable_b1(&cur, &fan)?;
        let Some((facet, mult)) = facets
            .iter()
            .filter(|f| f.removable)
            .find_map(|f| negative.iter().find(|(n, _)| *n == f.node).map(|(_, x)| (f, x.clone())))
        else {
            return Err(Error::Hypothesis(
                "a node has m(Z_K - E) < 0 but no removable B1-facet exists; \
                 the diagram may fail to be Gorenstein pointed or the germ may be rational"
                    .into(),
            ));
        };
        let (reduced, removal) = remove_b1_facet(&cur, &fan, facet)?;
        log.push(ReductionStep::Removed { removal: Box::new(removal), node_multiplicity: mult });
        cur = reduced;
    }
    Err(Error::Internal("reduction did not terminate".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{pg_count, DEFAULT_SHELL_CAP};
    use crate::reduction::normal_form::{graph_normal_form, graphs_isomorphic};

    const OCT: &[&[i64]] = &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]];

    fn dv(c: &[i64]) -> DualVector {
        DualVector::from_i64(c)
    }

    #[test]
    fn example_facet_is_removed() {
        let nd = NewtonData::from_i64(OCT, &[&[3, 0, 0], &[1, 3, 0], &[0, 0, 5], &[0, 10, 1]]).unwrap();
        let fan = dual_fan(&nd).unwrap();
        let facets = find_removable_b1(&nd, &fan).unwrap();
        let f = facets.iter().find(|f| f.removable).unwrap();
        assert_eq!(f.normal, LatticeVector::from_i64(&[19, 2, 5]));
        let mut vs = f.vertices.to_vec();
        vs.sort();
        let mut want = vec![dv(&[1, 3, 0]), dv(&[0, 10, 1]), dv(&[0, 0, 5])];
        want.sort();
        assert_eq!(vs, want);
        assert_eq!(f.witness, LatticeVector::from_i64(&[1, 0, 0]));
        assert!(f.witness_m.is_zero());
        assert_eq!(f.vertices, [dv(&[0, 0, 5]), dv(&[0, 10, 1]), dv(&[1, 3, 0])]);
        assert_eq!(f.edge_ray, Some(LatticeVector::from_i64(&[1, 0, 1])));
        let (reduced, removal) = remove_b1_facet(&nd, &fan, f).unwrap();
        assert_eq!(removal.t, BigInt::from(4));
        assert_eq!(removal.m_plus, BigInt::from(5));
        assert_eq!(removal.ell_plus, LatticeVector::from_i64(&[5, 0, 1]));
        let mut s = reduced.support().to_vec();
        s.sort();
        let mut want = vec![dv(&[3, 0, 0]), dv(&[1, 3, 0]), dv(&[0, 0, 5])];
        want.sort();
        assert_eq!(s, want);

        let red = reduce_to_nonnegative_zk(&nd, DEFAULT_SHELL_CAP).unwrap();
        assert!(red.log.iter().any(|s| matches!(s, ReductionStep::Removed { node_multiplicity, .. } if *node_multiplicity == -Rat::one())));
        let g0 = build_graph(&nd, &fan).unwrap();
        let fan1 = dual_fan(&red.data).unwrap();
        let g1 = build_graph(&red.data, &fan1).unwrap();
        assert!(graphs_isomorphic(&graph_normal_form(&g0).unwrap(), &graph_normal_form(&g1).unwrap()).unwrap());
        assert_eq!(pg_count(&fan).unwrap(), pg_count(&fan1).unwrap());
    }

    #[test]
    fn no_b1_facet_for_brieskorn() {
        let nd = NewtonData::from_i64(OCT, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 7]]).unwrap();
        let fan = dual_fan(&nd).unwrap();
        assert!(find_removable_b1(&nd, &fan).unwrap().is_empty());
        let red = reduce_to_nonnegative_zk(&nd, DEFAULT_SHELL_CAP).unwrap();
        assert!(red.log.is_empty());
    }

    #[test]
    fn tropicalization_restrictions() {
        let e7 = NewtonData::from_i64(OCT, &[&[3, 0, 0], &[1, 3, 0], &[0, 0, 2]]).unwrap();
        let r = restrict_to_tropicalization(&e7).unwrap();
        let mut rays = r.cone().rays().to_vec();
        rays.sort();
        let mut want: Vec<LatticeVector> = [[0, 0, 1], [0, 1, 0], [2, 0, 1]].iter().map(|c| LatticeVector::from_i64(c)).collect();
        want.sort();
        assert_eq!(rays, want);
        let b = NewtonData::from_i64(OCT, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 7]]).unwrap();
        assert_eq!(restrict_to_tropicalization(&b).unwrap(), b);
    }

    #[test]
    fn leaf_characterisations_agree() {
        let cases: &[&[&[i64]]] = &[
            &[&[3, 0, 0], &[1, 3, 0], &[0, 0, 5], &[0, 10, 1]],
            &[&[6, 0, 0], &[2, 2, 0], &[0, 6, 0], &[0, 0, 6], &[1, 0, 3]],
        ];
        for s in cases {
            let nd = NewtonData::from_i64(OCT, s).unwrap();
            let fan = dual_fan(&nd).unwrap();
            let lg = LeafGraph::new(&fan);
            if lg.nodes.len() > 1 {
                assert_eq!(lg.leaves(), lg.boundary_leaves(&fan));
            }
        }
    }
}
