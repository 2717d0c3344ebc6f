use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::cf::{alpha, beta, canonical_primitive_sequence};
use crate::lattice::vector::LatticeVector;
use crate::newton::{DualFan, FaceData, NewtonData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    Node,
    Bamboo,
    Extended,
}

impl VertexKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            VertexKind::Node => "node",
            VertexKind::Bamboo => "bamboo",
            VertexKind::Extended => "extended",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlumbingVertex {
    pub id: usize,
    pub kind: VertexKind,
    pub ell: LatticeVector,
    /// Weight `min ℓ_v(S)`.
    pub m: BigInt,
    /// Euler number `-b_v`; absent on extended nodes.
    pub euler: Option<BigInt>,
    pub genus: BigInt,
    /// Index of the dual fan ray for nodes and extended nodes.
    pub fan_ray: Option<usize>,
    /// Bounded face of a node.
    pub face: Option<FaceData>,
}

/// A chain of vertices joining two extended nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bamboo {
    /// End vertices (nodes or extended nodes), in the order of the chain.
    pub ends: (usize, usize),
    /// Interior vertices from `ends.0` to `ends.1`.
    pub vertices: Vec<usize>,
    pub alpha: BigInt,
    /// Relative to `ends.0`; taken as 1 when `alpha` is 1, matching the single
    /// (-1)-vertex inserted in that case.
    pub beta: BigInt,
}

/// A plumbing multigraph. Ids `0..num_core()` are the vertices of the
/// resolution graph (nodes first, then bamboo vertices); extended nodes
/// come last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlumbingGraph {
    pub vertices: Vec<PlumbingVertex>,
    /// Unordered edges `(a, b)` with `a < b`; repeated for parallel edges.
    pub edges: Vec<(usize, usize)>,
    pub bamboos: Vec<Bamboo>,
}

impl PlumbingGraph {
    /// A graph given only by Euler numbers, genera and edges, with every
    /// vertex a node. Used for hand-made examples.
    pub fn from_decorations(euler: &[i64], genus: &[i64], edges: &[(usize, usize)]) -> Result<PlumbingGraph> {
        if euler.len() != genus.len() {
            return Err(Error::InvalidArgument("euler and genus lists differ in length".into()));
        }
        let n = euler.len();
        let vertices = (0..n)
            .map(|i| PlumbingVertex {
                id: i,
                kind: VertexKind::Node,
                ell: LatticeVector::zero(0),
                m: BigInt::zero(),
                euler: Some(BigInt::from(euler[i])),
                genus: BigInt::from(genus[i]),
                fan_ray: None,
                face: None,
            })
            .collect();
        let mut es = Vec::new();
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::InvalidArgument(format!("bad edge ({a}, {b})")));
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort();
        Ok(PlumbingGraph { vertices, edges: es, bamboos: vec![] })
    }

    /// Number of non-extended vertices.
    pub fn num_core(&self) -> usize {
        self.vertices.iter().filter(|v| v.kind != VertexKind::Extended).count()
    }

    pub fn nodes(&self) -> Vec<usize> {
        self.vertices.iter().filter(|v| v.kind == VertexKind::Node).map(|v| v.id).collect()
    }

    pub fn extended_nodes(&self) -> Vec<usize> {
        self.vertices.iter().filter(|v| v.kind == VertexKind::Extended).map(|v| v.id).collect()
    }

    pub fn is_core(&self, v: usize) -> bool {
        self.vertices[v].kind != VertexKind::Extended
    }

    /// Neighbours in the extended graph, with repetition for parallel edges.
    pub fn neighbours_star(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect();
        out.sort();
        out
    }

    /// Neighbours among non-extended vertices.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.neighbours_star(v).into_iter().filter(|&u| self.is_core(u)).collect()
    }

    /// Edges between non-extended vertices.
    pub fn core_edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().filter(|&&(a, b)| self.is_core(a) && self.is_core(b)).cloned().collect()
    }

    pub fn euler(&self, v: usize) -> BigInt {
        self.vertices[v].euler.clone().unwrap_or_default()
    }

    /// The resolution graph is connected.
    pub fn is_connected(&self) -> bool {
        let n = self.num_core();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Connected, acyclic and without parallel edges.
    pub fn is_tree(&self) -> bool {
        let n = self.num_core();
        n > 0 && self.is_connected() && self.core_edges().len() == n - 1
    }

    /// Vertices violating `-b_v ℓ_v + Σ ℓ_u = 0` or
    /// `-b_v m_v + Σ m_u = -2 Vol₂(F_v)`, summing over all neighbours
    /// including extended nodes. Hand-made graphs carry no vectors and
    /// are skipped.
    pub fn relation_defects(&self) -> Vec<usize> {
        let mut bad = Vec::new();
        for v in 0..self.num_core() {
            let x = &self.vertices[v];
            if x.ell.rank() == 0 {
                continue;
            }
            let e = self.euler(v);
            let mut l = x.ell.scale(&e);
            let mut m = &e * &x.m;
            for u in self.neighbours_star(v) {
                l = l.add(&self.vertices[u].ell);
                m += &self.vertices[u].m;
            }
            let area = x.face.as_ref().and_then(|f| f.lattice_area_doubled.clone()).unwrap_or_default();
            if !l.is_zero() || m != -area {
                bad.push(v);
            }
        }
        bad
    }
}

/// Builds the plumbing graph of the resolution given by the dual fan.
pub fn build_graph(nd: &NewtonData, fan: &DualFan) -> Result<PlumbingGraph> {
    if fan.rank != 3 {
        return Err(Error::UnsupportedRank(fan.rank));
    }
    let nodes = fan.nodes();
    let ext = fan.extended_nodes();
    let star: Vec<usize> = nodes.iter().chain(&ext).cloned().collect();

    // bamboo data between extended nodes, as positions in `star`
    struct Chain {
        ends: (usize, usize),
        ells: Vec<LatticeVector>,
        selfints: Vec<BigInt>,
        alpha: BigInt,
        beta: BigInt,
    }
    let mut chains = Vec::new();
    for a in 0..star.len() {
        for b in (a + 1)..star.len() {
            let Some(tc) = fan.two_cone(star[a], star[b]) else { continue };
            let Some(t) = tc.length.clone() else { continue };
            let (la, lb) = (&fan.rays[star[a]].ell, &fan.rays[star[b]].ell);
            let seq = canonical_primitive_sequence(la, lb)?;
            let al = alpha(la, lb)?;
            let be = if al.is_one() { BigInt::one() } else { beta(la, lb)? };
            let s = seq.vectors.len();
            let mut k = BigInt::zero();
            while k < t {
                chains.push(Chain {
                    ends: (a, b),
                    ells: seq.vectors[1..s - 1].to_vec(),
                    selfints: seq.selfints.clone(),
                    alpha: al.clone(),
                    beta: be.clone(),
                });
                k += 1;
            }
        }
    }

    let bamboo_count: usize = chains.iter().map(|c| c.ells.len()).sum();
    let first_ext = nodes.len() + bamboo_count;
    let star_id = |pos: usize| if pos < nodes.len() { pos } else { first_ext + pos - nodes.len() };

    let mut vertices = Vec::new();
    for (i, &r) in nodes.iter().enumerate() {
        let ray = &fan.rays[r];
        vertices.push(PlumbingVertex {
            id: i,
            kind: VertexKind::Node,
            ell: ray.ell.clone(),
            m: ray.m.clone(),
            euler: None,
            genus: ray.face.interior_points.clone().unwrap_or_default(),
            fan_ray: Some(r),
            face: Some(ray.face.clone()),
        });
    }
    let mut edges = Vec::new();
    let mut bamboos = Vec::new();
    for c in &chains {
        let mut ids = Vec::new();
        for (j, l) in c.ells.iter().enumerate() {
            let id = vertices.len();
            vertices.push(PlumbingVertex {
                id,
                kind: VertexKind::Bamboo,
                ell: l.clone(),
                m: nd.min_value(l),
                euler: Some(-c.selfints[j].clone()),
                genus: BigInt::zero(),
                fan_ray: None,
                face: None,
            });
            ids.push(id);
        }
        let (a, b) = (star_id(c.ends.0), star_id(c.ends.1));
        let mut path = vec![a];
        path.extend(ids.iter().cloned());
        path.push(b);
        for w in path.windows(2) {
            edges.push((w[0].min(w[1]), w[0].max(w[1])));
        }
        bamboos.push(Bamboo { ends: (a, b), vertices: ids, alpha: c.alpha.clone(), beta: c.beta.clone() });
    }
    for (i, &r) in ext.iter().enumerate() {
        let ray = &fan.rays[r];
        vertices.push(PlumbingVertex {
            id: first_ext + i,
            kind: VertexKind::Extended,
            ell: ray.ell.clone(),
            m: ray.m.clone(),
            euler: None,
            genus: BigInt::zero(),
            fan_ray: Some(r),
            face: None,
        });
    }
    edges.sort();
    let mut g = PlumbingGraph { vertices, edges, bamboos };

    // Euler numbers from the vector relation -b ℓ_v + Σ ℓ_u = 0
    for v in 0..g.num_core() {
        let sum = g
            .neighbours_star(v)
            .iter()
            .fold(LatticeVector::zero(3), |acc, &u| acc.add(&g.vertices[u].ell));
        let ell = &g.vertices[v].ell;
        let k = (0..3).find(|&k| !ell[k].is_zero()).expect("rays are nonzero");
        let (b, rem) = sum[k].div_rem(&ell[k]);
        if !rem.is_zero() || ell.scale(&b) != sum {
            return Err(Error::Internal(format!("no Euler number satisfies the relation at vertex {v}")));
        }
        match &g.vertices[v].euler {
            Some(e) if *e != -b.clone() => {
                return Err(Error::Internal(format!("Euler number of bamboo vertex {v} disagrees with the relation")))
            }
            _ => g.vertices[v].euler = Some(-b),
        }
    }
    Ok(g)
}
