use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::cone::ConeData;
use super::fan::DualFan;
use super::polyhedron::NewtonData;
use crate::error::{Error, Result};
use crate::lattice::linalg::{self, KernelLattice};
use crate::lattice::vector::{cross, dot, DualVector, LatticeVector};

/// The cone generated by a set of rank 3 vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratedCone {
    Full(ConeData),
    /// The generators span a subspace of the given dimension.
    Degenerate { generators: Vec<LatticeVector>, dim: usize },
}

/// Extremal rays of the cone generated by `gens`, which must lie in some
/// strictly convex cone.
pub fn generated_cone(gens: &[LatticeVector]) -> Result<GeneratedCone> {
    let mut g: Vec<LatticeVector> = Vec::new();
    for v in gens {
        let p = v.primitive()?;
        if !g.contains(&p) {
            g.push(p);
        }
    }
    g.sort();
    let dim = linalg::rank(&g.iter().map(|v| v.coords().to_vec()).collect::<Vec<_>>());
    if dim < 3 {
        return Ok(GeneratedCone::Degenerate { generators: g, dim });
    }
    let mut extremal: Vec<LatticeVector> = Vec::new();
    for i in 0..g.len() {
        for j in (i + 1)..g.len() {
            let c = cross(g[i].coords(), g[j].coords());
            if c.iter().all(|x| x.is_zero()) {
                continue;
            }
            let vals: Vec<BigInt> = g.iter().map(|v| dot(&c, v.coords())).collect();
            let n = if vals.iter().all(|v| !v.is_negative()) {
                c
            } else if vals.iter().all(|v| !v.is_positive()) {
                c.iter().map(|x| -x).collect()
            } else {
                continue;
            };
            let on: Vec<&LatticeVector> = g.iter().filter(|v| dot(&n, v.coords()).is_zero()).collect();
            for a in &on {
                let signs: Vec<BigInt> = on.iter().map(|b| dot(&cross(a.coords(), b.coords()), &n)).collect();
                let extreme = signs.iter().all(|s| !s.is_negative()) || signs.iter().all(|s| !s.is_positive());
                if extreme && !extremal.contains(a) {
                    extremal.push((*a).clone());
                }
            }
        }
    }
    extremal.sort();
    Ok(GeneratedCone::Full(ConeData::new(extremal)?))
}

/// The cone generated by the fan cones whose dual faces meet the diagram
/// in positive dimension.
pub fn tropicalization_cone(nd: &NewtonData, fan: &DualFan) -> Result<GeneratedCone> {
    if nd.rank() != 3 {
        return Err(Error::UnsupportedRank(nd.rank()));
    }
    let mut gens: Vec<LatticeVector> = fan.rays.iter().filter(|r| r.class.1 > 0).map(|r| r.ell.clone()).collect();
    for c in fan.two_cones.iter().filter(|c| c.compact) {
        gens.push(fan.rays[c.rays.0].ell.clone());
        gens.push(fan.rays[c.rays.1].ell.clone());
    }
    generated_cone(&gens)
}

/// Result of projecting the diagram along a 2-face of Σ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transverse {
    /// The fan does not subdivide the face; the orbit misses the germ.
    NotContained,
    /// Rank 2 Newton data of the generic transverse curve.
    Curve(NewtonData),
}

/// Projects Γ⁺ onto the dual of the lattice spanned by a 2-face ⟨a, b⟩ of
/// Σ.
pub fn transverse_projection(nd: &NewtonData, a: &LatticeVector, b: &LatticeVector) -> Result<Transverse> {
    if nd.rank() != 3 {
        return Err(Error::UnsupportedRank(nd.rank()));
    }
    let cone = nd.cone();
    let (a, b) = (a.primitive()?, b.primitive()?);
    let is_face = cone.two_faces().iter().any(|&(i, j)| {
        let (x, y) = (&cone.rays()[i], &cone.rays()[j]);
        (*x == a && *y == b) || (*x == b && *y == a)
    });
    if !is_face {
        return Err(Error::NotAFace(format!("<{a}, {b}>")));
    }
    let k = KernelLattice::new(&cross(a.coords(), b.coords()));
    let proj = |u: &DualVector| -> DualVector {
        DualVector::new(k.basis.iter().map(|e| dot(e, u.coords())).collect())
    };
    let ray = |v: &LatticeVector| LatticeVector::new(k.coords(v.coords()));
    let curve_cone = ConeData::new(vec![ray(&a), ray(&b)])?;
    let support: Vec<DualVector> = nd.support().iter().map(proj).collect();
    let curve = NewtonData::build(curve_cone, support)?;
    if curve.facet_normals().len() > 2 {
        Ok(Transverse::Curve(curve))
    } else {
        Ok(Transverse::NotContained)
    }
}

/// Transverse data of every 2-face of Σ, in the cyclic order of the cone.
pub fn transverse_curves(nd: &NewtonData) -> Result<Vec<Transverse>> {
    let cone = nd.cone();
    cone.two_faces()
        .iter()
        .map(|&(i, j)| transverse_projection(nd, &cone.rays()[i], &cone.rays()[j]))
        .collect()
}
