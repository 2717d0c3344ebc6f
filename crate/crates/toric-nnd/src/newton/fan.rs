use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::polyhedron::{FaceData, NewtonData};
use crate::error::{Error, Result};
use crate::lattice::linalg;
use crate::lattice::vector::{cross, det2, dot, DualVector, LatticeVector};

/// A ray of the dual fan: a facet normal of Γ⁺ with its weight and face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanRay {
    pub ell: LatticeVector,
    pub m: BigInt,
    pub face: FaceData,
    /// The ray lies on the boundary of Σ.
    pub on_boundary: bool,
    /// `(1, dim(F ∩ Γ(f)))`.
    pub class: (u8, u8),
    /// Support indices where `ell` attains `m`.
    pub argmin: Vec<usize>,
}

impl FanRay {
    /// An interior ray, dual to a compact facet.
    pub fn is_node(&self) -> bool {
        !self.on_boundary && self.class == (1, 2)
    }

    /// A boundary ray whose face meets the diagram in a segment.
    pub fn is_extended_node(&self) -> bool {
        self.on_boundary && self.class == (1, 1)
    }
}

/// A two dimensional cone of the dual fan, dual to an edge of Γ⁺ (rank 3)
/// or to a vertex (rank 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCone {
    pub rays: (usize, usize),
    /// The dual face is bounded.
    pub compact: bool,
    /// Endpoints of the dual edge when it is a bounded segment.
    pub segment: Option<(DualVector, DualVector)>,
    /// Lattice length of the bounded segment.
    pub length: Option<BigInt>,
}

/// The normal fan of Γ⁺ restricted to Σ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFan {
    pub rank: usize,
    pub rays: Vec<FanRay>,
    pub two_cones: Vec<TwoCone>,
    /// Fan ray index of each ray of Σ, in the order of the cone.
    pub sigma_rays: Vec<usize>,
    /// Rank 3: boundary rays in cyclic order along ∂Σ, starting at the
    /// first ray of Σ. Rank 2: all rays ordered from the first ray of Σ to
    /// the second.
    pub boundary_cycle: Vec<usize>,
    /// Rank 3: for each 2-face of Σ, its fan rays ordered from one
    /// bounding ray of Σ to the other (both included).
    pub face_rays: Vec<Vec<usize>>,
    /// Vertices of Γ⁺.
    pub vertices: Vec<DualVector>,
}

impl DualFan {
    pub fn nodes(&self) -> Vec<usize> {
        (0..self.rays.len()).filter(|&i| self.rays[i].is_node()).collect()
    }

    pub fn extended_nodes(&self) -> Vec<usize> {
        (0..self.rays.len()).filter(|&i| self.rays[i].is_extended_node()).collect()
    }

    pub fn interior_rays(&self) -> Vec<usize> {
        (0..self.rays.len()).filter(|&i| !self.rays[i].on_boundary).collect()
    }

    pub fn boundary_rays(&self) -> Vec<usize> {
        (0..self.rays.len()).filter(|&i| self.rays[i].on_boundary).collect()
    }

    pub fn find_ray(&self, ell: &LatticeVector) -> Option<usize> {
        self.rays.iter().position(|r| &r.ell == ell)
    }

    pub fn two_cone(&self, i: usize, j: usize) -> Option<&TwoCone> {
        let key = (i.min(j), i.max(j));
        self.two_cones.iter().find(|c| c.rays == key)
    }

    /// Consecutive pairs of the boundary cycle (rank 3).
    pub fn boundary_cells(&self) -> Vec<(usize, usize)> {
        let k = self.boundary_cycle.len();
        if self.rank != 3 {
            return vec![];
        }
        (0..k).map(|i| (self.boundary_cycle[i], self.boundary_cycle[(i + 1) % k])).collect()
    }
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().filter(|x| b.contains(x)).cloned().collect()
}

/// Computes the dual fan of Γ⁺.
pub fn dual_fan(nd: &NewtonData) -> Result<DualFan> {
    let r = nd.rank();
    let cone = nd.cone();
    let mut rays = Vec::new();
    for l in nd.facet_normals() {
        let (m, face) = nd.weight(l)?;
        let on_boundary = !cone.contains_in_interior(l);
        rays.push(FanRay { ell: l.clone(), m, class: (1, face.dim), face, on_boundary, argmin: nd.argmin(l) });
    }
    let mut sigma_rays = Vec::new();
    for c in cone.rays() {
        let i = rays
            .iter()
            .position(|fr| &fr.ell == c)
            .ok_or_else(|| Error::Internal(format!("ray {c} of the cone is not a ray of the fan")))?;
        sigma_rays.push(i);
    }

    let support = nd.support();
    let mut two_cones = Vec::new();
    for i in 0..rays.len() {
        for j in (i + 1)..rays.len() {
            let pts = intersect(&rays[i].argmin, &rays[j].argmin);
            if pts.is_empty() {
                continue;
            }
            let dirs: Vec<DualVector> = cone
                .dual_rays()
                .iter()
                .filter(|u| rays[i].ell.eval(u).is_zero() && rays[j].ell.eval(u).is_zero())
                .cloned()
                .collect();
            let p0 = &support[pts[0]];
            let mut rows: Vec<Vec<BigInt>> = pts[1..].iter().map(|&k| support[k].sub(p0).into_coords()).collect();
            rows.extend(dirs.iter().map(|u| u.coords().to_vec()));
            if linalg::rank(&rows) != r - 2 {
                continue;
            }
            let compact = dirs.is_empty();
            let (segment, length) = if r == 3 && compact {
                let (a, b) = segment_ends(pts.iter().map(|&k| &support[k]).collect());
                let len = b.sub(&a).content();
                (Some((a, b)), Some(len))
            } else {
                (None, None)
            };
            two_cones.push(TwoCone { rays: (i, j), compact, segment, length });
        }
    }

    let (boundary_cycle, face_rays) = if r == 3 {
        boundary_order(&rays, nd, &sigma_rays)
    } else {
        let mut all: Vec<usize> = (0..rays.len()).collect();
        // x precedes y iff det(x, y) > 0
        all.sort_by(|&x, &y| det2(rays[y].ell.coords(), rays[x].ell.coords()).cmp(&BigInt::zero()));
        (all, vec![])
    };

    let mut vertices = Vec::new();
    for p in nd.essential_support() {
        let active: Vec<Vec<BigInt>> =
            rays.iter().filter(|fr| fr.ell.eval(&p) == fr.m).map(|fr| fr.ell.coords().to_vec()).collect();
        if linalg::rank(&active) == r {
            vertices.push(p);
        }
    }
    vertices.sort();

    Ok(DualFan { rank: r, rays, two_cones, sigma_rays, boundary_cycle, face_rays, vertices })
}

/// The two extreme points of a collinear point set.
fn segment_ends(pts: Vec<&DualVector>) -> (DualVector, DualVector) {
    let p0 = pts[0];
    let dir = pts.iter().map(|p| p.sub(p0)).find(|d| !d.is_zero());
    match dir {
        None => (p0.clone(), p0.clone()),
        Some(d) => {
            let key = |p: &DualVector| dot(p.sub(p0).coords(), d.coords());
            let a = pts.iter().min_by_key(|p| key(p)).unwrap();
            let b = pts.iter().max_by_key(|p| key(p)).unwrap();
            let (a, b) = ((*a).clone(), (*b).clone());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        }
    }
}

fn boundary_order(rays: &[FanRay], nd: &NewtonData, sigma_rays: &[usize]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let cone = nd.cone();
    let k = cone.rays().len();
    let mut cycle = Vec::new();
    let mut per_face = Vec::new();
    for i in 0..k {
        let (ca, cb) = (&cone.rays()[i], &cone.rays()[(i + 1) % k]);
        let n = &cone.dual_rays()[i];
        let orient = cross(ca.coords(), cb.coords());
        let mut on: Vec<usize> = (0..rays.len()).filter(|&t| rays[t].on_boundary && rays[t].ell.eval(n).is_zero()).collect();
        on.sort_by(|&x, &y| {
            if x == y {
                return Ordering::Equal;
            }
            let c = cross(rays[x].ell.coords(), rays[y].ell.coords());
            // x precedes y when (x, y) has the orientation of (ca, cb)
            if dot(&c, &orient).is_positive() {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        });
        debug_assert_eq!(on.first(), Some(&sigma_rays[i]));
        debug_assert_eq!(on.last(), Some(&sigma_rays[(i + 1) % k]));
        cycle.extend(on[..on.len() - 1].iter().cloned());
        per_face.push(on);
    }
    (cycle, per_face)
}
