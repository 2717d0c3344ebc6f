use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::linalg;
use crate::lattice::vector::{cross, det2, det3, dot, DualVector, LatticeVector};

/// A full dimensional strictly convex rational cone Σ ⊂ N_R of rank 2 or 3.
///
/// Rays are primitive. In rank 3 they are stored in cyclic order along the
/// boundary, and `dual_rays[i]` is the inward normal of the 2-face spanned
/// by `rays[i]` and `rays[i+1]`. In rank 2 the rays satisfy
/// `det(rays[0], rays[1]) > 0` and `dual_rays[i]` vanishes on `rays[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeData {
    rank: usize,
    rays: Vec<LatticeVector>,
    dual_rays: Vec<DualVector>,
}

impl ConeData {
    pub fn new(rays: Vec<LatticeVector>) -> Result<ConeData> {
        let rank = rays.first().map(|r| r.rank()).ok_or_else(|| Error::InvalidCone("no rays".into()))?;
        let mut prim = Vec::with_capacity(rays.len());
        for r in &rays {
            if r.rank() != rank {
                return Err(Error::RankMismatch { expected: rank, found: r.rank() });
            }
            let p = r.primitive().map_err(|_| Error::InvalidCone("zero ray".into()))?;
            if prim.contains(&p) {
                return Err(Error::InvalidCone(format!("repeated ray {p}")));
            }
            prim.push(p);
        }
        match rank {
            2 => Self::rank2(prim),
            3 => Self::rank3(prim),
            r => Err(Error::UnsupportedRank(r)),
        }
    }

    /// The positive orthant of the given rank.
    pub fn orthant(rank: usize) -> ConeData {
        ConeData::new((0..rank).map(|i| LatticeVector::unit(rank, i)).collect()).expect("orthant is valid")
    }

    fn rank2(mut rays: Vec<LatticeVector>) -> Result<ConeData> {
        if rays.len() != 2 {
            return Err(Error::InvalidCone(format!("a rank 2 cone needs exactly 2 rays, got {}", rays.len())));
        }
        let d = det2(rays[0].coords(), rays[1].coords());
        if d.is_zero() {
            return Err(Error::InvalidCone("rays are not independent".into()));
        }
        if d.is_negative() {
            rays.swap(0, 1);
        }
        let (a, b) = (&rays[0], &rays[1]);
        let n0 = DualVector::new(vec![-a[1].clone(), a[0].clone()]).primitive()?;
        let n1 = DualVector::new(vec![b[1].clone(), -b[0].clone()]).primitive()?;
        Ok(ConeData { rank: 2, rays, dual_rays: vec![n0, n1] })
    }

    fn rank3(rays: Vec<LatticeVector>) -> Result<ConeData> {
        let k = rays.len();
        let coords: Vec<Vec<BigInt>> = rays.iter().map(|r| r.coords().to_vec()).collect();
        if k < 3 || linalg::rank(&coords) < 3 {
            return Err(Error::InvalidCone("cone is not full dimensional".into()));
        }
        // facet normals from pairs of rays
        let mut facets: Vec<(DualVector, Vec<usize>)> = Vec::new();
        for i in 0..k {
            for j in (i + 1)..k {
                let c = cross(&coords[i], &coords[j]);
                let vals: Vec<BigInt> = coords.iter().map(|r| dot(&c, r)).collect();
                let sign = if vals.iter().all(|v| !v.is_negative()) {
                    1
                } else if vals.iter().all(|v| !v.is_positive()) {
                    -1
                } else {
                    continue;
                };
                let n = DualVector::new(c).scale(&BigInt::from(sign)).primitive()?;
                if facets.iter().any(|(m, _)| *m == n) {
                    continue;
                }
                let on: Vec<usize> = (0..k).filter(|&t| dot(n.coords(), &coords[t]).is_zero()).collect();
                facets.push((n, on));
            }
        }
        let mut interior = vec![BigInt::zero(); 3];
        for (n, on) in &facets {
            if on.len() != 2 {
                return Err(Error::InvalidCone(format!("{} rays lie on the facet with normal {n}; a ray is not extremal", on.len())));
            }
            for t in 0..3 {
                interior[t] += &n[t];
            }
        }
        if facets.len() < 3 || coords.iter().any(|r| !dot(&interior, r).is_positive()) {
            return Err(Error::InvalidCone("cone is not strictly convex".into()));
        }
        for (t, ray) in rays.iter().enumerate().take(k) {
            let c = facets.iter().filter(|(_, on)| on.contains(&t)).count();
            if c != 2 {
                return Err(Error::InvalidCone(format!("ray {ray} is not extremal")));
            }
        }
        // walk the boundary starting at ray 0
        let centre: Vec<BigInt> = (0..3).map(|t| coords.iter().map(|r| &r[t]).sum()).collect();
        let neighbours = |t: usize| -> Vec<usize> {
            facets.iter().filter(|(_, on)| on.contains(&t)).map(|(_, on)| if on[0] == t { on[1] } else { on[0] }).collect()
        };
        let first = neighbours(0);
        let next = if det3(&coords[0], &coords[first[0]], &centre).is_positive() { first[0] } else { first[1] };
        let mut order = vec![0usize, next];
        while order.len() < k {
            let cur = *order.last().unwrap();
            let prev = order[order.len() - 2];
            let nb = neighbours(cur);
            let nxt = if nb[0] == prev { nb[1] } else { nb[0] };
            order.push(nxt);
        }
        let rays: Vec<LatticeVector> = order.iter().map(|&t| rays[t].clone()).collect();
        let dual_rays = (0..k)
            .map(|i| {
                let (a, b) = (order[i], order[(i + 1) % k]);
                facets.iter().find(|(_, on)| on.contains(&a) && on.contains(&b)).map(|(n, _)| n.clone()).unwrap()
            })
            .collect();
        Ok(ConeData { rank: 3, rays, dual_rays })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    /// Generators of the dual cone Σ^∨ ⊂ M_R.
    pub fn dual_rays(&self) -> &[DualVector] {
        &self.dual_rays
    }

    /// Two dimensional faces of a rank 3 cone as pairs of consecutive ray
    /// indices.
    pub fn two_faces(&self) -> Vec<(usize, usize)> {
        if self.rank != 3 {
            return vec![];
        }
        let k = self.rays.len();
        (0..k).map(|i| (i, (i + 1) % k)).collect()
    }

    pub fn contains(&self, l: &LatticeVector) -> bool {
        self.dual_rays.iter().all(|n| !l.eval(n).is_negative())
    }

    pub fn contains_in_interior(&self, l: &LatticeVector) -> bool {
        self.dual_rays.iter().all(|n| l.eval(n).is_positive())
    }

    /// Whether `u` lies in the dual cone Σ^∨.
    pub fn dual_contains(&self, u: &DualVector) -> bool {
        self.rays.iter().all(|r| !r.eval(u).is_negative())
    }

    /// Whether the rays of a simplicial cone form part of a lattice basis.
    pub fn is_regular(&self) -> bool {
        match self.rank {
            2 => det2(self.rays[0].coords(), self.rays[1].coords()).abs() == BigInt::from(1),
            3 => {
                self.rays.len() == 3
                    && det3(self.rays[0].coords(), self.rays[1].coords(), self.rays[2].coords()).abs() == BigInt::from(1)
            }
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(c)
    }

    #[test]
    fn orthant_dual() {
        let c = ConeData::orthant(3);
        assert_eq!(c.rays().len(), 3);
        for n in c.dual_rays() {
            assert_eq!(n.content(), BigInt::from(1));
            assert!(c.rays().iter().filter(|r| r.eval(n).is_zero()).count() == 2);
        }
        assert!(c.is_regular());
    }

    #[test]
    fn four_ray_cone() {
        let c = ConeData::new(vec![lv(&[1, 0, 0]), lv(&[0, 1, 0]), lv(&[1, 0, 1]), lv(&[0, 1, 1])]).unwrap();
        assert_eq!(c.rays().len(), 4);
        let mut d: Vec<_> = c.dual_rays().to_vec();
        d.sort();
        let mut e = vec![
            DualVector::from_i64(&[0, 0, 1]),
            DualVector::from_i64(&[0, 1, 0]),
            DualVector::from_i64(&[1, 0, 0]),
            DualVector::from_i64(&[1, 1, -1]),
        ];
        e.sort();
        assert_eq!(d, e);
        // consecutive rays share a facet
        for (i, j) in c.two_faces() {
            let n = &c.dual_rays()[i];
            assert!(c.rays()[i].eval(n).is_zero() && c.rays()[j].eval(n).is_zero());
        }
    }

    #[test]
    fn brieskorn_cone() {
        let c = ConeData::new(vec![lv(&[1, 0, 0]), lv(&[0, 1, 0]), lv(&[5, 3, 10])]).unwrap();
        assert!(!c.is_regular());
        assert!(c.dual_contains(&DualVector::from_i64(&[6, 0, -3])));
        assert!(c.dual_contains(&DualVector::from_i64(&[0, 10, -3])));
    }

    #[test]
    fn invalid_cones() {
        assert!(ConeData::new(vec![lv(&[1, 0, 0]), lv(&[0, 1, 0])]).is_err());
        assert!(ConeData::new(vec![lv(&[1, 0, 0]), lv(&[-1, 0, 0]), lv(&[0, 1, 0]), lv(&[0, 0, 1])]).is_err());
        // (1,1,0) is not extremal
        assert!(ConeData::new(vec![lv(&[1, 0, 0]), lv(&[0, 1, 0]), lv(&[0, 0, 1]), lv(&[1, 1, 0])]).is_err());
        // (1,1,1) is interior
        assert!(ConeData::new(vec![lv(&[1, 0, 0]), lv(&[0, 1, 0]), lv(&[0, 0, 1]), lv(&[1, 1, 1])]).is_err());
        assert!(ConeData::new(vec![lv(&[1, 0]), lv(&[-1, 0])]).is_err());
        let c = ConeData::new(vec![lv(&[0, 1]), lv(&[1, 0])]).unwrap();
        assert_eq!(c.rays()[0], lv(&[1, 0]));
    }
}
