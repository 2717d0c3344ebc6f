use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::cone::ConeData;
use crate::error::{Error, Result};
use crate::lattice::linalg::{self, KernelLattice};
use crate::lattice::plane::{bounded_part, seg_len, PlaneChart, Polygon, P2};
use crate::lattice::vector::{cross, DualVector, LatticeVector};

/// Maps plane coordinates of a face back to the dual lattice.
type Lift = Box<dyn Fn(&P2) -> DualVector>;

/// The bounded part `F ∩ Γ(f)` of a face `F` of the Newton polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceData {
    /// Vertices in boundary order (a chain for `dim == 1`).
    pub vertices: Vec<DualVector>,
    pub dim: u8,
    /// The face of Γ⁺ itself is bounded.
    pub compact: bool,
    /// Total lattice length when `dim == 1`.
    pub lattice_length: Option<BigInt>,
    /// Twice the lattice area when `dim == 2`.
    pub lattice_area_doubled: Option<BigInt>,
    /// Interior lattice points when `dim == 2`.
    pub interior_points: Option<BigInt>,
    /// Bounded edges of the face.
    pub edges: Vec<(DualVector, DualVector)>,
}

/// Γ⁺ = conv(S + Σ^∨) for a cone Σ and a finite support S.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonData {
    cone: ConeData,
    support: Vec<DualVector>,
    facets: Vec<LatticeVector>,
}

impl NewtonData {
    /// Validates the input and computes the facet normals of Γ⁺.
    pub fn build(cone: ConeData, support: Vec<DualVector>) -> Result<NewtonData> {
        if support.is_empty() {
            return Err(Error::EmptySupport);
        }
        let r = cone.rank();
        for p in &support {
            if p.rank() != r {
                return Err(Error::RankMismatch { expected: r, found: p.rank() });
            }
            if !cone.dual_contains(p) {
                return Err(Error::NotInCone(format!("support point {p} is not in the dual cone")));
            }
        }
        let mut support = support;
        support.sort();
        support.dedup();
        let mut nd = NewtonData { cone, support, facets: vec![] };
        nd.facets = nd.compute_facets()?;
        Ok(nd)
    }

    /// Convenience constructor from plain integer rows.
    pub fn from_i64(cone: &[&[i64]], support: &[&[i64]]) -> Result<NewtonData> {
        let cone = ConeData::new(cone.iter().map(|c| LatticeVector::from_i64(c)).collect())?;
        NewtonData::build(cone, support.iter().map(|c| DualVector::from_i64(c)).collect())
    }

    pub fn rank(&self) -> usize {
        self.cone.rank()
    }

    pub fn cone(&self) -> &ConeData {
        &self.cone
    }

    /// Sorted support without repetitions.
    pub fn support(&self) -> &[DualVector] {
        &self.support
    }

    /// Primitive facet normals of Γ⁺, sorted.
    pub fn facet_normals(&self) -> &[LatticeVector] {
        &self.facets
    }

    /// Facet normals with their weights.
    pub fn facets(&self) -> Vec<(LatticeVector, BigInt)> {
        self.facets.iter().map(|l| (l.clone(), self.min_value(l))).collect()
    }

    /// Support points not of the form `q + u` with `q` another support
    /// point and `u ∈ Σ^∨ \ 0`.
    pub fn essential_support(&self) -> Vec<DualVector> {
        self.support
            .iter()
            .filter(|p| !self.support.iter().any(|q| q != *p && self.cone.dual_contains(&p.sub(q))))
            .cloned()
            .collect()
    }

    pub(crate) fn min_value(&self, l: &LatticeVector) -> BigInt {
        self.support.iter().map(|p| l.eval(p)).min().expect("support is nonempty")
    }

    /// Indices of support points minimising `l`.
    pub fn argmin(&self, l: &LatticeVector) -> Vec<usize> {
        let m = self.min_value(l);
        (0..self.support.len()).filter(|&i| l.eval(&self.support[i]) == m).collect()
    }

    /// Dual cone generators on which `l` vanishes.
    pub(crate) fn zero_dual_rays(&self, l: &LatticeVector) -> Vec<DualVector> {
        self.cone.dual_rays().iter().filter(|u| l.eval(u).is_zero()).cloned().collect()
    }

    /// The weight `min ℓ(S)` together with the face where it is attained.
    pub fn weight(&self, l: &LatticeVector) -> Result<(BigInt, FaceData)> {
        if l.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: l.rank() });
        }
        if l.is_zero() || !self.cone.contains(l) {
            return Err(Error::NotInCone(l.to_string()));
        }
        Ok((self.min_value(l), self.face_of(l)))
    }

    pub(crate) fn face_of(&self, l: &LatticeVector) -> FaceData {
        let pts: Vec<DualVector> = self.argmin(l).into_iter().map(|i| self.support[i].clone()).collect();
        let dirs = self.zero_dual_rays(l);
        let compact = dirs.is_empty();
        let origin = pts[0].clone();
        let (pp, dd, lift): (Vec<P2>, Vec<P2>, Lift) = if self.rank() == 3 {
            let chart = PlaneChart::new(l, &origin);
            let pp = pts.iter().map(|p| chart.point(p)).collect();
            let dd = dirs.iter().map(|d| chart.direction(d)).collect();
            (pp, dd, Box::new(move |q: &P2| chart.lift(q)))
        } else {
            let k = KernelLattice::new(l.coords());
            let coord = |u: &DualVector| -> P2 { [k.coords(u.coords())[0].clone(), BigInt::zero()] };
            let pp = pts.iter().map(|p| coord(&p.sub(&origin))).collect();
            let dd = dirs.iter().map(coord).collect();
            let o = origin.clone();
            (pp, dd, Box::new(move |q: &P2| o.add(&DualVector::new(k.embed(&q[..1])))))
        };
        let bp = bounded_part(&pp, &dd);
        let vertices: Vec<DualVector> = bp.vertices.iter().map(&lift).collect();
        let edges: Vec<(DualVector, DualVector)> = bp.edges.iter().map(|(a, b)| (lift(a), lift(b))).collect();
        let mut fd = FaceData {
            vertices,
            dim: bp.dim,
            compact,
            lattice_length: None,
            lattice_area_doubled: None,
            interior_points: None,
            edges,
        };
        match bp.dim {
            1 => fd.lattice_length = Some(bp.edges.iter().map(|(a, b)| seg_len(a, b)).sum()),
            2 => {
                let poly = Polygon { vertices: bp.vertices.clone() };
                fd.lattice_area_doubled = Some(poly.doubled_area());
                fd.interior_points = Some(poly.interior_points());
            }
            _ => {}
        }
        fd
    }

    fn compute_facets(&self) -> Result<Vec<LatticeVector>> {
        let r = self.rank();
        let pts = self.essential_support();
        let rays = self.cone.dual_rays();
        let mut out: Vec<LatticeVector> = Vec::new();
        for p0 in &pts {
            let mut gens: Vec<DualVector> = pts.iter().filter(|p| *p != p0).map(|p| p.sub(p0)).collect();
            gens.extend(rays.iter().cloned());
            let mut candidates: Vec<Vec<BigInt>> = Vec::new();
            if r == 3 {
                for i in 0..gens.len() {
                    for j in (i + 1)..gens.len() {
                        candidates.push(cross(gens[i].coords(), gens[j].coords()));
                    }
                }
            } else {
                for g in &gens {
                    candidates.push(vec![-g[1].clone(), g[0].clone()]);
                }
            }
            for c in candidates {
                let Ok(mut l) = LatticeVector::new(c).primitive() else { continue };
                let vals: Vec<BigInt> = rays.iter().map(|u| l.eval(u)).collect();
                if vals.iter().all(|v| !v.is_positive()) && vals.iter().any(|v| v.is_negative()) {
                    l = l.neg();
                } else if vals.iter().any(|v| v.is_negative()) {
                    continue;
                }
                if out.contains(&l) || l.eval(p0) != self.min_value(&l) {
                    continue;
                }
                if self.face_dimension(&l) == r - 1 {
                    out.push(l);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Dimension of the face of Γ⁺ on which `l` is minimal.
    pub(crate) fn face_dimension(&self, l: &LatticeVector) -> usize {
        let idx = self.argmin(l);
        let p0 = &self.support[idx[0]];
        let mut rows: Vec<Vec<BigInt>> = idx[1..].iter().map(|&i| self.support[i].sub(p0).into_coords()).collect();
        rows.extend(self.zero_dual_rays(l).into_iter().map(|u| u.into_coords()));
        linalg::rank(&rows)
    }

    /// The same diagram over a different cone.
    pub fn with_cone(&self, cone: ConeData) -> Result<NewtonData> {
        NewtonData::build(cone, self.support.clone())
    }

    /// The same cone with a different support.
    pub fn with_support(&self, support: Vec<DualVector>) -> Result<NewtonData> {
        NewtonData::build(self.cone.clone(), support)
    }

    /// Translation of the support by `q`.
    pub fn translate(&self, q: &DualVector) -> Result<NewtonData> {
        self.with_support(self.support.iter().map(|p| p.add(q)).collect())
    }

    /// Whether `u` lies in Γ⁺.
    pub fn contains(&self, u: &DualVector) -> bool {
        self.facets.iter().all(|l| l.eval(u) >= self.min_value(l))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(c)
    }
    const OCT: &[&[i64]] = &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]];

    #[test]
    fn brieskorn_weights() {
        let nd = NewtonData::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[5, 3, 10]], &[&[3, 0, 0], &[0, 5, 0], &[0, 0, 7]]).unwrap();
        let (m3, _) = nd.weight(&lv(&[5, 3, 10])).unwrap();
        assert_eq!(m3, BigInt::from(15));
        assert!(nd.facet_normals().contains(&lv(&[35, 21, 15])));
        let (m0, f) = nd.weight(&lv(&[35, 21, 15])).unwrap();
        assert_eq!(m0, BigInt::from(105));
        assert_eq!(f.dim, 2);
        assert!(f.compact);
        assert!(nd.weight(&lv(&[-1, 0, 0])).is_err());
    }

    #[test]
    fn octant_brieskorn_facets() {
        let nd = NewtonData::from_i64(OCT, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 7]]).unwrap();
        let f = nd.facets();
        let (l, m) = f.iter().find(|(l, _)| nd.cone().contains_in_interior(l)).unwrap();
        assert_eq!(*l, lv(&[21, 14, 6]));
        assert_eq!(*m, BigInt::from(42));
        // the three coordinate facets plus the compact one
        assert_eq!(f.len(), 4);
        for p in nd.support() {
            assert!(nd.contains(p));
        }
    }

    #[test]
    fn two_faces_sharing_edge() {
        let nd = NewtonData::from_i64(OCT, &[&[5, 0, 0], &[2, 2, 0], &[0, 7, 0], &[0, 0, 10]]).unwrap();
        let compact: Vec<_> = nd.facet_normals().iter().filter(|l| nd.cone().contains_in_interior(l)).cloned().collect();
        assert_eq!(compact.len(), 2);
        let (m, f) = nd.weight(&lv(&[2, 3, 1])).unwrap();
        assert_eq!(m, BigInt::from(10));
        assert_eq!(f.vertices.len(), 3);
        assert!(compact.contains(&lv(&[2, 3, 1])));
    }

    #[test]
    fn single_monomial() {
        let nd = NewtonData::from_i64(OCT, &[&[1, 2, 3]]).unwrap();
        let mut ns = nd.facet_normals().to_vec();
        ns.sort();
        assert_eq!(ns, vec![lv(&[0, 0, 1]), lv(&[0, 1, 0]), lv(&[1, 0, 0])]);
        let (_, f) = nd.weight(&lv(&[1, 1, 1])).unwrap();
        assert_eq!(f.dim, 0);
        assert_eq!(f.vertices, vec![DualVector::from_i64(&[1, 2, 3])]);
    }

    #[test]
    fn rank_two_faces() {
        let nd = NewtonData::from_i64(&[&[1, 0], &[0, 1]], &[&[4, 0], &[0, 6]]).unwrap();
        let (m, f) = nd.weight(&lv(&[3, 2])).unwrap();
        assert_eq!(m, BigInt::from(12));
        assert_eq!(f.dim, 1);
        assert_eq!(f.lattice_length, Some(BigInt::from(2)));
        let (_, f) = nd.weight(&lv(&[1, 0])).unwrap();
        assert_eq!(f.dim, 0);
        assert!(!f.compact);
        assert_eq!(f.vertices, vec![DualVector::from_i64(&[0, 6])]);
    }

    #[test]
    fn rejects_bad_support() {
        assert_eq!(NewtonData::from_i64(OCT, &[]), Err(Error::EmptySupport));
        assert!(NewtonData::from_i64(OCT, &[&[1, -1, 0]]).is_err());
        assert!(NewtonData::from_i64(OCT, &[&[1, 1]]).is_err());
    }
}
