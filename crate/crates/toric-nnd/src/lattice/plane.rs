//! Lattice polygons in Z² and affine lattice planes inside M = Z³.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::linalg::KernelLattice;
use super::vector::{DualVector, LatticeVector};
use crate::error::{Error, Result};

pub type P2 = [BigInt; 2];

pub fn p2(x: i64, y: i64) -> P2 {
    [BigInt::from(x), BigInt::from(y)]
}

fn sub(a: &P2, b: &P2) -> P2 {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

fn cross(o: &P2, a: &P2, b: &P2) -> BigInt {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

fn dot(a: &P2, b: &P2) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1]
}

/// Lattice length of a segment.
pub fn seg_len(a: &P2, b: &P2) -> BigInt {
    let d = sub(b, a);
    d[0].gcd(&d[1])
}

/// Convex hull in counter-clockwise order without collinear points.
/// Degenerate inputs give one or two points.
pub fn convex_hull(points: &[P2]) -> Vec<P2> {
    let mut pts: Vec<P2> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<P2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= BigInt::zero() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<P2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= BigInt::zero() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    lower
}

/// A convex lattice polygon given by its vertices in counter-clockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    pub vertices: Vec<P2>,
}

impl Polygon {
    /// Convex hull of the given points; errors when it is not two dimensional.
    pub fn hull(points: &[P2]) -> Result<Polygon> {
        let v = convex_hull(points);
        if v.len() < 3 {
            return Err(Error::DegeneratePolygon(format!("{} hull vertices", v.len())));
        }
        Ok(Polygon { vertices: v })
    }

    pub fn edges(&self) -> impl Iterator<Item = (&P2, &P2)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    /// Twice the area; a primitive triangle has value 1.
    pub fn doubled_area(&self) -> BigInt {
        let o = &self.vertices[0];
        let mut s = BigInt::zero();
        for i in 1..self.vertices.len() - 1 {
            s += cross(o, &self.vertices[i], &self.vertices[i + 1]);
        }
        s
    }

    pub fn boundary_points(&self) -> BigInt {
        self.edges().map(|(a, b)| seg_len(a, b)).sum()
    }

    /// Interior lattice points by Pick's theorem.
    pub fn interior_points(&self) -> BigInt {
        (self.doubled_area() - self.boundary_points() + BigInt::from(2)) / BigInt::from(2)
    }

    /// Inward primitive normals `n` and levels `h` with `n·x ≥ h` on the
    /// polygon and equality on the corresponding edge, together with the
    /// edge lattice lengths.
    pub fn edge_inequalities(&self) -> Vec<(P2, BigInt, BigInt)> {
        self.edges()
            .map(|(a, b)| {
                let d = sub(b, a);
                let g = d[0].gcd(&d[1]);
                // rotate the primitive edge direction to the left (inside for ccw)
                let n = [-(&d[1] / &g), &d[0] / &g];
                let h = dot(&n, a);
                (n, h, g)
            })
            .collect()
    }

    /// Whether a point lies in the closed polygon.
    pub fn contains(&self, p: &P2) -> bool {
        self.edges().all(|(a, b)| cross(a, b, p) >= BigInt::zero())
    }

    /// Bounding box (min corner, max corner).
    pub fn bbox(&self) -> (P2, P2) {
        let xs = self.vertices.iter().map(|v| v[0].clone());
        let ys = self.vertices.iter().map(|v| v[1].clone());
        let (x0, x1) = (xs.clone().min().unwrap(), xs.max().unwrap());
        let (y0, y1) = (ys.clone().min().unwrap(), ys.max().unwrap());
        ([x0, y0], [x1, y1])
    }
}

/// Bounded part of `conv(points) + cone(dirs)` in the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedPart {
    /// Vertices in boundary order (a chain when `dim == 1`).
    pub vertices: Vec<P2>,
    /// Bounded edges as consecutive vertex pairs.
    pub edges: Vec<(P2, P2)>,
    pub dim: u8,
}

pub fn bounded_part(points: &[P2], dirs: &[P2]) -> BoundedPart {
    let hull = convex_hull(points);
    if dirs.is_empty() {
        let n = hull.len();
        let edges: Vec<(P2, P2)> = match n {
            0 | 1 => vec![],
            2 => vec![(hull[0].clone(), hull[1].clone())],
            _ => (0..n).map(|i| (hull[i].clone(), hull[(i + 1) % n].clone())).collect(),
        };
        let dim = match n {
            0 | 1 => 0,
            2 => 1,
            _ => 2,
        };
        return BoundedPart { vertices: hull, edges, dim };
    }
    // hull edges as directed pairs; a segment contributes both directions
    let n = hull.len();
    let directed: Vec<(usize, usize)> = match n {
        1 => vec![],
        2 => vec![(0, 1), (1, 0)],
        _ => (0..n).map(|i| (i, (i + 1) % n)).collect(),
    };
    let bounded: Vec<bool> = directed
        .iter()
        .map(|&(i, j)| {
            let d = sub(&hull[j], &hull[i]);
            let outward = [d[1].clone(), -d[0].clone()];
            dirs.iter().all(|r| dot(&outward, r).is_negative())
        })
        .collect();
    if !bounded.iter().any(|&b| b) {
        // single vertex: minimise a functional positive on the recession cone
        let w: P2 = if dirs.len() == 1 {
            dirs[0].clone()
        } else {
            let (d1, d2) = (&dirs[0], &dirs[1]);
            let mut n1 = [-d1[1].clone(), d1[0].clone()];
            if dot(&n1, d2).is_negative() {
                n1 = [-n1[0].clone(), -n1[1].clone()];
            }
            let mut n2 = [-d2[1].clone(), d2[0].clone()];
            if dot(&n2, d1).is_negative() {
                n2 = [-n2[0].clone(), -n2[1].clone()];
            }
            [&n1[0] + &n2[0], &n1[1] + &n2[1]]
        };
        let v = hull.iter().min_by(|a, b| dot(&w, a).cmp(&dot(&w, b))).unwrap().clone();
        return BoundedPart { vertices: vec![v], edges: vec![], dim: 0 };
    }
    // bounded edges form a contiguous chain; start after a non-bounded edge
    let m = directed.len();
    let start = (0..m).find(|&k| !bounded[k] && bounded[(k + 1) % m]).map(|k| (k + 1) % m).unwrap_or(0);
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for s in 0..m {
        let k = (start + s) % m;
        if !bounded[k] {
            break;
        }
        let (i, j) = directed[k];
        if vertices.is_empty() {
            vertices.push(hull[i].clone());
        }
        vertices.push(hull[j].clone());
        edges.push((hull[i].clone(), hull[j].clone()));
    }
    BoundedPart { vertices, edges, dim: 1 }
}

/// Affine lattice chart of the plane `{u ∈ M : ℓ(u) = ℓ(origin)}` for a
/// rank three functional ℓ; identifies the plane's lattice points with Z².
#[derive(Clone, Debug)]
pub struct PlaneChart {
    origin: DualVector,
    kernel: KernelLattice,
}

impl PlaneChart {
    pub fn new(ell: &LatticeVector, origin: &DualVector) -> PlaneChart {
        PlaneChart { origin: origin.clone(), kernel: KernelLattice::new(ell.coords()) }
    }

    pub fn point(&self, u: &DualVector) -> P2 {
        let c = self.kernel.coords(u.sub(&self.origin).coords());
        [c[0].clone(), c[1].clone()]
    }

    pub fn direction(&self, d: &DualVector) -> P2 {
        let c = self.kernel.coords(d.coords());
        [c[0].clone(), c[1].clone()]
    }

    pub fn lift(&self, p: &P2) -> DualVector {
        self.origin.add(&DualVector::new(self.kernel.embed(p)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_and_pick() {
        let pts = vec![p2(0, 0), p2(2, 0), p2(0, 2), p2(1, 1), p2(1, 0)];
        let poly = Polygon::hull(&pts).unwrap();
        assert_eq!(poly.vertices.len(), 3);
        assert_eq!(poly.doubled_area(), BigInt::from(4));
        assert_eq!(poly.boundary_points(), BigInt::from(6));
        assert_eq!(poly.interior_points(), BigInt::from(0));
        let sq = Polygon::hull(&[p2(0, 0), p2(2, 0), p2(2, 2), p2(0, 2)]).unwrap();
        assert_eq!(sq.interior_points(), BigInt::from(1));
        assert!(sq.contains(&p2(1, 1)) && !sq.contains(&p2(3, 1)));
        assert!(Polygon::hull(&[p2(0, 0), p2(1, 1), p2(2, 2)]).is_err());
    }

    #[test]
    fn inequalities_are_inward() {
        let poly = Polygon::hull(&[p2(0, 0), p2(4, 0), p2(0, 1), p2(2, 1)]).unwrap();
        for (n, h, _) in poly.edge_inequalities() {
            for v in &poly.vertices {
                assert!(dot(&n, v) >= h);
            }
        }
    }

    #[test]
    fn bounded_part_with_one_direction() {
        // conv{(0,2),(1,0),(3,0)} + cone((0,1)): bounded edges (1,0)-(3,0)? no: their
        // outward normal is (0,-1), negative on (0,1); edge (0,2)-(1,0) too.
        let b = bounded_part(&[p2(0, 2), p2(1, 0), p2(3, 0)], &[p2(0, 1)]);
        assert_eq!(b.dim, 1);
        assert_eq!(b.edges.len(), 2);
        let b = bounded_part(&[p2(0, 0), p2(0, 3)], &[p2(0, 1)]);
        assert_eq!(b.dim, 0);
        assert_eq!(b.vertices, vec![p2(0, 0)]);
        let b = bounded_part(&[p2(0, 0), p2(2, 1)], &[p2(1, 0), p2(0, 1)]);
        assert_eq!(b.dim, 0);
        let b = bounded_part(&[p2(0, 1), p2(1, 0)], &[p2(1, 0), p2(0, 1)]);
        assert_eq!(b.dim, 1);
        assert_eq!(b.vertices.len(), 2);
    }

    #[test]
    fn chart_round_trip() {
        let ell = LatticeVector::from_i64(&[21, 14, 6]);
        let o = DualVector::from_i64(&[2, 0, 0]);
        let ch = PlaneChart::new(&ell, &o);
        for u in [[0, 3, 0], [0, 0, 7], [2, 0, 0]] {
            let u = DualVector::from_i64(&u);
            assert_eq!(ch.lift(&ch.point(&u)), u);
        }
        let tri = Polygon::hull(&[
            ch.point(&DualVector::from_i64(&[2, 0, 0])),
            ch.point(&DualVector::from_i64(&[0, 3, 0])),
            ch.point(&DualVector::from_i64(&[0, 0, 7])),
        ])
        .unwrap();
        assert_eq!(tri.doubled_area(), BigInt::from(1));
    }
}
