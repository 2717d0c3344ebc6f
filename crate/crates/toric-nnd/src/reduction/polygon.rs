use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::plane::{seg_len, PlaneChart, Polygon};
use crate::lattice::vector::LatticeVector;
use crate::newton::FaceData;

/// Lattice polygons without interior lattice points, up to integral affine
/// equivalence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PolygonClass {
    /// `conv{(0,0),(2,0),(0,2)}`.
    BigTriangle,
    /// `conv{(0,0),(t,0),(0,1)}`.
    SmallTriangle(BigInt),
    /// `conv{(0,0),(t,0),(0,1),(s,1)}` with `t ≥ s > 0`.
    Trapezoid(BigInt, BigInt),
    HasInteriorPoints,
}

/// Classifies a lattice polygon by looking for an edge direction of
/// lattice width one.
pub fn classify_lattice_polygon(f: &Polygon) -> Result<PolygonClass> {
    if f.vertices.len() < 3 {
        return Err(Error::DegeneratePolygon(format!("{} vertices", f.vertices.len())));
    }
    if f.interior_points().is_positive() {
        return Ok(PolygonClass::HasInteriorPoints);
    }
    let mut best: Option<PolygonClass> = None;
    for (n, h, t) in f.edge_inequalities() {
        let level = |p: &[BigInt; 2]| &n[0] * &p[0] + &n[1] * &p[1] - &h;
        if f.vertices.iter().any(|p| level(p) > BigInt::one()) {
            continue;
        }
        let top: Vec<&[BigInt; 2]> = f.vertices.iter().filter(|p| level(p).is_one()).collect();
        let s = match top.len() {
            1 => BigInt::zero(),
            2 => seg_len(top[0], top[1]),
            _ => return Err(Error::Internal("width one polygon with three top vertices".into())),
        };
        let class = if s.is_zero() {
            PolygonClass::SmallTriangle(t)
        } else if t >= s {
            PolygonClass::Trapezoid(t, s)
        } else {
            PolygonClass::Trapezoid(s, t)
        };
        // several width one directions: keep the largest long side
        if best.as_ref().is_none_or(|b| class_key(&class) > class_key(b)) {
            best = Some(class);
        }
    }
    if let Some(c) = best {
        return Ok(c);
    }
    if f.vertices.len() == 3 && f.doubled_area() == BigInt::from(4) && f.boundary_points() == BigInt::from(6) {
        return Ok(PolygonClass::BigTriangle);
    }
    Err(Error::Internal("empty polygon fits none of the known shapes".into()))
}

fn class_key(c: &PolygonClass) -> (BigInt, BigInt) {
    match c {
        PolygonClass::SmallTriangle(t) => (t.clone(), BigInt::zero()),
        PolygonClass::Trapezoid(t, s) => (t.clone(), s.clone()),
        _ => (BigInt::zero(), BigInt::zero()),
    }
}

/// A compact facet in the lattice coordinates of its affine plane.
pub fn face_polygon(ell: &LatticeVector, face: &FaceData) -> Result<Polygon> {
    if face.vertices.is_empty() {
        return Err(Error::DegeneratePolygon("empty face".into()));
    }
    let chart = PlaneChart::new(ell, &face.vertices[0]);
    Polygon::hull(&face.vertices.iter().map(|v| chart.point(v)).collect::<Vec<_>>())
}
