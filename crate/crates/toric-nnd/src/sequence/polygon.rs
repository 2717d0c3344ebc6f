use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::linalg::{self, rat_int, Rat};
use crate::lattice::plane::Polygon;

/// Lattice points of `ρF` off the faces `ρS_j`, `j ∈ J`, counted directly
/// and through the constant `a = Σ c_j a_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonCount {
    pub count: BigInt,
    pub a: BigInt,
}

/// Counts lattice points of `ρF \ ∪_{j∈J} ρS_j` for a lattice polygon `F`
/// without interior lattice points and `0 ≤ ρ < 1`; faces are numbered as
/// the edges of `F`. The count must equal `max(0, a + 1)`.
pub fn polygon_count(f: &Polygon, rho: &Rat, faces: &[usize]) -> Result<PolygonCount> {
    if f.interior_points().is_positive() {
        return Err(Error::InteriorPoints);
    }
    if rho.is_negative() || *rho >= Rat::from_integer(1.into()) {
        return Err(Error::InvalidArgument(format!("scale {rho} is outside [0, 1)")));
    }
    let ineq = f.edge_inequalities();
    if let Some(j) = faces.iter().find(|&&j| j >= ineq.len()) {
        return Err(Error::InvalidArgument(format!("polygon has no face {j}")));
    }
    let mut a = BigInt::zero();
    let mut levels = Vec::new();
    for (j, (_, h, c)) in ineq.iter().enumerate() {
        let s = rho * rat_int(h);
        let removed = faces.contains(&j);
        let k = if removed { linalg::floor(&s) + 1 } else { linalg::ceil(&s) };
        a -= c * &k;
        levels.push((s, removed));
    }

    let (lo, hi) = f.bbox();
    let bound = |x: &BigInt, up: bool| {
        let v = rho * rat_int(x);
        if up { linalg::ceil(&v) } else { linalg::floor(&v) }
    };
    let overflow = || Error::EnumerationCap("polygon too large".into());
    let (x0, x1) = (bound(&lo[0], false).to_i64().ok_or_else(overflow)?, bound(&hi[0], true).to_i64().ok_or_else(overflow)?);
    let (y0, y1) = (bound(&lo[1], false).to_i64().ok_or_else(overflow)?, bound(&hi[1], true).to_i64().ok_or_else(overflow)?);
    let mut count = 0u64;
    for x in x0..=x1 {
        for y in y0..=y1 {
            let inside = ineq.iter().zip(&levels).all(|((n, _, _), (s, removed))| {
                let v = rat_int(&(&n[0] * x + &n[1] * y));
                if *removed {
                    v > *s
                } else {
                    v >= *s
                }
            });
            if inside {
                count += 1;
            }
        }
    }
    let count = BigInt::from(count);
    let expected = if a.is_negative() { BigInt::zero() } else { &a + 1 };
    if count != expected {
        return Err(Error::Internal(format!("counted {count} points, formula gives max(0, {a} + 1)")));
    }
    Ok(PolygonCount { count, a })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::plane::p2;

    fn poly(pts: &[(i64, i64)]) -> Polygon {
        Polygon::hull(&pts.iter().map(|&(x, y)| p2(x, y)).collect::<Vec<_>>()).unwrap()
    }

    fn q(a: i64, b: i64) -> Rat {
        Rat::new(a.into(), b.into())
    }

    #[test]
    fn unit_triangle() {
        let f = poly(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(polygon_count(&f, &q(0, 1), &[]).unwrap().count, BigInt::from(1));
        assert_eq!(polygon_count(&f, &q(1, 2), &[0, 1, 2]).unwrap().count, BigInt::zero());
    }

    #[test]
    fn trapezoid_subsets() {
        let f = poly(&[(0, 0), (4, 0), (0, 1), (2, 1)]);
        let r = f.vertices.len();
        for den in 1..=4 {
            for num in 0..den {
                for mask in 0..(1u32 << r) {
                    let j: Vec<usize> = (0..r).filter(|k| mask >> k & 1 == 1).collect();
                    polygon_count(&f, &q(num, den), &j).unwrap();
                }
            }
        }
    }

    #[test]
    fn interior_points_rejected() {
        let f = poly(&[(0, 0), (3, 0), (0, 3)]);
        assert!(matches!(polygon_count(&f, &q(1, 2), &[]), Err(Error::InteriorPoints)));
    }
}
