use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::cf::{canonical_primitive_sequence, PrimitiveSequence};
use crate::lattice::linalg::{self, Rat};
use crate::lattice::vector::{cross, dot, LatticeVector};
use crate::newton::{dual_fan, NewtonData};

/// Invariants of the generic curve with a rank 2 diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveReport {
    pub branches: BigInt,
    pub smooth: bool,
    /// Only for irreducible curves.
    pub multiplicity: Option<BigInt>,
    /// Only for irreducible curves.
    pub delta: Option<BigInt>,
}

fn as3(v: &LatticeVector) -> Vec<BigInt> {
    let mut c = v.coords().to_vec();
    c.resize(3, BigInt::zero());
    c
}

/// Writes `l = a·u + b·w` with `a, b ≥ 0` when `l` lies in the cone
/// spanned by `u` and `w`; the coefficients are rational in general.
pub(crate) fn decompose(l: &LatticeVector, u: &LatticeVector, w: &LatticeVector) -> Option<(Rat, Rat)> {
    let (l, u, w) = (as3(l), as3(u), as3(w));
    let c = cross(&u, &w);
    let d = dot(&c, &c);
    if d.is_zero() || !dot(&c, &l).is_zero() {
        return None;
    }
    let a = Rat::new(dot(&cross(&l, &w), &c), d.clone());
    let b = Rat::new(dot(&cross(&u, &l), &c), d);
    if a.is_negative() || b.is_negative() {
        return None;
    }
    Some((a, b))
}

/// Intersection number of the strict transform of the curve with normal
/// `l` with the exceptional curves of the minimal resolution described by
/// `seq` (regular cones use the single (-1)-curve convention).
pub(crate) fn sequence_multiplicity(seq: &PrimitiveSequence, l: &LatticeVector) -> Result<BigInt> {
    let v = &seq.vectors;
    let last = v.len() - 2;
    for i in 0..v.len() - 1 {
        let Some((a, b)) = decompose(l, &v[i], &v[i + 1]) else { continue };
        if !a.is_integer() || !b.is_integer() {
            return Err(Error::Internal(format!("{l} is not integral in the basis of a regular cone")));
        }
        let (a, b) = (a.to_integer(), b.to_integer());
        if a.is_zero() || b.is_zero() {
            // l is one of the sequence vectors
            return Ok(BigInt::one());
        }
        return Ok(match (i == 0, i == last) {
            (true, true) => a + b,
            (true, false) => b,
            (false, true) => a,
            (false, false) => a + b,
        });
    }
    Err(Error::NotInCone(l.to_string()))
}

/// Number of unordered pairs `l' + l'' = l` with `l', l''` in the interior
/// of the cone spanned by `u` and `w` (rank 2).
pub(crate) fn partition_count(l: &LatticeVector, u: &LatticeVector, w: &LatticeVector) -> Result<BigInt> {
    let (s, t) = decompose(l, u, w).ok_or_else(|| Error::NotInCone(l.to_string()))?;
    let corners: Vec<Vec<Rat>> = vec![
        vec![Rat::zero(), Rat::zero()],
        l.coords().iter().map(linalg::rat_int).collect(),
        u.coords().iter().map(|x| linalg::rat_int(x) * &s).collect(),
        w.coords().iter().map(|x| linalg::rat_int(x) * &t).collect(),
    ];
    let lo: Vec<i64> = (0..2).map(|k| corners.iter().map(|c| linalg::floor(&c[k])).min().unwrap().to_i64()).collect::<Option<_>>().ok_or_else(overflow)?;
    let hi: Vec<i64> = (0..2).map(|k| corners.iter().map(|c| linalg::ceil(&c[k])).max().unwrap().to_i64()).collect::<Option<_>>().ok_or_else(overflow)?;
    if (hi[0] - lo[0] + 1).saturating_mul(hi[1] - lo[1] + 1) > 50_000_000 {
        return Err(Error::EnumerationCap("partition box too large".into()));
    }
    let (n0, n1) = (inward(u, w), inward(w, u));
    let inside = |p: &[i64; 2]| -> bool {
        let p = LatticeVector::from_i64(p);
        dot(n0.coords(), p.coords()).is_positive() && dot(n1.coords(), p.coords()).is_positive()
    };
    let mut ordered = 0u64;
    let mut diagonal = 0u64;
    let (lx, ly) = (l[0].to_i64().ok_or_else(overflow)?, l[1].to_i64().ok_or_else(overflow)?);
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            if inside(&[x, y]) && inside(&[lx - x, ly - y]) {
                ordered += 1;
                if 2 * x == lx && 2 * y == ly {
                    diagonal += 1;
                }
            }
        }
    }
    Ok(BigInt::from((ordered + diagonal) / 2))
}

fn overflow() -> Error {
    Error::EnumerationCap("coordinates exceed the 64-bit enumeration range".into())
}

/// Normal of `u` pointing towards `w`, in rank 2.
fn inward(u: &LatticeVector, w: &LatticeVector) -> LatticeVector {
    let n = LatticeVector::new(vec![-u[1].clone(), u[0].clone()]);
    if dot(n.coords(), w.coords()).is_negative() {
        n.neg()
    } else {
        n
    }
}

/// Branches, smoothness, multiplicity and δ of the generic curve.
pub fn curve_invariants(nd: &NewtonData) -> Result<CurveReport> {
    if nd.rank() != 2 {
        return Err(Error::UnsupportedRank(nd.rank()));
    }
    let fan = dual_fan(nd)?;
    let interior = fan.interior_rays();
    let branches: BigInt = interior.iter().map(|&i| fan.rays[i].face.lattice_length.clone().unwrap_or_default()).sum();
    if !branches.is_one() {
        return Ok(CurveReport { branches, smooth: false, multiplicity: None, delta: None });
    }
    let l = &fan.rays[interior[0]].ell;
    let (u, w) = (&nd.cone().rays()[0], &nd.cone().rays()[1]);
    let seq = canonical_primitive_sequence(u, w)?;
    let mult = sequence_multiplicity(&seq, l)?;
    let delta = partition_count(l, u, w)?;
    Ok(CurveReport { branches, smooth: mult.is_one(), multiplicity: Some(mult), delta: Some(delta) })
}

#[cfg(test)]
mod tests {
    use super::*;

    const QUAD: &[&[i64]] = &[&[1, 0], &[0, 1]];

    fn report(support: &[&[i64]]) -> CurveReport {
        curve_invariants(&NewtonData::from_i64(QUAD, support).unwrap()).unwrap()
    }

    #[test]
    fn cusp() {
        let r = report(&[&[2, 0], &[0, 3]]);
        assert_eq!(r.branches, BigInt::one());
        assert!(!r.smooth);
        assert_eq!(r.multiplicity, Some(BigInt::from(2)));
        assert_eq!(r.delta, Some(BigInt::one()));
    }

    #[test]
    fn three_five() {
        let r = report(&[&[3, 0], &[0, 5]]);
        assert_eq!(r.multiplicity, Some(BigInt::from(3)));
        assert_eq!(r.delta, Some(BigInt::from(4)));
    }

    #[test]
    fn smooth_curves() {
        let r = report(&[&[1, 0], &[0, 1]]);
        assert!(r.smooth);
        assert_eq!(r.delta, Some(BigInt::zero()));
        let r = report(&[&[5, 0], &[0, 1]]);
        assert!(r.smooth);
    }

    #[test]
    fn reducible_and_empty() {
        let r = report(&[&[2, 0], &[0, 2]]);
        assert_eq!(r.branches, BigInt::from(2));
        assert_eq!(r.multiplicity, None);
        let r = report(&[&[1, 1]]);
        assert_eq!(r.branches, BigInt::zero());
        assert!(!r.smooth);
    }

    #[test]
    fn non_regular_cone() {
        // cone of type 5/3 with sequence (0,1),(1,1),(3,2),(5,3)
        let seq = canonical_primitive_sequence(&LatticeVector::from_i64(&[0, 1]), &LatticeVector::from_i64(&[5, 3])).unwrap();
        assert_eq!(sequence_multiplicity(&seq, &LatticeVector::from_i64(&[1, 1])).unwrap(), BigInt::one());
        assert_eq!(sequence_multiplicity(&seq, &LatticeVector::from_i64(&[4, 3])).unwrap(), BigInt::from(2));
        assert_eq!(sequence_multiplicity(&seq, &LatticeVector::from_i64(&[1, 2])).unwrap(), BigInt::one());
    }
}
