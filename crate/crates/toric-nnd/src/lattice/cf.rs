//! Determinants of pairs of lattice vectors, negative continued fractions
//! and canonical primitive sequences of two dimensional cones.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::linalg::KernelLattice;
use super::vector::{cross, det2, gcd_all, LatticeVector};
use crate::error::{Error, Result};

/// A negative continued fraction `alpha/beta = [b₁, …, b_s]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfData {
    pub alpha: BigInt,
    pub beta: BigInt,
    pub terms: Vec<BigInt>,
}

/// The lattice points ℓ₀, …, ℓ_{s+1} on the boundary of the convex hull of
/// the interior lattice points of a two dimensional cone, with the
/// self-intersection numbers bⱼ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveSequence {
    pub vectors: Vec<LatticeVector>,
    pub selfints: Vec<BigInt>,
}

fn minors(l1: &LatticeVector, l2: &LatticeVector) -> Result<Vec<BigInt>> {
    if l1.rank() != l2.rank() {
        return Err(Error::RankMismatch { expected: l1.rank(), found: l2.rank() });
    }
    let (a, b) = (l1.coords(), l2.coords());
    let r = a.len();
    let mut out = Vec::new();
    for i in 0..r {
        for j in (i + 1)..r {
            out.push(&a[i] * &b[j] - &a[j] * &b[i]);
        }
    }
    Ok(out)
}

/// gcd of the 2×2 minors of the matrix with rows `l1`, `l2`.
pub fn alpha(l1: &LatticeVector, l2: &LatticeVector) -> Result<BigInt> {
    let g = gcd_all(&minors(l1, l2)?);
    if g.is_zero() {
        return Err(Error::Dependent);
    }
    Ok(g)
}

/// Coordinates of two independent vectors in a basis of the saturated rank
/// two lattice `N ∩ span(l1, l2)`.
pub fn plane_coords(l1: &LatticeVector, l2: &LatticeVector) -> Result<([BigInt; 2], [BigInt; 2])> {
    alpha(l1, l2)?;
    match l1.rank() {
        2 => Ok((
            [l1[0].clone(), l1[1].clone()],
            [l2[0].clone(), l2[1].clone()],
        )),
        3 => {
            let c = cross(l1.coords(), l2.coords());
            let k = KernelLattice::new(&c);
            let a = k.coords(l1.coords());
            let b = k.coords(l2.coords());
            Ok(([a[0].clone(), a[1].clone()], [b[0].clone(), b[1].clone()]))
        }
        r => Err(Error::UnsupportedRank(r)),
    }
}

/// The unique `0 ≤ β < α` with `β·l1 + l2 ∈ α·N`. Requires `l1` primitive.
pub fn beta(l1: &LatticeVector, l2: &LatticeVector) -> Result<BigInt> {
    if !l1.is_primitive() {
        return Err(Error::NotPrimitive(l1.to_string()));
    }
    let al = alpha(l1, l2)?;
    let (a, b) = plane_coords(l1, l2)?;
    // unimodular R with R·a = (1, 0)
    let e = a[0].extended_gcd(&a[1]);
    debug_assert!(e.gcd.is_one());
    let c = &e.x * &b[0] + &e.y * &b[1];
    Ok((-c).mod_floor(&al))
}

/// Negative continued fraction expansion of `alpha/beta`.
pub fn hj_expand(alpha: &BigInt, beta: &BigInt) -> Result<CfData> {
    let bad = || Error::InvalidFraction { alpha: alpha.to_string(), beta: beta.to_string() };
    if !alpha.is_positive() || beta.is_negative() || beta >= alpha || !alpha.gcd(beta).is_one() {
        return Err(bad());
    }
    let mut terms = Vec::new();
    let (mut a, mut b) = (alpha.clone(), beta.clone());
    while b.is_positive() {
        let t = a.div_ceil(&b);
        let nb = &t * &b - &a;
        terms.push(t);
        a = b;
        b = nb;
    }
    Ok(CfData { alpha: alpha.clone(), beta: beta.clone(), terms })
}

/// Evaluates `[b₁, …, b_s]` to the reduced pair `(alpha, beta)`.
pub fn hj_eval(terms: &[BigInt]) -> (BigInt, BigInt) {
    let (mut p, mut q) = (BigInt::one(), BigInt::zero());
    for b in terms.iter().rev() {
        let np = b * &p - &q;
        q = p;
        p = np;
    }
    (p, q)
}

/// Canonical primitive sequence from `l` to `l2`.
///
/// For a regular pair (α = 1) the sequence is `l, l + l2, l2` with the
/// single self-intersection 1.
pub fn canonical_primitive_sequence(l: &LatticeVector, l2: &LatticeVector) -> Result<PrimitiveSequence> {
    for v in [l, l2] {
        if !v.is_primitive() {
            return Err(Error::NotPrimitive(v.to_string()));
        }
    }
    let a = alpha(l, l2)?;
    if a.is_one() {
        return Ok(PrimitiveSequence {
            vectors: vec![l.clone(), l.add(l2), l2.clone()],
            selfints: vec![BigInt::one()],
        });
    }
    let b = beta(l, l2)?;
    let cf = hj_expand(&a, &b)?;
    let first = l
        .scale(&b)
        .add(l2)
        .div_exact(&a)
        .ok_or_else(|| Error::Internal("β·ℓ + ℓ' not divisible by α".into()))?;
    let mut vectors = vec![l.clone(), first];
    for t in &cf.terms {
        let n = vectors.len();
        let next = vectors[n - 1].scale(t).sub(&vectors[n - 2]);
        vectors.push(next);
    }
    if vectors.last() != Some(l2) {
        return Err(Error::Internal(format!("primitive sequence from {l} does not end at {l2}")));
    }
    Ok(PrimitiveSequence { vectors, selfints: cf.terms })
}

/// Signed determinant of two vectors in the plane they span (in a basis of
/// the saturated sublattice), up to a global orientation choice.
pub fn plane_det(l1: &LatticeVector, l2: &LatticeVector) -> Result<BigInt> {
    let (a, b) = plane_coords(l1, l2)?;
    Ok(det2(&a, &b))
}
