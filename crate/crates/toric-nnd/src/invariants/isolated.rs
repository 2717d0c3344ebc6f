use num_traits::{One, Zero};

use super::curve::sequence_multiplicity;
use crate::error::{Error, Result};
use crate::lattice::cf::{alpha, canonical_primitive_sequence};
use crate::lattice::linalg::{rat_int, Rat};
use crate::lattice::vector::LatticeVector;
use crate::newton::{DualFan, NewtonData};

/// Outcome of the isolatedness test on one 2-face of Σ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCheck {
    pub rays: (LatticeVector, LatticeVector),
    /// Fan rays in the relative interior of the face.
    pub interior: Vec<LatticeVector>,
    /// The rational number `e` of the vector relation, when computed.
    pub e: Option<Rat>,
    pub pass: bool,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedReport {
    pub isolated: bool,
    pub faces: Vec<FaceCheck>,
}

/// Decides whether the generic surface has an isolated singularity by
/// checking each 2-face of Σ: at most one subdividing ray τ, of a form
/// giving a smooth transverse curve, with `e·ℓ_τ + ℓ₁/α₁ + ℓ₂/α₂ = 0` and
/// `e·m_τ + m₁/α₁ + m₂/α₂ = -1`.
pub fn isolated_test(nd: &NewtonData, fan: &DualFan) -> Result<IsolatedReport> {
    if nd.rank() != 3 {
        return Err(Error::UnsupportedRank(nd.rank()));
    }
    let mut faces = Vec::new();
    for list in &fan.face_rays {
        let (s1, s2) = (list[0], *list.last().unwrap());
        let (r1, r2) = (&fan.rays[s1], &fan.rays[s2]);
        let inner = &list[1..list.len() - 1];
        let mut fc = FaceCheck {
            rays: (r1.ell.clone(), r2.ell.clone()),
            interior: inner.iter().map(|&i| fan.rays[i].ell.clone()).collect(),
            e: None,
            pass: false,
            reason: None,
        };
        match inner.len() {
            0 => fc.pass = true,
            1 => {
                let tau = &fan.rays[inner[0]];
                let seq = canonical_primitive_sequence(&r1.ell, &r2.ell)?;
                if !sequence_multiplicity(&seq, &tau.ell)?.is_one() {
                    fc.reason = Some(format!("subdividing ray {} gives a singular transverse curve", tau.ell));
                } else {
                    let a1 = alpha(&tau.ell, &r1.ell)?;
                    let a2 = alpha(&tau.ell, &r2.ell)?;
                    let rhs: Vec<Rat> = (0..3)
                        .map(|c| -(Rat::new(r1.ell[c].clone(), a1.clone()) + Rat::new(r2.ell[c].clone(), a2.clone())))
                        .collect();
                    let c = (0..3).find(|&c| !tau.ell[c].is_zero()).unwrap();
                    let e = &rhs[c] / rat_int(&tau.ell[c]);
                    if (0..3).any(|c| &e * rat_int(&tau.ell[c]) != rhs[c]) {
                        fc.reason = Some("no rational e solves the vector relation".into());
                    } else {
                        let lhs = &e * rat_int(&tau.m)
                            + Rat::new(r1.m.clone(), a1)
                            + Rat::new(r2.m.clone(), a2);
                        if lhs == -Rat::one() {
                            fc.pass = true;
                        } else {
                            fc.reason = Some(format!("transverse curve has {} branches", -lhs));
                        }
                    }
                    fc.e = Some(e);
                }
            }
            n => fc.reason = Some(format!("{n} rays subdivide the face")),
        }
        faces.push(fc);
    }
    let isolated = faces.iter().all(|f| f.pass);
    Ok(IsolatedReport { isolated, faces })
}

/// Same predicate through the transverse curves of the 2-faces.
pub fn isolated_by_transverse_curves(nd: &NewtonData) -> Result<bool> {
    use super::curve::curve_invariants;
    use crate::newton::{transverse_curves, Transverse};
    for t in transverse_curves(nd)? {
        if let Transverse::Curve(c) = t {
            if !curve_invariants(&c)?.smooth {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::dual_fan;

    const OCT: &[&[i64]] = &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]];

    fn check(cone: &[&[i64]], support: &[&[i64]]) -> bool {
        let nd = NewtonData::from_i64(cone, support).unwrap();
        let fan = dual_fan(&nd).unwrap();
        let a = isolated_test(&nd, &fan).unwrap().isolated;
        assert_eq!(a, isolated_by_transverse_curves(&nd).unwrap());
        a
    }

    #[test]
    fn examples() {
        assert!(check(OCT, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 7]]));
        assert!(!check(OCT, &[&[2, 0, 0], &[0, 2, 0]]));
        assert!(!check(OCT, &[&[2, 0, 0], &[0, 2, 1]]));
        assert!(check(OCT, &[&[5, 0, 0], &[2, 2, 0], &[0, 7, 0], &[0, 0, 10]]));
        assert!(check(OCT, &[&[3, 0, 0], &[1, 3, 0], &[0, 0, 5], &[0, 10, 1]]));
        let cone: &[&[i64]] = &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]];
        assert!(check(cone, &[&[0, 0, 2], &[1, 0, 1], &[0, 2, 0], &[1, 2, -1]]));
        assert!(check(OCT, &[&[1, 1, 1]]));
    }
}
