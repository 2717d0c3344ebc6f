use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::isolated::isolated_test;
use crate::error::{Error, Result};
use crate::lattice::linalg::{self, rat_int, Rat};
use crate::newton::{DualFan, NewtonData};

/// Largest number of lattice points a single counting box may hold.
pub const BOX_CAP: u128 = 200_000_000;

/// Default number of shells for the δ enumeration.
pub const DEFAULT_SHELL_CAP: usize = 64;

/// `ℓ(q) - m` evaluated with machine integers.
#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub ell: Vec<i64>,
    pub m: i64,
}

impl Level {
    pub fn excess(&self, q: &[i64]) -> i128 {
        self.ell.iter().zip(q).map(|(a, b)| *a as i128 * *b as i128).sum::<i128>() - self.m as i128
    }
}

fn overflow() -> Error {
    Error::EnumerationCap("data exceeds the 64-bit enumeration range".into())
}

pub(crate) fn level(ell: &crate::lattice::LatticeVector, m: &BigInt) -> Result<Level> {
    Ok(Level { ell: ell.to_i64().ok_or_else(overflow)?, m: m.to_i64().ok_or_else(overflow)? })
}

/// A rank-generic description of the boundary and interior rays of the
/// fan as machine-integer levels.
pub(crate) struct Levels {
    pub boundary: Vec<Level>,
    pub interior: Vec<Level>,
}

impl Levels {
    pub fn new(fan: &DualFan) -> Result<Levels> {
        let mut boundary = Vec::new();
        let mut interior = Vec::new();
        for r in &fan.rays {
            let l = level(&r.ell, &r.m)?;
            if r.on_boundary {
                boundary.push(l);
            } else {
                interior.push(l);
            }
        }
        Ok(Levels { boundary, interior })
    }

    /// `q ∈ Γ⁺*° \ Γ⁺°`.
    pub fn counted(&self, q: &[i64]) -> bool {
        self.boundary.iter().all(|l| l.excess(q) > 0) && self.interior.iter().any(|l| l.excess(q) <= 0)
    }
}

/// Vertices of `{x : a_i·x ≥ b_i}` by brute force over r-subsets.
fn polytope_vertices(rows: &[(Vec<BigInt>, BigInt)], r: usize) -> Vec<Vec<Rat>> {
    let mut out = Vec::new();
    let k = rows.len();
    let mut idx: Vec<usize> = (0..r).collect();
    if k < r {
        return out;
    }
    loop {
        let a: Vec<Vec<Rat>> = idx.iter().map(|&i| rows[i].0.iter().map(rat_int).collect()).collect();
        if !linalg::determinant(&a).is_zero() {
            let b: Vec<Rat> = idx.iter().map(|&i| rat_int(&rows[i].1)).collect();
            if let Some(x) = linalg::solve_rational(&a, &b) {
                let feasible = rows.iter().all(|(row, rhs)| {
                    let v: Rat = row.iter().zip(&x).map(|(c, xi)| rat_int(c) * xi).sum();
                    v >= rat_int(rhs)
                });
                if feasible {
                    out.push(x);
                }
            }
        }
        // next combination
        let mut i = r;
        while i > 0 && idx[i - 1] == k - r + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

/// Integer box `[lo, hi]` containing the region counted by [`pg_count`],
/// or `None` when the region is empty.
pub fn pg_box(fan: &DualFan) -> Result<Option<(Vec<i64>, Vec<i64>)>> {
    let r = fan.rank;
    let boundary: Vec<_> = fan.rays.iter().filter(|x| x.on_boundary).collect();
    let mut lo: Option<Vec<Rat>> = None;
    let mut hi: Option<Vec<Rat>> = None;
    for tau in fan.rays.iter().filter(|x| !x.on_boundary) {
        let mut rows: Vec<(Vec<BigInt>, BigInt)> =
            boundary.iter().map(|b| (b.ell.coords().to_vec(), &b.m + 1)).collect();
        rows.push((tau.ell.coords().iter().map(|c| -c).collect(), -tau.m.clone()));
        for v in polytope_vertices(&rows, r) {
            match (&mut lo, &mut hi) {
                (Some(l), Some(h)) => {
                    for k in 0..r {
                        if v[k] < l[k] {
                            l[k] = v[k].clone();
                        }
                        if v[k] > h[k] {
                            h[k] = v[k].clone();
                        }
                    }
                }
                _ => {
                    lo = Some(v.clone());
                    hi = Some(v);
                }
            }
        }
    }
    let (Some(lo), Some(hi)) = (lo, hi) else { return Ok(None) };
    let lo: Option<Vec<i64>> = lo.iter().map(|x| linalg::ceil(x).to_i64()).collect();
    let hi: Option<Vec<i64>> = hi.iter().map(|x| linalg::floor(x).to_i64()).collect();
    Ok(Some((lo.ok_or_else(overflow)?, hi.ok_or_else(overflow)?)))
}

fn box_size(lo: &[i64], hi: &[i64]) -> u128 {
    lo.iter().zip(hi).map(|(a, b)| if b < a { 0 } else { (*b as i128 - *a as i128 + 1) as u128 }).product()
}

/// Calls `f` on every lattice point of the box.
pub(crate) fn for_each_point(lo: &[i64], hi: &[i64], mut f: impl FnMut(&[i64])) {
    if lo.iter().zip(hi).any(|(a, b)| b < a) {
        return;
    }
    let mut q = lo.to_vec();
    loop {
        f(&q);
        let mut k = 0;
        loop {
            if k == q.len() {
                return;
            }
            if q[k] < hi[k] {
                q[k] += 1;
                break;
            }
            q[k] = lo[k];
            k += 1;
        }
    }
}

/// Number of lattice points `q` with `ℓ(q) > m_ℓ` on every boundary ray of
/// the fan and `ℓ(q) ≤ m_ℓ` on at least one interior ray.
pub fn pg_count(fan: &DualFan) -> Result<BigInt> {
    let levels = Levels::new(fan)?;
    let Some((lo, hi)) = pg_box(fan)? else { return Ok(BigInt::zero()) };
    if box_size(&lo, &hi) > BOX_CAP {
        return Err(Error::EnumerationCap(format!("counting box {lo:?}..{hi:?} is too large")));
    }
    let mut count: u64 = 0;
    for_each_point(&lo, &hi, |q| {
        if levels.counted(q) {
            count += 1;
        }
    });
    Ok(BigInt::from(count))
}

/// The δ invariant, or infinity for non-isolated singularities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Delta {
    Finite(BigInt),
    Infinite,
}

impl std::fmt::Display for Delta {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Delta::Finite(d) => write!(f, "{d}"),
            Delta::Infinite => write!(f, "infinite"),
        }
    }
}

/// The boundary of Σ cut into cells by the fan, as machine levels in
/// cyclic order.
pub struct BoundaryCircle {
    levels: Vec<Level>,
    /// Dual rays of Σ, used to test whether active rays share a facet.
    facets: Vec<Vec<i64>>,
    interior: Vec<Level>,
}

impl BoundaryCircle {
    pub fn new(nd: &NewtonData, fan: &DualFan) -> Result<BoundaryCircle> {
        let levels = fan
            .boundary_cycle
            .iter()
            .map(|&i| level(&fan.rays[i].ell, &fan.rays[i].m))
            .collect::<Result<Vec<_>>>()?;
        let facets = nd
            .cone()
            .dual_rays()
            .iter()
            .map(|u| u.to_i64().ok_or_else(overflow))
            .collect::<Result<Vec<_>>>()?;
        let interior = Levels::new(fan)?.interior;
        Ok(BoundaryCircle { levels, facets, interior })
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Which boundary rays satisfy `ℓ(q) > m_ℓ`, in cyclic order.
    pub fn good(&self, q: &[i64]) -> Vec<bool> {
        self.levels.iter().map(|l| l.excess(q) > 0).collect()
    }

    /// Number of connected components of the good part of the circle.
    pub fn components(&self, q: &[i64]) -> usize {
        let g = self.good(q);
        let n = g.len();
        if g.iter().all(|&x| x) {
            return 1;
        }
        (0..n).filter(|&i| g[i] && !g[(i + n - 1) % n]).count()
    }

    /// `q` lies in Γ⁺ but on no compact face.
    fn in_noncompact_part(&self, q: &[i64]) -> bool {
        if self.levels.iter().chain(&self.interior).any(|l| l.excess(q) < 0) {
            return false;
        }
        // q ∈ Γ⁺; on a compact face iff its active rays meet the interior of Σ
        if self.interior.iter().any(|l| l.excess(q) == 0) {
            return false;
        }
        let active: Vec<&Level> = self.levels.iter().filter(|l| l.excess(q) == 0).collect();
        if active.is_empty() {
            return true;
        }
        self.facets.iter().any(|u| {
            active.iter().all(|l| l.ell.iter().zip(u).map(|(a, b)| *a as i128 * *b as i128).sum::<i128>() == 0)
        })
    }

    /// Contribution `max(0, components - 1)` of a lattice point.
    pub fn contribution(&self, q: &[i64]) -> usize {
        if self.in_noncompact_part(q) {
            return 0;
        }
        self.components(q).saturating_sub(1)
    }
}

/// δ through the boundary circle model, enumerating sup-norm shells
/// around the vertices of Γ⁺ until two consecutive shells contribute
/// nothing.
pub fn surface_delta(nd: &NewtonData, fan: &DualFan, shell_cap: usize) -> Result<Delta> {
    if !isolated_test(nd, fan)?.isolated {
        return Ok(Delta::Infinite);
    }
    let circle = BoundaryCircle::new(nd, fan)?;
    let verts: Vec<Vec<i64>> = fan.vertices.iter().map(|v| v.to_i64().ok_or_else(overflow)).collect::<Result<_>>()?;
    let lo: Vec<i64> = (0..3).map(|k| verts.iter().map(|v| v[k]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..3).map(|k| verts.iter().map(|v| v[k]).max().unwrap()).collect();
    let mut total: u64 = 0;
    let mut quiet = 0;
    for s in 0..=shell_cap as i64 {
        let (l, h): (Vec<i64>, Vec<i64>) = (lo.iter().map(|x| x - s).collect(), hi.iter().map(|x| x + s).collect());
        if box_size(&l, &h) > BOX_CAP {
            return Err(Error::EnumerationCap("δ shell too large".into()));
        }
        let mut shell: u64 = 0;
        for_each_point(&l, &h, |q| {
            let on_shell = s == 0 || (0..3).any(|k| q[k] == l[k] || q[k] == h[k]);
            if on_shell {
                shell += circle.contribution(q) as u64;
            }
        });
        total += shell;
        if shell == 0 {
            quiet += 1;
            if quiet == 2 {
                return Ok(Delta::Finite(BigInt::from(total)));
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::EnumerationCap(format!("δ enumeration did not stabilise within {shell_cap} shells")))
}

pub fn is_normal_surface(nd: &NewtonData, fan: &DualFan, shell_cap: usize) -> Result<bool> {
    Ok(surface_delta(nd, fan, shell_cap)? == Delta::Finite(BigInt::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::dual_fan;

    const OCT: &[&[i64]] = &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]];
    const GOR: &[&[i64]] = &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]];
    const GOR_S: &[&[i64]] = &[&[0, 0, 2], &[1, 0, 1], &[0, 2, 0], &[1, 2, -1]];

    fn data(cone: &[&[i64]], support: &[&[i64]]) -> (NewtonData, DualFan) {
        let nd = NewtonData::from_i64(cone, support).unwrap();
        let fan = dual_fan(&nd).unwrap();
        (nd, fan)
    }

    /// Counting over growing boxes until the count is stable.
    fn brute_pg(fan: &DualFan) -> u64 {
        let levels = Levels::new(fan).unwrap();
        let mut last = u64::MAX;
        for s in [20i64, 40] {
            let mut c = 0;
            for_each_point(&[-s, -s, -s], &[s, s, s], |q| {
                if levels.counted(q) {
                    c += 1
                }
            });
            if c == last {
                return c;
            }
            last = c;
        }
        last
    }

    #[test]
    fn pg_examples() {
        let (_, fan) = data(OCT, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 7]]);
        assert_eq!(pg_count(&fan).unwrap(), BigInt::from(1));
        assert_eq!(brute_pg(&fan), 1);
        let (_, fan) = data(GOR, GOR_S);
        assert_eq!(pg_count(&fan).unwrap(), BigInt::zero());
        let (_, fan) = data(OCT, &[&[5, 0, 0], &[2, 2, 0], &[0, 7, 0], &[0, 0, 10]]);
        assert_eq!(pg_count(&fan).unwrap(), BigInt::from(brute_pg(&fan)));
        let (_, fan) = data(OCT, &[&[1, 1, 1]]);
        assert_eq!(pg_count(&fan).unwrap(), BigInt::zero());
    }

    #[test]
    fn delta_examples() {
        let (nd, fan) = data(GOR, GOR_S);
        assert_eq!(surface_delta(&nd, &fan, DEFAULT_SHELL_CAP).unwrap(), Delta::Finite(BigInt::zero()));
        let (nd, fan) = data(OCT, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 7]]);
        assert_eq!(surface_delta(&nd, &fan, DEFAULT_SHELL_CAP).unwrap(), Delta::Finite(BigInt::zero()));
        let (nd, fan) = data(OCT, &[&[2, 0, 0], &[0, 2, 1]]);
        assert_eq!(surface_delta(&nd, &fan, DEFAULT_SHELL_CAP).unwrap(), Delta::Infinite);
        assert!(!is_normal_surface(&nd, &fan, DEFAULT_SHELL_CAP).unwrap());
        let (nd, fan) = data(OCT, &[&[5, 0, 0], &[2, 2, 0], &[0, 7, 0], &[0, 0, 10]]);
        assert!(is_normal_surface(&nd, &fan, DEFAULT_SHELL_CAP).unwrap());
    }

    #[test]
    fn full_circle_matches_count() {
        let (nd, fan) = data(OCT, &[&[3, 0, 0], &[1, 3, 0], &[0, 0, 5], &[0, 10, 1]]);
        let circle = BoundaryCircle::new(&nd, &fan).unwrap();
        let levels = Levels::new(&fan).unwrap();
        for_each_point(&[-3, -3, -3], &[12, 12, 12], |q| {
            let full = circle.good(q).iter().all(|&g| g);
            let inside = levels.interior.iter().all(|l| l.excess(q) > 0);
            assert_eq!(full && !inside, levels.counted(q));
        });
    }

    #[test]
    fn rank_two_count() {
        // cusp: p_g of a curve-like count is the number of interior points
        // below the diagram
        let nd = NewtonData::from_i64(&[&[1, 0], &[0, 1]], &[&[2, 0], &[0, 3]]).unwrap();
        let fan = dual_fan(&nd).unwrap();
        assert_eq!(pg_count(&fan).unwrap(), BigInt::from(1));
    }
}
