use num_bigint::BigInt;

use super::fan::DualFan;
use super::polyhedron::NewtonData;
use crate::error::{Error, Result};
use crate::lattice::linalg::{self, rat_int, Rat};

/// Coefficient ring for the pointedness tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    Rationals,
}

fn solve(rows: Vec<Vec<BigInt>>, rhs: Vec<BigInt>, over: Ring) -> Option<Vec<Rat>> {
    match over {
        Ring::Integers => linalg::solve_integral(&rows, &rhs).map(|x| x.iter().map(rat_int).collect()),
        Ring::Rationals => {
            let b: Vec<Rat> = rhs.iter().map(rat_int).collect();
            linalg::solve_rational(&linalg::to_rat_matrix(&rows), &b)
        }
    }
}

/// A point `p` with `ℓ(p) = m_ℓ` for every ray ℓ of Σ, if one exists in
/// the requested ring.
pub fn pointed_at(nd: &NewtonData, over: Ring) -> Option<Vec<Rat>> {
    let rays = nd.cone().rays();
    let rows = rays.iter().map(|l| l.coords().to_vec()).collect();
    let rhs = rays.iter().map(|l| nd.min_value(l)).collect();
    solve(rows, rhs, over)
}

/// A point `p` with `ℓ(p) = m_ℓ + 1` for every boundary ray of class
/// (1,1), if one exists in the requested ring. When the system has more
/// than one solution the returned one sets free coordinates to zero.
pub fn gorenstein_pointed_at(nd: &NewtonData, fan: &DualFan, over: Ring) -> Result<Option<Vec<Rat>>> {
    if nd.rank() != 3 {
        return Err(Error::UnsupportedRank(nd.rank()));
    }
    let rays: Vec<_> = fan.extended_nodes().into_iter().map(|i| &fan.rays[i]).collect();
    let rows = rays.iter().map(|r| r.ell.coords().to_vec()).collect();
    let rhs = rays.iter().map(|r| &r.m + 1).collect();
    Ok(solve(rows, rhs, over))
}
