use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::build::PlumbingGraph;
use super::cycle::Cycle;
use crate::error::{Error, Result};
use crate::lattice::linalg::{self, rat, rat_int, Rat};

/// Intersection matrix on the non-extended vertices: `-b_v` on the
/// diagonal and edge counts off it.
pub fn intersection_form(g: &PlumbingGraph) -> Vec<Vec<BigInt>> {
    let n = g.num_core();
    let mut a = vec![vec![BigInt::zero(); n]; n];
    for (v, row) in a.iter_mut().enumerate() {
        row[v] = g.euler(v);
    }
    for (x, y) in g.core_edges() {
        a[x][y] += 1;
        a[y][x] += 1;
    }
    a
}

pub fn is_negative_definite(g: &PlumbingGraph) -> bool {
    let a = linalg::to_rat_matrix(&intersection_form(g));
    match linalg::ldl_pivots(&a) {
        Some(p) => p.iter().all(|x| x.is_negative()),
        None => false,
    }
}

/// Determinant of the negated intersection form (1 for the empty graph).
pub fn form_determinant(g: &PlumbingGraph) -> BigInt {
    let a: Vec<Vec<Rat>> =
        intersection_form(g).iter().map(|r| r.iter().map(|x| rat_int(&-x)).collect()).collect();
    linalg::determinant(&a).to_integer()
}

/// The intersection number `(a, b)`.
pub fn pairing(g: &PlumbingGraph, a: &Cycle, b: &Cycle) -> Rat {
    let form = intersection_form(g);
    let mut s = Rat::zero();
    for (i, row) in form.iter().enumerate() {
        if a.0[i].is_zero() {
            continue;
        }
        for (j, x) in row.iter().enumerate() {
            if !x.is_zero() && !b.0[j].is_zero() {
                s += &a.0[i] * &b.0[j] * rat_int(x);
            }
        }
    }
    s
}

/// The numbers `(Z, E_v)` for all non-extended `v`.
pub fn pairings_with_basis(g: &PlumbingGraph, z: &Cycle) -> Vec<Rat> {
    let form = intersection_form(g);
    form.iter()
        .map(|row| row.iter().zip(&z.0).filter(|(x, _)| !x.is_zero()).map(|(x, c)| rat_int(x) * c).sum())
        .collect()
}

/// Solves `(Z, E_v) = rhs_v` for all `v`.
fn solve_form(g: &PlumbingGraph, rhs: Vec<Rat>) -> Result<Cycle> {
    if !is_negative_definite(g) {
        return Err(Error::SingularForm);
    }
    let a = linalg::to_rat_matrix(&intersection_form(g));
    linalg::solve_rational(&a, &rhs).map(Cycle).ok_or(Error::SingularForm)
}

/// The dual cycle `E_v*` with `(E_v*, E_w) = -δ_vw`.
pub fn dual_cycle(g: &PlumbingGraph, v: usize) -> Result<Cycle> {
    let n = g.num_core();
    if v >= n {
        return Err(Error::InvalidArgument(format!("vertex {v} is not in the resolution graph")));
    }
    let mut rhs = vec![Rat::zero(); n];
    rhs[v] = -Rat::one();
    solve_form(g, rhs)
}

/// Canonical cycle from the adjunction equations
/// `(Z_K, E_v) = -b_v + 2 - 2g_v`.
pub fn canonical_cycle_adjunction(g: &PlumbingGraph) -> Result<Cycle> {
    let rhs = (0..g.num_core())
        .map(|v| rat_int(&g.euler(v)) + rat(2) - rat_int(&g.vertices[v].genus) * rat(2))
        .collect();
    solve_form(g, rhs)
}

/// Canonical cycle from the weights: `Z_K = E + wt(f) - Σ (m_n + 1) E_v*`
/// over edges from an extended node `n` to a vertex `v`.
pub fn canonical_cycle_formula(g: &PlumbingGraph) -> Result<Cycle> {
    let n = g.num_core();
    let base = Cycle(g.vertices[..n].iter().map(|v| rat_int(&v.m) + Rat::one()).collect());
    // Σ k_v E_v* solves (Z, E_w) = -k_w
    let mut k = vec![Rat::zero(); n];
    for &(a, b) in &g.edges {
        let (ext, v) = match (g.is_core(a), g.is_core(b)) {
            (false, true) => (a, b),
            (true, false) => (b, a),
            _ => continue,
        };
        k[v] -= rat_int(&(&g.vertices[ext].m + 1));
    }
    Ok(base.sub(&solve_form(g, k)?))
}

/// `m_n(Z_K - E)` for every node `n`.
pub fn node_multiplicities(g: &PlumbingGraph, zk: &Cycle) -> Vec<(usize, Rat)> {
    g.nodes().into_iter().map(|n| (n, &zk.0[n] - Rat::one())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_minus_three() {
        let g = PlumbingGraph::from_decorations(&[-3], &[0], &[]).unwrap();
        assert!(is_negative_definite(&g));
        let third = Rat::new(1.into(), 3.into());
        assert_eq!(dual_cycle(&g, 0).unwrap(), Cycle(vec![third.clone()]));
        assert_eq!(canonical_cycle_adjunction(&g).unwrap(), Cycle(vec![third]));
        assert_eq!(form_determinant(&g), BigInt::from(3));
    }

    #[test]
    fn a2_string() {
        let g = PlumbingGraph::from_decorations(&[-2, -2], &[0, 0], &[(0, 1)]).unwrap();
        let e = dual_cycle(&g, 0).unwrap();
        assert_eq!(e, Cycle(vec![Rat::new(2.into(), 3.into()), Rat::new(1.into(), 3.into())]));
        // (E*, E*) is the corresponding entry of minus the inverse
        assert_eq!(pairing(&g, &e, &e), Rat::new((-2).into(), 3.into()));
        assert_eq!(canonical_cycle_adjunction(&g).unwrap(), Cycle::zero(2));
    }

    #[test]
    fn zero_self_intersection_is_not_definite() {
        let g = PlumbingGraph::from_decorations(&[0], &[0], &[]).unwrap();
        assert!(!is_negative_definite(&g));
        assert_eq!(dual_cycle(&g, 0), Err(Error::SingularForm));
    }
}
