//! Exact linear algebra over Z and Q.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_int(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Unimodular column reduction of a single row vector.
///
/// Returns `(g, u, u_inv)` with `v · u = (g, 0, …, 0)`, `g ≥ 0` and
/// `u · u_inv = 1`. Columns `1..n` of `u` form a basis of the integral
/// kernel of `v`.
pub fn reduce_row(v: &[BigInt]) -> (BigInt, Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let n = v.len();
    let mut w = v.to_vec();
    let mut u = identity(n);
    let mut ui = identity(n);
    for j in 1..n {
        if w[j].is_zero() {
            continue;
        }
        let a = w[0].clone();
        let b = w[j].clone();
        let e = a.extended_gcd(&b);
        let (g, x, y) = (e.gcd, e.x, e.y);
        let ag = &a / &g;
        let bg = &b / &g;
        // columns: c0' = x c0 + y cj ; cj' = -bg c0 + ag cj
        for row in u.iter_mut() {
            let c0 = row[0].clone();
            let cj = row[j].clone();
            row[0] = &x * &c0 + &y * &cj;
            row[j] = -(&bg) * &c0 + &ag * &cj;
        }
        // inverse rows: r0' = ag r0 + bg rj ; rj' = -y r0 + x rj
        let r0 = ui[0].clone();
        let rj = ui[j].clone();
        for k in 0..n {
            ui[0][k] = &ag * &r0[k] + &bg * &rj[k];
            ui[j][k] = -(&y) * &r0[k] + &x * &rj[k];
        }
        w[0] = g;
        w[j] = BigInt::zero();
    }
    if w[0].is_negative() {
        w[0] = -w[0].clone();
        for row in u.iter_mut() {
            row[0] = -row[0].clone();
        }
        for k in 0..n {
            ui[0][k] = -ui[0][k].clone();
        }
    }
    (w[0].clone(), u, ui)
}

/// Basis of the lattice `{x ∈ Zⁿ : c·x = 0}` together with a map returning
/// coordinates in that basis.
#[derive(Clone, Debug)]
pub struct KernelLattice {
    pub basis: Vec<Vec<BigInt>>,
    inverse: Vec<Vec<BigInt>>,
}

impl KernelLattice {
    pub fn new(c: &[BigInt]) -> Self {
        let (_, u, ui) = reduce_row(c);
        let n = c.len();
        let basis = (1..n).map(|j| (0..n).map(|i| u[i][j].clone()).collect()).collect();
        KernelLattice { basis, inverse: ui }
    }

    /// Coordinates of `x` (assumed in the kernel) in the kernel basis.
    pub fn coords(&self, x: &[BigInt]) -> Vec<BigInt> {
        let y: Vec<BigInt> = self.inverse.iter().map(|row| crate::lattice::vector::dot(row, x)).collect();
        y[1..].to_vec()
    }

    /// Inverse of [`coords`](Self::coords).
    pub fn embed(&self, y: &[BigInt]) -> Vec<BigInt> {
        let n = self.basis.first().map(|b| b.len()).unwrap_or(0);
        let mut out = vec![BigInt::zero(); n];
        for (k, b) in self.basis.iter().enumerate() {
            for i in 0..n {
                out[i] += &y[k] * &b[i];
            }
        }
        out
    }
}

/// Solves `a x = b` over the integers. Free variables are set to zero.
pub fn solve_integral(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let rows = a.len();
    let n = if rows == 0 { return Some(vec![]) } else { a[0].len() };
    let mut h: Vec<Vec<BigInt>> = a.to_vec();
    let mut u = identity(n);
    let mut pivots: Vec<Option<usize>> = vec![None; rows];
    let mut next = 0usize;
    for i in 0..rows {
        if next >= n {
            break;
        }
        for j in (next + 1)..n {
            if h[i][j].is_zero() {
                continue;
            }
            let a0 = h[i][next].clone();
            let bj = h[i][j].clone();
            let e = a0.extended_gcd(&bj);
            let (g, x, y) = (e.gcd, e.x, e.y);
            let ag = &a0 / &g;
            let bg = &bj / &g;
            for m in h.iter_mut().chain(u.iter_mut()) {
                let c0 = m[next].clone();
                let cj = m[j].clone();
                m[next] = &x * &c0 + &y * &cj;
                m[j] = -(&bg) * &c0 + &ag * &cj;
            }
        }
        if !h[i][next].is_zero() {
            pivots[i] = Some(next);
            next += 1;
        }
    }
    let mut y = vec![BigInt::zero(); n];
    for i in 0..rows {
        let lim = pivots[i].unwrap_or(next);
        let mut s = b[i].clone();
        for c in 0..lim {
            s -= &h[i][c] * &y[c];
        }
        match pivots[i] {
            Some(p) => {
                let (q, r) = s.div_rem(&h[i][p]);
                if !r.is_zero() {
                    return None;
                }
                y[p] = q;
            }
            None => {
                // remaining entries of a row without pivot are zero
                let mut rest = s;
                for c in lim..n {
                    rest -= &h[i][c] * &y[c];
                }
                if !rest.is_zero() {
                    return None;
                }
            }
        }
    }
    Some((0..n).map(|i| crate::lattice::vector::dot(&u[i], &y)).collect())
}

/// Row echelon form over Q; returns the pivot columns.
fn echelon(m: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut piv = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(k) = (r..rows).find(|&k| !m[k][c].is_zero()) else { continue };
        m.swap(r, k);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for k in 0..rows {
            if k != r && !m[k][c].is_zero() {
                let f = m[k][c].clone();
                for j in 0..cols {
                    if m[r][j].is_zero() {
                        continue;
                    }
                    let t = &f * &m[r][j];
                    m[k][j] -= t;
                }
            }
        }
        piv.push(c);
        r += 1;
    }
    piv
}

/// Solves `a x = b` over Q. Free variables are set to zero.
pub fn solve_rational(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    if a.is_empty() {
        return Some(vec![]);
    }
    let n = a[0].len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let piv = echelon(&mut m);
    if piv.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (r, &c) in piv.iter().enumerate() {
        x[c] = m[r][n].clone();
    }
    Some(x)
}

pub fn to_rat_matrix(a: &[Vec<BigInt>]) -> Vec<Vec<Rat>> {
    a.iter().map(|r| r.iter().map(rat_int).collect()).collect()
}

/// Rank over Q of a list of integer vectors.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m = to_rat_matrix(rows);
    echelon(&mut m).len()
}

/// Determinant of a square rational matrix.
pub fn determinant(a: &[Vec<Rat>]) -> Rat {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(k) = (c..n).find(|&k| !m[k][c].is_zero()) else { return Rat::zero() };
        if k != c {
            m.swap(c, k);
            det = -det;
        }
        let p = m[c][c].clone();
        det *= &p;
        for k in (c + 1)..n {
            if m[k][c].is_zero() {
                continue;
            }
            let f = &m[k][c] / &p;
            for j in c..n {
                if m[c][j].is_zero() {
                    continue;
                }
                let t = &f * &m[c][j];
                m[k][j] -= t;
            }
        }
    }
    det
}

/// Pivots of symmetric Gaussian elimination without row exchanges, or
/// `None` when a zero pivot is met. A symmetric matrix is negative definite
/// iff all these pivots exist and are negative.
pub fn ldl_pivots(a: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    let n = a.len();
    let mut m = a.to_vec();
    let mut out = Vec::with_capacity(n);
    for c in 0..n {
        let p = m[c][c].clone();
        if p.is_zero() {
            return None;
        }
        for k in (c + 1)..n {
            if m[k][c].is_zero() {
                continue;
            }
            let f = &m[k][c] / &p;
            for j in c..n {
                if m[c][j].is_zero() {
                    continue;
                }
                let t = &f * &m[c][j];
                m[k][j] -= t;
            }
        }
        out.push(p);
    }
    Some(out)
}

/// Floor of a rational number.
pub fn floor(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

pub fn ceil(r: &Rat) -> BigInt {
    r.ceil().to_integer()
}
