#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toric_nnd::lattice::vector::LatticeVector;
use toric_nnd::newton::{dual_fan, DualFan, NewtonData};

pub const OCT: &[&[i64]] = &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]];

pub fn octant(support: &[&[i64]]) -> NewtonData {
    NewtonData::from_i64(OCT, support).unwrap()
}

/// A seeded stream of octant supports with coordinates at most `max`.
/// Most are convenient (one point on each axis); some have an axis point
/// lifted off its axis so that non-isolated and non-normal cases appear.
pub fn random_supports(seed: u64, count: usize, max: i64) -> Vec<Vec<Vec<i64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let mut s: Vec<Vec<i64>> = (0..3)
            .map(|k| {
                let mut p = vec![0; 3];
                p[k] = rng.gen_range(2..=max);
                p
            })
            .collect();
        if rng.gen_bool(0.2) {
            let k = rng.gen_range(0..3);
            s[k][(k + 1) % 3] = rng.gen_range(1..=2);
        }
        for _ in 0..rng.gen_range(0..=3) {
            let p: Vec<i64> = (0..3).map(|_| rng.gen_range(0..=max)).collect();
            if p.iter().sum::<i64>() >= 2 {
                s.push(p);
            }
        }
        out.push(s);
    }
    out
}

pub fn corpus(seed: u64, count: usize, max: i64) -> Vec<(NewtonData, DualFan)> {
    random_supports(seed, count, max)
        .into_iter()
        .map(|s| {
            let rows: Vec<&[i64]> = s.iter().map(|p| p.as_slice()).collect();
            let nd = octant(&rows);
            let fan = dual_fan(&nd).unwrap();
            (nd, fan)
        })
        .collect()
}

fn levels(pairs: impl Iterator<Item = (LatticeVector, num_bigint::BigInt)>) -> Vec<(Vec<i64>, i64)> {
    pairs.map(|(l, m)| (l.to_i64().unwrap(), m.try_into().unwrap())).collect()
}

fn excess((ell, m): &(Vec<i64>, i64), q: &[i64]) -> i64 {
    ell.iter().zip(q).map(|(a, b)| a * b).sum::<i64>() - m
}

/// Points `q` of the box `[-r, r]^n` strictly inside the shifted cone cut
/// out by the boundary rays of the fan and not in the interior of Γ⁺.
pub fn brute_pg(nd: &NewtonData, fan: &DualFan, r: i64) -> u64 {
    let n = nd.rank();
    let boundary = levels(fan.rays.iter().filter(|x| x.on_boundary).map(|x| (x.ell.clone(), x.m.clone())));
    let facets = levels(nd.facets().into_iter());
    let mut q = vec![-r; n];
    let mut count = 0;
    loop {
        if boundary.iter().all(|l| excess(l, &q) > 0) && !facets.iter().all(|l| excess(l, &q) > 0) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            if q[k] < r {
                q[k] += 1;
                break;
            }
            q[k] = -r;
            k += 1;
        }
    }
}
