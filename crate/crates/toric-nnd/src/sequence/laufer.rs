use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::form::{intersection_form, is_negative_definite};
use crate::graph::{Cycle, PlumbingGraph};
use crate::lattice::linalg::{self, rat_int, Rat};

/// Steps allowed in one Laufer sequence before giving up.
pub const STEP_BUDGET: usize = 1_000_000;

/// `⌈r⌉_x`: the least number `≥ r` congruent to `x` modulo 1.
pub fn ceil_mod(r: &Rat, x: &Rat) -> Rat {
    let d = x - r;
    r + (&d - rat_int(&linalg::floor(&d)))
}

/// One step `Z_{i+1} = Z_i + E_v` of a computation sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceStep {
    pub cycle_before: Cycle,
    pub vertex: usize,
    /// `(-Z_i, E_v)`.
    pub d: Rat,
    /// `max(0, d + 1)`.
    pub contribution: Rat,
    /// Chosen by the node rule rather than as a Laufer filler.
    pub diagonal: bool,
}

impl SequenceStep {
    pub(crate) fn new(z: &Cycle, v: usize, pairing: &Rat, diagonal: bool) -> SequenceStep {
        let d = -pairing;
        let c = &d + Rat::one();
        SequenceStep {
            cycle_before: z.clone(),
            vertex: v,
            d,
            contribution: if c.is_positive() { c } else { Rat::zero() },
            diagonal,
        }
    }
}

/// Intersection data reused along a sequence.
pub(crate) struct Form {
    a: Vec<Vec<BigInt>>,
}

impl Form {
    pub fn new(g: &PlumbingGraph) -> Result<Form> {
        if !is_negative_definite(g) {
            return Err(Error::SingularForm);
        }
        Ok(Form { a: intersection_form(g) })
    }

    pub fn pairings(&self, z: &Cycle) -> Vec<Rat> {
        self.a
            .iter()
            .map(|row| row.iter().zip(&z.0).filter(|(x, _)| !x.is_zero()).map(|(x, c)| rat_int(x) * c).sum())
            .collect()
    }

    /// Lowest-id Laufer steps from `z` until `(Z, E_v) ≤ 0` off `fixed`.
    pub fn run(&self, z: Cycle, fixed: &[bool], steps: &mut Vec<SequenceStep>) -> Result<Cycle> {
        let mut z = z;
        let mut p = self.pairings(&z);
        for _ in 0..STEP_BUDGET {
            let Some(v) = (0..z.len()).find(|&v| !fixed[v] && p[v].is_positive()) else { return Ok(z) };
            steps.push(SequenceStep::new(&z, v, &p[v], false));
            z.add_unit(v, &Rat::one());
            for (w, pw) in p.iter_mut().enumerate() {
                if !self.a[w][v].is_zero() {
                    *pw += rat_int(&self.a[w][v]);
                }
            }
        }
        Err(Error::EnumerationCap(format!("Laufer sequence exceeded {STEP_BUDGET} steps")))
    }

    /// Solution of `(Z', E_v) = 0` off `fixed` with `Z'` equal to `z` on `fixed`.
    fn harmonic(&self, z: &Cycle, fixed: &[bool]) -> Result<Cycle> {
        let free: Vec<usize> = (0..z.len()).filter(|&v| !fixed[v]).collect();
        if free.is_empty() {
            return Ok(z.clone());
        }
        let m: Vec<Vec<Rat>> = free.iter().map(|&v| free.iter().map(|&w| rat_int(&self.a[v][w])).collect()).collect();
        let rhs: Vec<Rat> = free
            .iter()
            .map(|&v| {
                -(0..z.len()).filter(|&w| fixed[w]).map(|w| rat_int(&self.a[v][w]) * &z.0[w]).sum::<Rat>()
            })
            .collect();
        let sol = linalg::solve_rational(&m, &rhs).ok_or(Error::SingularForm)?;
        let mut out = z.clone();
        for (k, &v) in free.iter().enumerate() {
            out.0[v] = sol[k].clone();
        }
        Ok(out)
    }

    /// The Laufer operator, started from a cycle known to lie below the
    /// answer.
    pub fn x(&self, z: &Cycle, fixed: &[bool]) -> Result<Cycle> {
        let h = self.harmonic(z, fixed)?;
        let start = Cycle(z.0.iter().zip(&h.0).map(|(zv, hv)| ceil_mod(hv, zv)).collect());
        self.run(start, fixed, &mut Vec::new())
    }
}

pub(crate) fn node_mask(n: usize, nodes: &[usize]) -> Result<Vec<bool>> {
    let mut mask = vec![false; n];
    for &v in nodes {
        if v >= n {
            return Err(Error::InvalidArgument(format!("vertex {v} is not in the resolution graph")));
        }
        mask[v] = true;
    }
    Ok(mask)
}

/// The smallest cycle `x(Z) ∈ Z + L` with the multiplicities of `Z` on
/// `nodes` and `(x(Z), E_v) ≤ 0` for every other vertex.
pub fn laufer_x(g: &PlumbingGraph, z: &Cycle, nodes: &[usize]) -> Result<Cycle> {
    let form = Form::new(g)?;
    form.x(z, &node_mask(g.num_core(), nodes)?)
}

/// The generalized Laufer sequence from `z` to `x(z)`, choosing the lowest
/// vertex id at each step. Requires `z ≤ x(z)`.
pub fn laufer_sequence(g: &PlumbingGraph, z: &Cycle, nodes: &[usize]) -> Result<Vec<SequenceStep>> {
    let form = Form::new(g)?;
    let mask = node_mask(g.num_core(), nodes)?;
    let target = form.x(z, &mask)?;
    if !z.le(&target) {
        return Err(Error::Hypothesis(format!("cycle {z} is not below its Laufer image {target}")));
    }
    let mut steps = Vec::new();
    let end = form.run(z.clone(), &mask, &mut steps)?;
    if end != target {
        return Err(Error::Internal(format!("Laufer sequence ended at {end}, expected {target}")));
    }
    Ok(steps)
}
