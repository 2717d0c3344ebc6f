use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::lattice::linalg::{self, rat_int, Rat};

/// A rational cycle `Σ c_v E_v`, indexed by the non-extended vertices of a
/// plumbing graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(pub Vec<Rat>);

impl Cycle {
    pub fn zero(n: usize) -> Cycle {
        Cycle(vec![Rat::zero(); n])
    }

    /// The cycle `E_v`.
    pub fn unit(n: usize, v: usize) -> Cycle {
        let mut c = Cycle::zero(n);
        c.0[v] = Rat::one();
        c
    }

    pub fn from_ints(coeffs: &[BigInt]) -> Cycle {
        Cycle(coeffs.iter().map(rat_int).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coefficient of `E_v`.
    pub fn m(&self, v: usize) -> &Rat {
        &self.0[v]
    }

    pub fn add(&self, o: &Cycle) -> Cycle {
        Cycle(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Cycle) -> Cycle {
        Cycle(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Rat) -> Cycle {
        Cycle(self.0.iter().map(|a| a * k).collect())
    }

    /// Adds `k·E_v` in place.
    pub fn add_unit(&mut self, v: usize, k: &Rat) {
        self.0[v] += k;
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// Coefficient-wise floor.
    pub fn floor(&self) -> Cycle {
        Cycle(self.0.iter().map(|c| rat_int(&linalg::floor(c))).collect())
    }

    /// Coefficient-wise comparison.
    pub fn le(&self, o: &Cycle) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// The difference lies in the integral lattice.
    pub fn congruent(&self, o: &Cycle) -> bool {
        self.sub(o).is_integral()
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}
