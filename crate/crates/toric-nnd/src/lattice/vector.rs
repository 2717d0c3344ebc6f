use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// gcd of a list of integers (0 for the empty list or all zeros).
pub fn gcd_all<'a, I: IntoIterator<Item = &'a BigInt>>(items: I) -> BigInt {
    let mut g = BigInt::zero();
    for x in items {
        g = g.gcd(x);
    }
    g
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Cross product of two vectors of length 3.
pub(crate) fn cross(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub(crate) fn det2(a: &[BigInt], b: &[BigInt]) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
}

pub(crate) fn det3(a: &[BigInt], b: &[BigInt], c: &[BigInt]) -> BigInt {
    dot(&cross(a, b), c)
}

fn fmt_coords(c: &[BigInt], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in c.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

macro_rules! int_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(Vec<BigInt>);

        impl $name {
            pub fn new(coords: Vec<BigInt>) -> Self {
                Self(coords)
            }

            pub fn from_i64(coords: &[i64]) -> Self {
                Self(coords.iter().map(|&x| BigInt::from(x)).collect())
            }

            pub fn zero(rank: usize) -> Self {
                Self(vec![BigInt::zero(); rank])
            }

            pub fn unit(rank: usize, i: usize) -> Self {
                let mut v = vec![BigInt::zero(); rank];
                v[i] = BigInt::from(1);
                Self(v)
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn coords(&self) -> &[BigInt] {
                &self.0
            }

            pub fn into_coords(self) -> Vec<BigInt> {
                self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|x| x.is_zero())
            }

            pub fn add(&self, o: &Self) -> Self {
                Self(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
            }

            pub fn sub(&self, o: &Self) -> Self {
                Self(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
            }

            pub fn neg(&self) -> Self {
                Self(self.0.iter().map(|a| -a).collect())
            }

            pub fn scale(&self, k: &BigInt) -> Self {
                Self(self.0.iter().map(|a| a * k).collect())
            }

            /// Exact division by `k`; `None` if some entry is not divisible.
            pub fn div_exact(&self, k: &BigInt) -> Option<Self> {
                let mut out = Vec::with_capacity(self.0.len());
                for a in &self.0 {
                    let (q, r) = a.div_rem(k);
                    if !r.is_zero() {
                        return None;
                    }
                    out.push(q);
                }
                Some(Self(out))
            }

            /// gcd of the entries (0 for the zero vector).
            pub fn content(&self) -> BigInt {
                gcd_all(&self.0)
            }

            pub fn is_primitive(&self) -> bool {
                self.content() == BigInt::from(1)
            }

            /// Splits off the content: `primitive * content == self`.
            pub fn content_primitive(&self) -> Result<(BigInt, Self)> {
                let g = self.content();
                if g.is_zero() {
                    return Err(Error::ZeroVector);
                }
                let p = self.div_exact(&g).expect("content divides every entry");
                Ok((g, p))
            }

            pub fn primitive(&self) -> Result<Self> {
                Ok(self.content_primitive()?.1)
            }

            pub fn to_i64(&self) -> Option<Vec<i64>> {
                self.0.iter().map(|x| x.to_i64()).collect()
            }

            pub fn max_abs(&self) -> BigInt {
                self.0.iter().map(|x| x.abs()).max().unwrap_or_default()
            }
        }

        impl Index<usize> for $name {
            type Output = BigInt;
            fn index(&self, i: usize) -> &BigInt {
                &self.0[i]
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt_coords(&self.0, f)
            }
        }
    };
}

int_vector!(
    /// Element of the lattice N (linear functionals on exponents).
    LatticeVector
);
int_vector!(
    /// Element of the dual lattice M (exponents of monomials).
    DualVector
);

impl LatticeVector {
    /// The pairing ⟨p, self⟩ of an exponent with this functional.
    pub fn eval(&self, p: &DualVector) -> BigInt {
        dot(&self.0, &p.0)
    }

    pub fn to_dual(&self) -> DualVector {
        DualVector(self.0.clone())
    }
}

impl DualVector {
    pub fn to_lattice(&self) -> LatticeVector {
        LatticeVector(self.0.clone())
    }
}

/// Canonical pairing M × N → Z.
pub fn pairing(u: &DualVector, v: &LatticeVector) -> BigInt {
    v.eval(u)
}

/// Content and primitive part of a nonzero lattice vector.
pub fn content_primitive(v: &LatticeVector) -> Result<(BigInt, LatticeVector)> {
    v.content_primitive()
}
