//! Negative continued fractions and the primitive sequence of a cone.

use num_bigint::BigInt;
use toric_nnd::lattice::{canonical_primitive_sequence, hj_eval, hj_expand, LatticeVector};

fn main() -> toric_nnd::Result<()> {
    for (a, b) in [(7, 3), (13, 5), (2, 1), (30, 7)] {
        let cf = hj_expand(&BigInt::from(a), &BigInt::from(b))?;
        let terms: Vec<String> = cf.terms.iter().map(|t| t.to_string()).collect();
        let (p, q) = hj_eval(&cf.terms);
        println!("{a}/{b} = [{}] -> {p}/{q}", terms.join(", "));
    }
    let seq = canonical_primitive_sequence(&LatticeVector::from_i64(&[1, 0]), &LatticeVector::from_i64(&[3, 7]))?;
    for v in &seq.vectors {
        println!("{v}");
    }
    println!("self-intersections {:?}", seq.selfints.iter().map(|b| b.to_string()).collect::<Vec<_>>());
    Ok(())
}
