//! Frobenius number, gaps, Apéry set, pseudo-Frobenius numbers and the
//! (almost) symmetry tests for a few semigroups.

use std::sync::Arc;

use ulrich::NumericalSemigroup;

pub fn run() -> Result<(), ulrich::Error> {
    for gens in [&[3, 4, 5][..], &[4, 5], &[4, 5, 7], &[6, 8, 9, 10]] {
        let h = Arc::new(NumericalSemigroup::from_generators(gens)?);
        println!(
            "{h}: F = {}, genus {}, gaps {:?}, Ap(H, {}) = {:?}, PF = {:?}, symmetric {}, almost symmetric {}",
            h.frobenius(),
            h.genus(),
            h.gaps(),
            h.multiplicity(),
            h.apery_set(h.multiplicity())?,
            h.pseudo_frobenius()?,
            h.is_symmetric(),
            h.is_almost_symmetric()?,
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), ulrich::Error> {
    run()
}
