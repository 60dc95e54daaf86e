//! Certificates of the Ulrich test, including the three ways to fail it.

use std::sync::Arc;

use ulrich::{is_ulrich, NumericalSemigroup, RelativeIdeal};

pub fn run() -> Result<(), ulrich::Error> {
    let cases: [(&[i64], &[i64]); 5] = [
        (&[3, 4, 5], &[3, 4, 5]),
        (&[4, 5], &[4, 10]),
        (&[4, 5], &[4, 5]),
        (&[4, 5], &[4]),
        (&[6, 8, 9, 10], &[6, 9]),
    ];
    for (gens, ideal) in cases {
        let h = Arc::new(NumericalSemigroup::from_generators(gens)?);
        let i = RelativeIdeal::new(&h, ideal).map_err(ulrich::UlrichError::from)?;
        let c = is_ulrich(&i)?;
        println!(
            "{h} {i}: a = {}, ν = {}, ℓ(R/I) = {}, stable {}, free {}, {:?}",
            c.reduction_degree, c.nu, c.colength, c.stability_ok, c.freeness_ok, c.verdict
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), ulrich::Error> {
    run()
}
