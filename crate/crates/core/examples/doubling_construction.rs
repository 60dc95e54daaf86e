//! H = 2L + <b> carries Ulrich ideals with 2 and n generators.

use std::sync::Arc;

use ulrich::construct::admissible_b;
use ulrich::{doubled_semigroup, doubling_ulrich_pair, NumericalSemigroup};

pub fn run() -> Result<(), ulrich::Error> {
    let base = Arc::new(NumericalSemigroup::from_generators(&[3, 4, 5])?);
    for b in admissible_b(&base, 15) {
        let pair = doubling_ulrich_pair(&doubled_semigroup(&base, b)?)?;
        println!(
            "b = {b}: H = {}, I = {} (ν = {}), J = {} (ν = {})",
            pair.instance.doubled, pair.i.ideal, pair.i.nu, pair.j.ideal, pair.j.nu
        );
    }
    match doubled_semigroup(&base, 7) {
        Err(e) => println!("b = 7 rejected: {e}"),
        Ok(_) => unreachable!("7 is below a_n + a_1 + 1"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), ulrich::Error> {
    run()
}
