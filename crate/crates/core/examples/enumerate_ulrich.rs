//! Every non-parameter Ulrich ideal below a reduction-degree bound.

use std::sync::Arc;

use ulrich::ulrich::default_bound;
use ulrich::{enumerate_ulrich, NumericalSemigroup};

pub fn run() -> Result<(), ulrich::Error> {
    for gens in [&[2, 5][..], &[3, 4, 5], &[4, 5], &[4, 5, 7], &[6, 8, 9, 10]] {
        let h = Arc::new(NumericalSemigroup::from_generators(gens)?);
        let bound = default_bound(&h);
        let found = enumerate_ulrich(&h, bound)?;
        let list: Vec<String> = found.iter().map(|c| format!("{} (ν = {})", c.ideal, c.nu)).collect();
        println!("{h}, bound {bound}: [{}]", list.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), ulrich::Error> {
    run()
}
