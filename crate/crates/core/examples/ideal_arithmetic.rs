//! Sums, products, colons and colengths of monomial ideals over <4,5>.

use std::sync::Arc;

use ulrich::{NumericalSemigroup, RelativeIdeal};

pub fn run() -> Result<(), ulrich::Error> {
    let h = Arc::new(NumericalSemigroup::from_generators(&[4, 5])?);
    let i = RelativeIdeal::new(&h, &[4, 10]).map_err(ulrich::UlrichError::from)?;
    let q = RelativeIdeal::principal(&h, 4);
    let square = i.multiply(&i).map_err(ulrich::UlrichError::from)?;
    println!("I = {i}, I² = {square}, QI = {}", q.multiply(&i).map_err(ulrich::UlrichError::from)?);
    println!("Q : I = {}", q.colon(&i).map_err(ulrich::UlrichError::from)?);
    println!("ℓ(R/I) = {}", i.colength().map_err(ulrich::UlrichError::from)?);
    println!("I \\ I² = {:?}", i.difference(&square).map_err(ulrich::UlrichError::from)?);
    println!("canonical ideal K = {}", h.canonical_ideal());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), ulrich::Error> {
    run()
}
