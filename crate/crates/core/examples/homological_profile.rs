//! Ext¹ and Ext² of R/I for an Ulrich ideal, with the type identity.

use std::sync::Arc;

use ulrich::{is_ulrich, verify_homological_profile, NumericalSemigroup, RelativeIdeal};

pub fn run() -> Result<(), ulrich::Error> {
    let h = Arc::new(NumericalSemigroup::from_generators(&[3, 4, 5])?);
    let cert = is_ulrich(&RelativeIdeal::maximal(&h))?;
    let report = verify_homological_profile(&cert)?;
    let p = report.profile.as_ref().expect("profile reports carry measurements");
    println!(
        "{h} m: t = {}, Ext¹ rank {}, dim Hom = {}, Ext² rank {}, r(R) = {}, r(R/I) = {}",
        p.t, p.ext1_rank, p.hom_dim, p.ext2_rank, p.r_r, p.r_ri
    );
    for c in &report.checks {
        println!("  {:<14} {:?}  {}", c.name, c.status, c.detail);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), ulrich::Error> {
    run()
}
