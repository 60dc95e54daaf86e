//! Finite-length modules over k[[H]]: socle dimension, minimal generators
//! and the dimension of a Hom space.

use std::sync::Arc;

use ulrich::{hom_space, quotient_module, subquotient_module, NumericalSemigroup, RelativeIdeal};

pub fn run() -> Result<(), ulrich::Error> {
    let h = Arc::new(NumericalSemigroup::from_generators(&[3, 4, 5])?);
    let m = RelativeIdeal::maximal(&h);
    let unit = RelativeIdeal::unit(&h);
    let r_mod_q = quotient_module(&unit, 3).map_err(ulrich::UlrichError::from)?;
    let m_mod_q = quotient_module(&m, 3).map_err(ulrich::UlrichError::from)?;
    let r_mod_m = subquotient_module(&unit, &m).map_err(ulrich::UlrichError::from)?;
    for (name, module) in [("R/Q", &r_mod_q), ("m/Q", &m_mod_q), ("R/m", &r_mod_m)] {
        println!(
            "{name}: basis {:?}, socle dimension {}, ν = {}",
            module.basis_labels().unwrap_or_default(),
            module.socle_dimension(),
            module.minimal_generator_count()
        );
    }
    let hom = hom_space(&m_mod_q, &r_mod_q).map_err(ulrich::UlrichError::from)?;
    println!("dim Hom(m/Q, R/Q) = {}", hom.dimension());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), ulrich::Error> {
    run()
}
