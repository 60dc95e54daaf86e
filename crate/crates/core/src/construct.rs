//! Doubling: from a semigroup `L = <a_1, ..., a_n>` of maximal embedding
//! dimension and an odd `b ∈ L` with `b >= a_n + a_1 + 1`, the semigroup
//! `H = 2L + <b>` carries Ulrich ideals `I = (t^{2a_1}, t^b)` with two
//! generators and `J = (t^{2a_1}, ..., t^{2a_n})` with `n`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideal::RelativeIdeal;
use crate::semigroup::{NumericalSemigroup, SemigroupError};
use crate::ulrich::{is_ulrich, UlrichCertificate, UlrichError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructionError {
    #[error("base {base} needs embedding dimension = multiplicity = n >= 3, got v = {embedding_dimension}, e = {multiplicity}")]
    NotMaxEmbeddingDim {
        base: String,
        embedding_dimension: usize,
        multiplicity: i64,
    },
    #[error("b = {0} must be odd")]
    EvenB(i64),
    #[error("b = {b} must lie in {base}")]
    BNotInL { b: i64, base: String },
    #[error("b = {b} violates b >= a_n + a_1 + 1 = {minimum}")]
    BTooSmall { b: i64, minimum: i64 },
    #[error("listed generators {listed:?} are not minimal for the doubled semigroup (minimal: {actual:?})")]
    NotMinimal { listed: Vec<i64>, actual: Vec<i64> },
    #[error("doubling produced a non-Ulrich ideal {}: {:?}", .0.ideal, .0.verdict)]
    ConstructionFailed(Box<UlrichCertificate>),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Ulrich(#[from] UlrichError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoublingInstance {
    pub base: Arc<NumericalSemigroup>,
    pub b: i64,
    pub doubled: Arc<NumericalSemigroup>,
    pub ideal_i: RelativeIdeal,
    pub ideal_j: RelativeIdeal,
}

impl DoublingInstance {
    pub fn n(&self) -> usize {
        self.base.embedding_dimension()
    }
}

/// Validates the hypotheses strictly and builds `H = 2L + <b>`.
pub fn doubled_semigroup(base: &Arc<NumericalSemigroup>, b: i64) -> Result<DoublingInstance, ConstructionError> {
    let n = base.embedding_dimension();
    if n < 3 || n as i64 != base.multiplicity() {
        return Err(ConstructionError::NotMaxEmbeddingDim {
            base: base.to_string(),
            embedding_dimension: n,
            multiplicity: base.multiplicity(),
        });
    }
    if b % 2 == 0 {
        return Err(ConstructionError::EvenB(b));
    }
    if !base.contains(b) {
        return Err(ConstructionError::BNotInL {
            b,
            base: base.to_string(),
        });
    }
    let minimum = base.max_generator() + base.multiplicity() + 1;
    if b < minimum {
        return Err(ConstructionError::BTooSmall { b, minimum });
    }

    let doubled_gens: Vec<i64> = base.generators().iter().map(|a| 2 * a).collect();
    let mut listed = doubled_gens.clone();
    listed.push(b);
    listed.sort_unstable();
    let doubled = Arc::new(NumericalSemigroup::with_window_factor(&listed, base.window_factor())?);
    if doubled.generators() != listed {
        return Err(ConstructionError::NotMinimal {
            listed,
            actual: doubled.generators().to_vec(),
        });
    }
    let ideal_i = RelativeIdeal::new(&doubled, &[doubled_gens[0], b]).map_err(UlrichError::from)?;
    let ideal_j = RelativeIdeal::new(&doubled, &doubled_gens).map_err(UlrichError::from)?;
    Ok(DoublingInstance {
        base: Arc::clone(base),
        b,
        doubled,
        ideal_i,
        ideal_j,
    })
}

/// Certificates for `I` (two generators) and `J` (`n` generators).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoublingPair {
    pub instance: DoublingInstance,
    pub i: UlrichCertificate,
    pub j: UlrichCertificate,
}

pub fn doubling_ulrich_pair(inst: &DoublingInstance) -> Result<DoublingPair, ConstructionError> {
    let i = is_ulrich(&inst.ideal_i)?;
    let j = is_ulrich(&inst.ideal_j)?;
    for (cert, nu) in [(&i, 2), (&j, inst.n())] {
        if !cert.is_ulrich() || cert.nu != nu {
            return Err(ConstructionError::ConstructionFailed(Box::new(cert.clone())));
        }
    }
    Ok(DoublingPair {
        instance: inst.clone(),
        i,
        j,
    })
}

/// Odd elements `b` of `L` with `a_n + a_1 + 1 <= b <= max_b`.
pub fn admissible_b(base: &NumericalSemigroup, max_b: i64) -> Vec<i64> {
    let minimum = base.max_generator() + base.multiplicity() + 1;
    (minimum..=max_b)
        .filter(|b| b % 2 != 0 && base.contains(*b))
        .collect()
}
