//! Ulrich test for monomial ideals, bounded exhaustive search and the
//! monomial part of the expected core.
//!
//! An `m`-primary monomial ideal `I = E` of `R = k[[H]]` is Ulrich when
//! `I² = QI` for the principal reduction `Q = (t^a)` and `I/I²` is free over
//! `R/I`. In monomial terms: `E + E = a + E` and `|E \ (E+E)| = ν(I)·|H \ E|`.
//!
//! The search enumerates co-ideals `G = H \ E` inside the Apéry set of `a`.
//! Stability forces `a = min(E)` (compare minima of `E + E` and `a + E`), and
//! `ℓ(I/QI) = ℓ(R/Q) = a` together with freeness gives `a = ν(I)·|G|`. With
//! `ν(I) >= 2` and `H ∩ [0, a) ⊆ G` this yields `a <= 2·genus(H)`, so the
//! search below a bound past `2·genus` is complete.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideal::{IdealError, IdealRecord, RelativeIdeal};
use crate::module::{subquotient_module, ModuleError};
use crate::semigroup::{NumericalSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UlrichError {
    #[error("ideal {0} is not proper and nonzero: its smallest generator must be positive")]
    NotProper(String),
    #[error("bound {bound} is below the multiplicity {multiplicity}")]
    BoundTooSmall { bound: i64, multiplicity: i64 },
    #[error("ideal {0} is not Ulrich")]
    NotUlrichInput(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NotUlrichReason {
    Parameter,
    NotStable,
    NotFree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Ulrich,
    NotUlrich(NotUlrichReason),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UlrichCertificate {
    pub ideal: RelativeIdeal,
    /// Degree `a` of the reduction `Q = (t^a)`.
    pub reduction_degree: i64,
    pub nu: usize,
    /// `ν(I) − 1`.
    pub t: usize,
    /// `ℓ(R/I)`.
    pub colength: usize,
    pub stability_ok: bool,
    pub freeness_ok: bool,
    pub is_parameter: bool,
    pub verdict: Verdict,
}

impl UlrichCertificate {
    pub fn is_ulrich(&self) -> bool {
        self.verdict == Verdict::Ulrich
    }

    pub fn ideal_record(&self) -> IdealRecord {
        self.ideal.record()
    }
}

/// Runs the Ulrich test on an integral ideal with positive generators.
pub fn is_ulrich(ideal: &RelativeIdeal) -> Result<UlrichCertificate, UlrichError> {
    if ideal.min() <= 0 {
        return Err(UlrichError::NotProper(ideal.to_string()));
    }
    let colength = ideal.colength()?;
    let nu = ideal.nu();
    let square = ideal.multiply(ideal)?;

    let stable_at = |a: i64| square == ideal.shift(a);
    let mut reduction_degree = ideal.min();
    let mut stability_ok = stable_at(reduction_degree);
    if !stability_ok {
        if let Some(&a) = ideal.generators()[1..].iter().find(|&&a| stable_at(a)) {
            reduction_degree = a;
            stability_ok = true;
        }
    }

    let conormal = subquotient_module(ideal, &square)?;
    let freeness_ok = conormal.is_free_over_quotient(colength, nu);
    let is_parameter = nu == 1;

    let verdict = if is_parameter {
        Verdict::NotUlrich(NotUlrichReason::Parameter)
    } else if !stability_ok {
        Verdict::NotUlrich(NotUlrichReason::NotStable)
    } else if !freeness_ok {
        Verdict::NotUlrich(NotUlrichReason::NotFree)
    } else {
        Verdict::Ulrich
    };

    Ok(UlrichCertificate {
        ideal: ideal.clone(),
        reduction_degree,
        nu,
        t: nu.saturating_sub(1),
        colength,
        stability_ok,
        freeness_ok,
        is_parameter,
        verdict,
    })
}

/// Default search bound `2F + 2e`.
pub fn default_bound(h: &NumericalSemigroup) -> i64 {
    2 * h.frobenius() + 2 * h.multiplicity()
}

/// Every non-parameter monomial Ulrich ideal whose reduction degree is at
/// most `bound`, sorted by generators.
pub fn enumerate_ulrich(
    h: &Arc<NumericalSemigroup>,
    bound: i64,
) -> Result<Vec<UlrichCertificate>, UlrichError> {
    if bound < h.multiplicity() {
        return Err(UlrichError::BoundTooSmall {
            bound,
            multiplicity: h.multiplicity(),
        });
    }
    let top = bound.min(2 * h.genus() as i64);
    let degrees: Vec<i64> = h.elements_in(1, top).collect();
    let per_degree: Vec<Vec<UlrichCertificate>> = degrees
        .par_iter()
        .map(|&a| ulrich_with_reduction_degree(h, a))
        .collect::<Result<_, _>>()?;
    let mut out: Vec<UlrichCertificate> = per_degree.into_iter().flatten().collect();
    out.sort_by(|x, y| x.ideal.generators().cmp(y.ideal.generators()));
    out.dedup_by(|x, y| x.ideal == y.ideal);
    Ok(out)
}

/// Principal ideals `(t^a)` for `a` in `H ∩ [1, bound]`; these are stable
/// and conormally free but excluded from the search as parameter ideals.
pub fn enumerate_parameter_ideals(
    h: &Arc<NumericalSemigroup>,
    bound: i64,
) -> Result<Vec<UlrichCertificate>, UlrichError> {
    h.elements_in(1, bound)
        .map(|a| is_ulrich(&RelativeIdeal::principal(h, a)))
        .collect()
}

/// Ulrich ideals `E` with `min(E) = a`.
fn ulrich_with_reduction_degree(
    h: &Arc<NumericalSemigroup>,
    a: i64,
) -> Result<Vec<UlrichCertificate>, UlrichError> {
    let apery = h.apery_set(a)?;
    let forced: Vec<i64> = apery.iter().copied().filter(|&z| z < a).collect();
    let optional: Vec<i64> = apery.iter().copied().filter(|&z| z > a).collect();
    let max_size = (a / 2) as usize;
    if forced.len() > max_size {
        return Ok(Vec::new());
    }

    let mut found = Vec::new();
    let mut co_ideal = forced;
    let mut search = CoIdealSearch {
        h,
        a,
        optional: &optional,
        max_size,
        found: &mut found,
    };
    search.descend(0, &mut co_ideal)?;
    Ok(found)
}

struct CoIdealSearch<'a> {
    h: &'a Arc<NumericalSemigroup>,
    a: i64,
    optional: &'a [i64],
    max_size: usize,
    found: &'a mut Vec<UlrichCertificate>,
}

impl CoIdealSearch<'_> {
    /// `co_ideal` is sorted and closed under taking `H`-predecessors among
    /// the elements decided so far.
    fn descend(&mut self, next: usize, co_ideal: &mut Vec<i64>) -> Result<(), UlrichError> {
        if next == self.optional.len() {
            return self.test_leaf(co_ideal);
        }
        self.descend(next + 1, co_ideal)?;
        let z = self.optional[next];
        if co_ideal.len() < self.max_size && self.predecessors_present(z, co_ideal) {
            co_ideal.push(z);
            self.descend(next + 1, co_ideal)?;
            co_ideal.pop();
        }
        Ok(())
    }

    fn predecessors_present(&self, z: i64, co_ideal: &[i64]) -> bool {
        self.h
            .generators()
            .iter()
            .map(|g| z - g)
            .filter(|&w| self.h.contains(w))
            .all(|w| co_ideal.binary_search(&w).is_ok())
    }

    fn test_leaf(&mut self, co_ideal: &[i64]) -> Result<(), UlrichError> {
        let size = co_ideal.len() as i64;
        if size == 0 || self.a % size != 0 || self.a / size < 2 {
            return Ok(());
        }
        let top = co_ideal.last().copied().unwrap_or(0) + self.h.max_generator() + 1;
        let members: Vec<i64> = self
            .h
            .elements_in(1, top.max(self.a))
            .filter(|z| co_ideal.binary_search(z).is_err())
            .collect();
        let ideal = RelativeIdeal::new(self.h, &members)?;
        if ideal.nu() as i64 != self.a / size {
            return Ok(());
        }
        let cert = is_ulrich(&ideal)?;
        if cert.is_ulrich() {
            self.found.push(cert);
        }
        Ok(())
    }
}

/// `Σ_{z ∈ K ∩ [0, W]} ((t^z) : K)`, the part of the expected core coming
/// from monomial elements of the canonical ideal.
pub fn expected_core_monomial(h: &Arc<NumericalSemigroup>) -> Result<RelativeIdeal, UlrichError> {
    let k = h.canonical_ideal();
    let mut core: Option<RelativeIdeal> = None;
    for z in (0..=h.window_span()).filter(|&z| k.contains(z)) {
        let term = RelativeIdeal::principal(h, z).colon(&k)?;
        core = Some(match core {
            None => term,
            Some(acc) => acc.sum(&term)?,
        });
    }
    Ok(core.expect("0 is in the canonical ideal"))
}
