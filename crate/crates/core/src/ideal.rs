//! Relative ideals of a numerical semigroup.
//!
//! A relative ideal is a set `E` of integers with `E + H ⊆ E` that is a finite
//! union of shifts `g + H`. Monomial ideals of `k[[H]]` are the relative ideals
//! inside `H`; the canonical ideal and fractional colons may reach outside it.
//! Values are kept in normal form (the unique minimal generating system), so
//! structural equality is set equality.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::semigroup::{join, NumericalSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("an ideal needs at least one generator")]
    Empty,
    #[error("ideals live over different semigroups: {0} and {1}")]
    AmbientMismatch(String, String),
    #[error("generator {0} is not in the semigroup, so the ideal is not integral")]
    NotIntegral(i64),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "IdealRecord", into = "IdealRecord")]
pub struct RelativeIdeal {
    ambient: Arc<NumericalSemigroup>,
    generators: Vec<i64>,
}

impl PartialEq for RelativeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.generators == other.generators
    }
}

impl Eq for RelativeIdeal {}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) over {}", join(&self.generators), self.ambient)
    }
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.generators))
    }
}

impl RelativeIdeal {
    /// Normalizes `gens` to the minimal generating system of `gens + H`.
    pub fn new(ambient: &Arc<NumericalSemigroup>, gens: &[i64]) -> Result<Self, IdealError> {
        if gens.is_empty() {
            return Err(IdealError::Empty);
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut kept: Vec<i64> = Vec::with_capacity(sorted.len());
        for g in sorted {
            if !kept.iter().any(|&k| ambient.contains(g - k)) {
                kept.push(g);
            }
        }
        Ok(Self {
            ambient: Arc::clone(ambient),
            generators: kept,
        })
    }

    pub fn principal(ambient: &Arc<NumericalSemigroup>, z: i64) -> Self {
        Self {
            ambient: Arc::clone(ambient),
            generators: vec![z],
        }
    }

    /// `H` itself, the unit ideal.
    pub fn unit(ambient: &Arc<NumericalSemigroup>) -> Self {
        Self::principal(ambient, 0)
    }

    /// `H \ {0}`.
    pub fn maximal(ambient: &Arc<NumericalSemigroup>) -> Self {
        Self {
            ambient: Arc::clone(ambient),
            generators: ambient.generators().to_vec(),
        }
    }

    /// Builds the ideal whose members in `[lo, hi]` are exactly `members`
    /// (sorted), with nothing below `lo` and everything above `hi`.
    /// `hi` must reach past the last minimal generator by `max(gens(H))`.
    pub(crate) fn from_members(ambient: &Arc<NumericalSemigroup>, members: &[i64], hi: i64) -> Self {
        let lo = members.first().copied().unwrap_or(hi + 1);
        let in_set = |x: i64| x > hi || (x >= lo && members.binary_search(&x).is_ok());
        let generators = members
            .iter()
            .copied()
            .filter(|&z| ambient.generators().iter().all(|&g| !in_set(z - g)))
            .collect::<Vec<_>>();
        let generators = if generators.is_empty() { vec![hi + 1] } else { generators };
        Self {
            ambient: Arc::clone(ambient),
            generators,
        }
    }

    pub fn ambient(&self) -> &Arc<NumericalSemigroup> {
        &self.ambient
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn min(&self) -> i64 {
        self.generators[0]
    }

    /// Minimal number of generators.
    pub fn nu(&self) -> usize {
        self.generators.len()
    }

    pub fn contains(&self, z: i64) -> bool {
        self.generators.iter().any(|&g| self.ambient.contains(z - g))
    }

    /// True when every generator lies in `H`.
    pub fn is_integral(&self) -> bool {
        self.generators.iter().all(|&g| self.ambient.contains(g))
    }

    pub fn is_unit(&self) -> bool {
        self.contains(0) && self.is_integral()
    }

    fn check_ambient(&self, other: &Self) -> Result<(), IdealError> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(IdealError::AmbientMismatch(
                self.ambient.to_string(),
                other.ambient.to_string(),
            ))
        }
    }

    /// `z + E`.
    pub fn shift(&self, z: i64) -> Self {
        Self {
            ambient: Arc::clone(&self.ambient),
            generators: self.generators.iter().map(|g| g + z).collect(),
        }
    }

    /// Product `E + F`, generated by pairwise sums of generators.
    pub fn multiply(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_ambient(other)?;
        let sums: Vec<i64> = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a + b))
            .collect();
        Self::new(&self.ambient, &sums)
    }

    /// Ideal sum, i.e. the union `E ∪ F`.
    pub fn sum(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_ambient(other)?;
        let all: Vec<i64> = self.generators.iter().chain(&other.generators).copied().collect();
        Self::new(&self.ambient, &all)
    }

    /// `E : F = {z : z + F ⊆ E}`.
    ///
    /// Only the generators of `F` need testing. Every `z` with
    /// `z + min(F) > min(E) + Frob(H)` belongs to the colon, so the window
    /// `[min(E) - min(F), min(E) - min(F) + span]` decides it.
    pub fn colon(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_ambient(other)?;
        let lo = self.min() - other.min();
        let hi = lo + self.ambient.window_span();
        let members: Vec<i64> = (lo..=hi)
            .filter(|&z| other.generators.iter().all(|&f| self.contains(z + f)))
            .collect();
        Ok(Self::from_members(&self.ambient, &members, hi))
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool, IdealError> {
        self.check_ambient(other)?;
        Ok(self.generators.iter().all(|&g| other.contains(g)))
    }

    /// Elements of `E \ F` in increasing order (finite since `F` is nonempty).
    pub fn difference(&self, other: &Self) -> Result<Vec<i64>, IdealError> {
        self.check_ambient(other)?;
        let hi = self.min().max(other.min()) + self.ambient.window_span();
        Ok((self.min()..=hi)
            .filter(|&z| self.contains(z) && !other.contains(z))
            .collect())
    }

    /// `ℓ(R/I) = |H \ E|` for an integral ideal.
    pub fn colength(&self) -> Result<usize, IdealError> {
        if let Some(&g) = self.generators.iter().find(|&&g| !self.ambient.contains(g)) {
            return Err(IdealError::NotIntegral(g));
        }
        let hi = self.min() + self.ambient.window_span();
        Ok(self
            .ambient
            .elements_in(0, hi)
            .filter(|&z| !self.contains(z))
            .count())
    }

    /// Elements of `H \ E`, the co-ideal of an integral ideal.
    pub fn complement(&self) -> Result<Vec<i64>, IdealError> {
        self.colength()?;
        let hi = self.min() + self.ambient.window_span();
        Ok(self
            .ambient
            .elements_in(0, hi)
            .filter(|&z| !self.contains(z))
            .collect())
    }

    pub fn record(&self) -> IdealRecord {
        IdealRecord {
            ambient: self.ambient.generators().to_vec(),
            generators: self.generators.clone(),
        }
    }
}

/// JSON form: `{"ambient":[...], "generators":[...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub ambient: Vec<i64>,
    pub generators: Vec<i64>,
}

impl TryFrom<IdealRecord> for RelativeIdeal {
    type Error = IdealError;

    fn try_from(rec: IdealRecord) -> Result<Self, Self::Error> {
        let h = Arc::new(NumericalSemigroup::from_generators(&rec.ambient)?);
        RelativeIdeal::new(&h, &rec.generators)
    }
}

impl From<RelativeIdeal> for IdealRecord {
    fn from(e: RelativeIdeal) -> Self {
        e.record()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(g).unwrap())
    }

    fn ideal(h: &Arc<NumericalSemigroup>, g: &[i64]) -> RelativeIdeal {
        RelativeIdeal::new(h, g).unwrap()
    }

    #[test]
    fn normalizes_generators() {
        let h45 = sg(&[4, 5]);
        assert_eq!(ideal(&h45, &[4, 8, 10]).generators(), &[4, 10]);
        let h = sg(&[3, 4, 5]);
        assert_eq!(ideal(&h, &[3, 4, 5]), RelativeIdeal::maximal(&h));
        let h6 = sg(&[6, 8, 9, 10]);
        assert_eq!(ideal(&h6, &[6, 9, 15]).generators(), &[6, 9]);
        assert_eq!(RelativeIdeal::new(&h6, &[]).unwrap_err(), IdealError::Empty);
    }

    #[test]
    fn products() {
        let h = sg(&[3, 4, 5]);
        let m = RelativeIdeal::maximal(&h);
        assert_eq!(m.multiply(&m).unwrap().generators(), &[6, 7, 8]);
        let h45 = sg(&[4, 5]);
        let i = ideal(&h45, &[4, 10]);
        assert_eq!(i.multiply(&i).unwrap().generators(), &[8, 14]);
        assert_eq!(i.multiply(&RelativeIdeal::unit(&h45)).unwrap(), i);
        assert!(matches!(
            i.multiply(&m),
            Err(IdealError::AmbientMismatch(_, _))
        ));
    }

    #[test]
    fn colons() {
        let h = sg(&[3, 4, 5]);
        let m = RelativeIdeal::maximal(&h);
        let q = RelativeIdeal::principal(&h, 3);
        assert_eq!(q.colon(&m).unwrap(), m);
        assert!(m.colon(&m).unwrap().contains(0));
        let k = h.canonical_ideal();
        assert_eq!(RelativeIdeal::unit(&h).colon(&k).unwrap(), m);
        // 6 is outside H but 6 + 4 and 6 + 10 are inside
        let h45 = sg(&[4, 5]);
        let e = ideal(&h45, &[4, 10]);
        assert_eq!(
            RelativeIdeal::unit(&h45).colon(&e).unwrap().generators(),
            &[0, 6]
        );
    }

    #[test]
    fn colengths() {
        let h = sg(&[3, 4, 5]);
        assert_eq!(RelativeIdeal::maximal(&h).colength().unwrap(), 1);
        let h45 = sg(&[4, 5]);
        assert_eq!(ideal(&h45, &[4, 10]).colength().unwrap(), 2);
        assert_eq!(ideal(&h45, &[4, 10]).complement().unwrap(), vec![0, 5]);
        assert_eq!(ideal(&h45, &[8, 10]).colength().unwrap(), 4);
        assert_eq!(ideal(&h45, &[8, 10]).complement().unwrap(), vec![0, 4, 5, 9]);
        assert_eq!(RelativeIdeal::unit(&h45).colength().unwrap(), 0);
        assert_eq!(
            ideal(&h45, &[3, 4]).colength().unwrap_err(),
            IdealError::NotIntegral(3)
        );
    }

    #[test]
    fn memberships() {
        let h6 = sg(&[6, 8, 9, 10]);
        let e = ideal(&h6, &[6, 9]);
        assert!(!e.contains(13));
        assert!(e.contains(e.min()));
        let h45 = sg(&[4, 5]);
        assert!(ideal(&h45, &[4, 10]).contains(15));
    }

    #[test]
    fn difference_is_finite_set() {
        let h6 = sg(&[6, 8, 9, 10]);
        let e = ideal(&h6, &[6, 9]);
        let e2 = e.multiply(&e).unwrap();
        assert_eq!(e.difference(&e2).unwrap(), vec![6, 9, 14, 16, 17, 19]);
    }

    #[test]
    fn json_shape() {
        let h45 = sg(&[4, 5]);
        let e = ideal(&h45, &[4, 10]);
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(json, r#"{"ambient":[4,5],"generators":[4,10]}"#);
        let back: RelativeIdeal = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);
    }
}
