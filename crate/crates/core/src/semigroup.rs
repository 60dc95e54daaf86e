//! Numerical semigroups and the invariants of their semigroup rings.
//!
//! A [`NumericalSemigroup`] is a cofinite submonoid of the non-negative
//! integers. Everything the rest of the crate needs from `k[[H]]` (type,
//! symmetry, the canonical ideal, almost symmetry) is computed here from the
//! Apéry set of the multiplicity.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideal::RelativeIdeal;

/// Environment variable scaling every verification window.
pub const WINDOW_FACTOR_ENV: &str = "ULRICH_WINDOW_FACTOR";

pub const DEFAULT_WINDOW_FACTOR: u32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("no generators given")]
    Empty,
    #[error("generators must be positive, got {0}")]
    NonPositive(i64),
    #[error("generators {gens:?} are not coprime (gcd {gcd})")]
    NotCoprime { gens: Vec<i64>, gcd: i64 },
    #[error("{0} is not an element of the semigroup")]
    NotMember(i64),
    #[error("the semigroup is all of N and has no gaps")]
    FullSemigroup,
    #[error("almost-symmetry criteria disagree on {gens:?}: M+K in M is {ideal_test}, PF pairing is {pf_test}")]
    CriteriaDisagree {
        gens: Vec<i64>,
        ideal_test: bool,
        pf_test: bool,
    },
    #[error("inconsistent semigroup record: {0}")]
    Inconsistent(String),
    #[error("cannot parse generator list {0:?}")]
    Parse(String),
}

/// Reads the window factor from the environment, falling back to the default.
pub fn window_factor_from_env() -> u32 {
    std::env::var(WINDOW_FACTOR_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<u32>().ok())
        .filter(|&f| f >= 1)
        .unwrap_or(DEFAULT_WINDOW_FACTOR)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "SemigroupRecord", into = "SemigroupRecord")]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    frobenius: i64,
    gaps: Vec<i64>,
    /// `membership[z]` for `z` in `[0, F+1]`.
    membership: Vec<bool>,
    /// Apéry set of the multiplicity, indexed by residue.
    apery: Vec<i64>,
    window_factor: u32,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", join(&self.generators))
    }
}

pub(crate) fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses `"3,4,5"` into a list of integers.
pub fn parse_list(text: &str) -> Result<Vec<i64>, SemigroupError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|_| SemigroupError::Parse(text.to_string())))
        .collect()
}

impl std::str::FromStr for NumericalSemigroup {
    type Err = SemigroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::from_generators(&parse_list(s)?)
    }
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, reducing to the minimal
    /// generating system. The window factor is read from the environment.
    pub fn from_generators(gens: &[i64]) -> Result<Self, SemigroupError> {
        Self::with_window_factor(gens, window_factor_from_env())
    }

    pub fn with_window_factor(gens: &[i64], window_factor: u32) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::Empty);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(SemigroupError::NonPositive(bad));
        }
        let gcd = gens.iter().fold(0i64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(SemigroupError::NotCoprime {
                gens: gens.to_vec(),
                gcd,
            });
        }

        let generators = minimal_generating_system(gens);
        let apery = apery_by_shortest_paths(&generators);
        let m = generators[0];
        let frobenius = apery.iter().copied().max().unwrap_or(0) - m;

        let top = (frobenius + 1).max(0) as usize;
        let membership: Vec<bool> = (0..=top as i64)
            .map(|z| z >= apery[z.rem_euclid(m) as usize])
            .collect();
        let gaps = (1..=frobenius).filter(|&z| !membership[z as usize]).collect();

        Ok(Self {
            generators,
            frobenius,
            gaps,
            membership,
            apery,
            window_factor: window_factor.max(1),
        })
    }

    /// The same semigroup with a different verification-window factor.
    pub fn rescaled(&self, window_factor: u32) -> Self {
        Self {
            window_factor: window_factor.max(1),
            ..self.clone()
        }
    }

    pub fn into_shared(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Frobenius number; `-1` for the full semigroup.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn max_generator(&self) -> i64 {
        *self.generators.last().expect("nonempty")
    }

    pub fn is_full(&self) -> bool {
        self.frobenius < 0
    }

    pub fn window_factor(&self) -> u32 {
        self.window_factor
    }

    /// Width of the verification window: `factor * (F + max(gens) + 1)`.
    ///
    /// With the default factor 2 this is `2F + 2 max(gens) + 2`. Any set built
    /// from finitely many shifts of `H` is decided by an interval of width
    /// `F + max(gens) + 1` past its smallest generator, so every factor `>= 1`
    /// yields the same answers.
    pub fn window_span(&self) -> i64 {
        self.window_factor as i64 * (self.frobenius + self.max_generator() + 1)
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            false
        } else if z > self.frobenius {
            true
        } else {
            self.membership[z as usize]
        }
    }

    /// Elements of `H` in `[lo, hi]`.
    pub fn elements_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo.max(0)..=hi).filter(move |&z| self.contains(z))
    }

    /// The minimal element of `H` in each residue class mod `n`, sorted.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>, SemigroupError> {
        if n <= 0 || !self.contains(n) {
            return Err(SemigroupError::NotMember(n));
        }
        if n == self.multiplicity() {
            let mut out = self.apery.clone();
            out.sort_unstable();
            return Ok(out);
        }
        let mut out: Vec<i64> = (0..n)
            .map(|r| {
                let mut z = r;
                while !self.contains(z) {
                    z += n;
                }
                z
            })
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    pub fn pseudo_frobenius(&self) -> Result<Vec<i64>, SemigroupError> {
        if self.is_full() {
            return Err(SemigroupError::FullSemigroup);
        }
        Ok(self
            .gaps
            .iter()
            .copied()
            .filter(|&f| self.generators.iter().all(|&g| self.contains(f + g)))
            .collect())
    }

    /// Cohen-Macaulay type of `k[[H]]`, i.e. `|PF(H)|`.
    pub fn cm_type(&self) -> Result<usize, SemigroupError> {
        self.pseudo_frobenius().map(|pf| pf.len())
    }

    /// Symmetry by the pairing `z in H <=> F - z not in H`, cross-checked
    /// against `type(H) = 1`.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        let pairing = (0..=f.max(0)).all(|z| self.contains(z) != self.contains(f - z));
        if let Ok(t) = self.cm_type() {
            assert_eq!(
                pairing,
                t == 1,
                "symmetry tests disagree on {self}: pairing {pairing}, type {t}"
            );
        }
        pairing
    }

    /// `K = {F - z : z not in H}`, normalized so that `0 in K` and `K` lies in `N`.
    pub fn canonical_ideal(self: &Arc<Self>) -> RelativeIdeal {
        let f = self.frobenius;
        let top = f + self.max_generator() + 1;
        let members: Vec<i64> = (0..=top).filter(|&z| !self.contains(f - z)).collect();
        RelativeIdeal::from_members(self, &members, top)
    }

    /// `M + K` inside `M`, cross-checked with the pairing criterion on
    /// `PF(H)`: `f_i + f_{t-i} = F` for `1 <= i <= t-1`.
    pub fn is_almost_symmetric(self: &Arc<Self>) -> Result<bool, SemigroupError> {
        if self.is_full() {
            return Ok(true);
        }
        let ideal_test = {
            // M + K = M + gens(K); past F every sum is already in M.
            let k = self.canonical_ideal();
            self.elements_in(1, self.window_span())
                .all(|m| k.generators().iter().all(|&w| self.contains(m + w)))
        };
        let pf = self.pseudo_frobenius()?;
        let t = pf.len();
        let pf_test = (1..t).all(|i| pf[i - 1] + pf[t - i - 1] == self.frobenius);
        if ideal_test != pf_test {
            return Err(SemigroupError::CriteriaDisagree {
                gens: self.generators.clone(),
                ideal_test,
                pf_test,
            });
        }
        Ok(ideal_test)
    }

    /// Invariants report in the JSON layout used by the CLI.
    pub fn record(self: &Arc<Self>) -> Result<SemigroupRecord, SemigroupError> {
        Ok(SemigroupRecord {
            generators: self.generators.clone(),
            frobenius: self.frobenius,
            gaps: self.gaps.clone(),
            pf: self.pseudo_frobenius().ok(),
            cm_type: self.cm_type().ok(),
            symmetric: self.is_symmetric(),
            almost_symmetric: self.is_almost_symmetric()?,
        })
    }
}

/// Drops every generator that is a combination of smaller ones.
fn minimal_generating_system(gens: &[i64]) -> Vec<i64> {
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let max = *sorted.last().expect("nonempty") as usize;
    let mut reachable = vec![false; max + 1];
    reachable[0] = true;
    let mut kept = Vec::new();
    for &g in &sorted {
        if reachable[g as usize] {
            continue;
        }
        kept.push(g);
        let g = g as usize;
        for z in g..=max {
            if reachable[z - g] {
                reachable[z] = true;
            }
        }
    }
    kept
}

/// Apéry set of the smallest generator as shortest paths over residues.
fn apery_by_shortest_paths(gens: &[i64]) -> Vec<i64> {
    let m = gens[0];
    let mut dist = vec![i64::MAX; m as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in &gens[1..] {
            let nd = d + g;
            let nr = (nd % m) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

/// JSON form of a semigroup together with its invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRecord {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub gaps: Vec<i64>,
    pub pf: Option<Vec<i64>>,
    #[serde(rename = "type")]
    pub cm_type: Option<usize>,
    pub symmetric: bool,
    pub almost_symmetric: bool,
}

impl TryFrom<SemigroupRecord> for NumericalSemigroup {
    type Error = SemigroupError;

    fn try_from(rec: SemigroupRecord) -> Result<Self, Self::Error> {
        let h = Arc::new(NumericalSemigroup::from_generators(&rec.generators)?);
        let fresh = h.record()?;
        if fresh != rec {
            return Err(SemigroupError::Inconsistent(format!(
                "record for {h} does not match recomputed invariants"
            )));
        }
        Ok(Arc::try_unwrap(h).unwrap_or_else(|a| (*a).clone()))
    }
}

impl From<NumericalSemigroup> for SemigroupRecord {
    fn from(h: NumericalSemigroup) -> Self {
        Arc::new(h)
            .record()
            .expect("almost-symmetry criteria disagree")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(g).unwrap())
    }

    /// Brute-force membership: sieve all sums up to `limit`.
    fn sieve(gens: &[i64], limit: i64) -> Vec<bool> {
        let mut r = vec![false; limit as usize + 1];
        r[0] = true;
        for z in 1..=limit {
            r[z as usize] = gens.iter().any(|&g| z >= g && r[(z - g) as usize]);
        }
        r
    }

    #[test]
    fn builds_345() {
        let h = sg(&[3, 4, 5]);
        assert_eq!(h.gaps(), &[1, 2]);
        assert_eq!(h.frobenius(), 2);
        let limit = 2 * 5 * 5;
        let s = sieve(&[3, 4, 5], limit);
        for z in 0..=limit {
            assert_eq!(h.contains(z), s[z as usize], "z = {z}");
        }
    }

    #[test]
    fn full_semigroup_and_errors() {
        let n = sg(&[1]);
        assert_eq!(n.frobenius(), -1);
        assert!(n.gaps().is_empty());
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]).unwrap_err(),
            SemigroupError::NotCoprime {
                gens: vec![4, 6],
                gcd: 2
            }
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[]).unwrap_err(),
            SemigroupError::Empty
        );
        assert_eq!(n.pseudo_frobenius().unwrap_err(), SemigroupError::FullSemigroup);
    }

    #[test]
    fn minimal_generators_are_recomputed() {
        assert_eq!(sg(&[6, 4, 8, 9, 5]).generators(), &[4, 5, 6]);
        assert_eq!(sg(&[3, 6, 4, 5, 7]).generators(), &[3, 4, 5]);
    }

    #[test]
    fn membership() {
        let h = sg(&[3, 4, 5]);
        assert!(!h.contains(2));
        assert!(h.contains(0));
        assert!(!h.contains(-3));
        assert!(!sg(&[4, 5]).contains(11));
        assert!(sg(&[4, 5]).contains(12));
    }

    #[test]
    fn apery_sets() {
        assert_eq!(sg(&[3, 4, 5]).apery_set(3).unwrap(), vec![0, 4, 5]);
        assert_eq!(sg(&[2, 3]).apery_set(2).unwrap(), vec![0, 3]);
        assert_eq!(sg(&[1]).apery_set(1).unwrap(), vec![0]);
        assert_eq!(
            sg(&[3, 4, 5]).apery_set(2).unwrap_err(),
            SemigroupError::NotMember(2)
        );
        assert_eq!(sg(&[4, 5]).apery_set(5).unwrap(), vec![0, 4, 8, 12, 16]);
    }

    #[test]
    fn pseudo_frobenius_numbers() {
        assert_eq!(sg(&[3, 4, 5]).pseudo_frobenius().unwrap(), vec![1, 2]);
        assert_eq!(sg(&[4, 5]).pseudo_frobenius().unwrap(), vec![11]);
        assert_eq!(sg(&[6, 8, 9, 10]).pseudo_frobenius().unwrap(), vec![11, 13]);
    }

    #[test]
    fn symmetry() {
        assert!(sg(&[2, 3]).is_symmetric());
        assert!(!sg(&[3, 4, 5]).is_symmetric());
        assert!(sg(&[4, 5]).is_symmetric());
        assert!(sg(&[1]).is_symmetric());
    }

    #[test]
    fn canonical_ideals() {
        assert_eq!(sg(&[3, 4, 5]).canonical_ideal().generators(), &[0, 1]);
        assert_eq!(sg(&[2, 3]).canonical_ideal().generators(), &[0]);
        assert_eq!(sg(&[6, 8, 9, 10]).canonical_ideal().generators(), &[0, 2]);
    }

    #[test]
    fn almost_symmetry() {
        assert!(sg(&[3, 4, 5]).is_almost_symmetric().unwrap());
        assert!(sg(&[4, 5]).is_almost_symmetric().unwrap());
        assert!(!sg(&[6, 8, 9, 10]).is_almost_symmetric().unwrap());
        assert!(sg(&[4, 5, 7]).is_almost_symmetric().unwrap());
    }

    #[test]
    fn parses_lists() {
        let h: NumericalSemigroup = "3, 4,5".parse().unwrap();
        assert_eq!(h.generators(), &[3, 4, 5]);
        assert!(matches!(
            "3,x".parse::<NumericalSemigroup>(),
            Err(SemigroupError::Parse(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let h = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(
            json,
            r#"{"generators":[3,4,5],"frobenius":2,"gaps":[1,2],"pf":[1,2],"type":2,"symmetric":false,"almost_symmetric":true}"#
        );
        let back: NumericalSemigroup = serde_json::from_str(&json).unwrap();
        assert_eq!(back, h);
        let tampered = json.replace("\"type\":2", "\"type\":3");
        assert!(serde_json::from_str::<NumericalSemigroup>(&tampered).is_err());
    }
}
