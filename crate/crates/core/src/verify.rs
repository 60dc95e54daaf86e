//! Verification reports: the homological profile of a single Ulrich ideal
//! and the per-semigroup theorem suite.
//!
//! For an Ulrich ideal `I` with reduction `Q = (t^a)` and `t = ν(I) − 1` the
//! profile assembles the exact sequence
//!
//! ```text
//! 0 -> (Q:I)/Q -> R/Q -> Hom(I/Q, R/Q) -> Ext²(R/I, R) -> 0
//! ```
//!
//! explicitly: the middle map sends `r` to multiplication by `r` restricted to
//! `I/Q`, and `Ext²` is realized as its cokernel. `Ext¹(R/I, R) ≅ (Q:I)/Q`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ideal::RelativeIdeal;
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::module::{hom_space, quotient_module, subquotient_module};
use crate::semigroup::NumericalSemigroup;
use crate::ulrich::{enumerate_ulrich, expected_core_monomial, UlrichCertificate, UlrichError};

use num_traits::One;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremTag {
    /// Ext ranks, the colon identity and the type identity for one ideal.
    HomologicalProfile,
    /// All per-semigroup statements at once.
    Suite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    fn new(name: &str, ok: bool, detail: String) -> Self {
        Self {
            name: name.to_string(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail,
        }
    }

    fn skipped(name: &str, detail: String) -> Self {
        Self {
            name: name.to_string(),
            status: CheckStatus::Skipped,
            detail,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

/// Every integer measured while checking one Ulrich ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileMeasurements {
    pub reduction_degree: i64,
    pub nu: usize,
    pub t: usize,
    /// `ℓ(R/I)`.
    pub length_r_mod_i: usize,
    /// `ℓ(R/Q)`.
    pub length_r_mod_q: usize,
    /// `ℓ(I/Q)`.
    pub length_i_mod_q: usize,
    /// `ℓ((Q:I)/Q)`, the length of `Ext¹(R/I, R)`.
    pub length_colon_mod_q: usize,
    pub colon_ok: bool,
    /// `ν((Q:I)/Q)`.
    pub ext1_rank: usize,
    pub ext1_free: bool,
    pub i_mod_q_free: bool,
    pub hom_dim: usize,
    /// Kernel dimension of `R/Q -> Hom(I/Q, R/Q)`.
    pub map_kernel_dim: usize,
    /// `hom_dim − ℓ(R/Q) + ℓ((Q:I)/Q)`.
    pub ext2_length: i64,
    /// `ν` of the cokernel module.
    pub ext2_rank: usize,
    pub ext2_dim: usize,
    pub ext2_free: bool,
    pub r_r: usize,
    pub r_ri: usize,
    pub r_iq: usize,
    pub type_identity_ok: bool,
}

/// Per-semigroup data gathered by the theorem suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteMeasurements {
    pub frobenius: i64,
    pub multiplicity: i64,
    pub embedding_dimension: usize,
    pub cm_type: usize,
    pub symmetric: bool,
    pub almost_symmetric: bool,
    pub ulrich_ideals: Vec<Vec<i64>>,
    pub expected_core: Vec<i64>,
    pub profiles: Vec<VerificationReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: TheoremTag,
    pub semigroup: Vec<i64>,
    pub ideal: Option<Vec<i64>>,
    pub bound: Option<i64>,
    pub profile: Option<ProfileMeasurements>,
    pub suite: Option<Box<SuiteMeasurements>>,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub trace: Vec<String>,
}

impl VerificationReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Ext ranks at degrees 1 and 2, the colon identity `Q:I = I` and the type
/// identity `t·r(R/I) = r(I/Q) = r(R)` for one Ulrich ideal.
pub fn verify_homological_profile(cert: &UlrichCertificate) -> Result<VerificationReport, UlrichError> {
    if !cert.is_ulrich() {
        return Err(UlrichError::NotUlrichInput(cert.ideal.to_string()));
    }
    let ideal = &cert.ideal;
    let h = ideal.ambient();
    let a = cert.reduction_degree;
    let t = cert.t;
    let unit = RelativeIdeal::unit(h);
    let q = RelativeIdeal::principal(h, a);
    let mut trace = Vec::new();

    let r_mod_q = quotient_module(&unit, a)?;
    let i_mod_q = quotient_module(ideal, a)?;
    let r_mod_i = subquotient_module(&unit, ideal)?;
    let colon = q.colon(ideal)?;
    let colon_mod_q = quotient_module(&colon, a)?;
    let len_ri = r_mod_i.dimension();
    trace.push(format!(
        "R/Q basis {:?}, I/Q basis {:?}, Q:I = {}",
        r_mod_q.basis_labels().unwrap_or_default(),
        i_mod_q.basis_labels().unwrap_or_default(),
        colon
    ));

    let hom = hom_space(&i_mod_q, &r_mod_q)?;
    let hom_dim = hom.dimension();

    // r in R/Q  |->  (y |-> r·y) : I/Q -> R/Q
    let source = i_mod_q.basis_labels().unwrap_or_default();
    let target = r_mod_q.basis_labels().unwrap_or_default();
    let mut image = Vec::with_capacity(target.len());
    for &z in target {
        let mut phi = Matrix::zeros(target.len(), source.len());
        for (c, &y) in source.iter().enumerate() {
            if let Ok(r) = target.binary_search(&(y + z)) {
                phi[(r, c)] = Scalar::one();
            }
        }
        image.push(
            hom.coordinates(&phi)
                .expect("multiplication maps are homomorphisms"),
        );
    }
    let image_rank = Subspace::spanned_by(&image, hom_dim).dimension();
    let map_kernel_dim = r_mod_q.dimension() - image_rank;
    let ext2 = hom.module().quotient_by(&image)?;
    trace.push(format!(
        "Hom(I/Q, R/Q) has dimension {hom_dim}; image of R/Q has rank {image_rank}"
    ));

    let r_r = h.cm_type()?;
    let r_ri = r_mod_i.socle_dimension();
    let r_iq = i_mod_q.socle_dimension();
    let ext2_rank_expected = t * t - 1;

    let m = ProfileMeasurements {
        reduction_degree: a,
        nu: cert.nu,
        t,
        length_r_mod_i: len_ri,
        length_r_mod_q: r_mod_q.dimension(),
        length_i_mod_q: i_mod_q.dimension(),
        length_colon_mod_q: colon_mod_q.dimension(),
        colon_ok: colon == *ideal,
        ext1_rank: colon_mod_q.minimal_generator_count(),
        ext1_free: colon_mod_q.is_free_over_quotient(len_ri, t),
        i_mod_q_free: i_mod_q.is_free_over_quotient(len_ri, t),
        hom_dim,
        map_kernel_dim,
        ext2_length: hom_dim as i64 - r_mod_q.dimension() as i64 + colon_mod_q.dimension() as i64,
        ext2_rank: ext2.minimal_generator_count(),
        ext2_dim: ext2.dimension(),
        ext2_free: ext2.is_free_over_quotient(len_ri, ext2_rank_expected),
        r_r,
        r_ri,
        r_iq,
        type_identity_ok: r_r == t * r_ri && r_iq == r_r,
    };

    let checks = vec![
        Check::new("colon", m.colon_ok, format!("Q:I = {colon}, I = {ideal}")),
        Check::new(
            "ext1",
            m.ext1_free && m.i_mod_q_free && m.length_colon_mod_q == t * len_ri,
            format!(
                "ℓ((Q:I)/Q) = {} vs t·ℓ(R/I) = {}, ν = {}",
                m.length_colon_mod_q,
                t * len_ri,
                m.ext1_rank
            ),
        ),
        Check::new(
            "hom",
            hom_dim == t * t * len_ri,
            format!("dim Hom = {hom_dim} vs t²·ℓ(R/I) = {}", t * t * len_ri),
        ),
        Check::new(
            "ext2",
            m.ext2_length == (ext2_rank_expected * len_ri) as i64
                && m.ext2_free
                && m.map_kernel_dim == m.length_colon_mod_q,
            format!(
                "ℓ(Ext²) = {} vs (t²−1)·ℓ(R/I) = {}; cokernel dim {} ν {}; kernel {}",
                m.ext2_length,
                ext2_rank_expected * len_ri,
                m.ext2_dim,
                m.ext2_rank,
                m.map_kernel_dim
            ),
        ),
        Check::new(
            "lengths",
            m.length_r_mod_q == (t + 1) * len_ri && m.length_r_mod_q as i64 == a,
            format!(
                "ℓ(R/Q) = {} vs (t+1)·ℓ(R/I) = {} and a = {a}",
                m.length_r_mod_q,
                (t + 1) * len_ri
            ),
        ),
        Check::new(
            "type_identity",
            m.type_identity_ok,
            format!("r(R) = {r_r}, t·r(R/I) = {}, r(I/Q) = {r_iq}", t * r_ri),
        ),
    ];
    let pass = checks.iter().all(Check::passed);
    Ok(VerificationReport {
        theorem: TheoremTag::HomologicalProfile,
        semigroup: h.generators().to_vec(),
        ideal: Some(ideal.generators().to_vec()),
        bound: None,
        profile: Some(m),
        suite: None,
        checks,
        pass,
        trace,
    })
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Runs every per-semigroup statement. `bound` defaults to `2F + 2e` per
/// semigroup. A failing statement yields `pass = false`, not an error.
pub fn theorem_suite(
    family: &[Arc<NumericalSemigroup>],
    bound: Option<i64>,
) -> Result<Vec<VerificationReport>, UlrichError> {
    family
        .par_iter()
        .map(|h| suite_for(h, bound.unwrap_or_else(|| crate::ulrich::default_bound(h))))
        .collect()
}

fn suite_for(h: &Arc<NumericalSemigroup>, bound: i64) -> Result<VerificationReport, UlrichError> {
    let bound = bound.max(h.multiplicity());
    let symmetric = h.is_symmetric();
    let almost_symmetric = h.is_almost_symmetric()?;
    let cm_type = h.cm_type()?;
    let found = enumerate_ulrich(h, bound)?;
    let core = expected_core_monomial(h)?;
    let maximal = RelativeIdeal::maximal(h);
    let target_case = almost_symmetric && !symmetric;
    let mut checks = Vec::new();
    let mut trace = vec![format!(
        "{h}: F = {}, type {cm_type}, symmetric {symmetric}, almost symmetric {almost_symmetric}, bound {bound}",
        h.frobenius()
    )];

    let ideals: Vec<Vec<i64>> = found.iter().map(|c| c.ideal.generators().to_vec()).collect();
    trace.push(format!("Ulrich ideals: {ideals:?}"));

    if target_case {
        let only_maximal = found.iter().all(|c| c.ideal == maximal);
        checks.push(Check::new(
            "only_maximal_ideal",
            only_maximal,
            format!("found {ideals:?}"),
        ));
        // m is Ulrich exactly when H has minimal multiplicity.
        let minimal_multiplicity = h.embedding_dimension() as i64 == h.multiplicity();
        let expected: Vec<Vec<i64>> = if minimal_multiplicity {
            vec![maximal.generators().to_vec()]
        } else {
            Vec::new()
        };
        checks.push(Check::new(
            "maximal_ideal_exact",
            ideals == expected,
            format!("expected {expected:?} (v = {}, e = {})", h.embedding_dimension(), h.multiplicity()),
        ));
        checks.push(Check::new(
            "nu_at_least_three",
            found.iter().all(|c| c.nu >= 3),
            format!("ν values {:?}", found.iter().map(|c| c.nu).collect::<Vec<_>>()),
        ));
    } else {
        let why = if symmetric { "symmetric" } else { "not almost symmetric" };
        checks.push(Check::skipped("only_maximal_ideal", why.to_string()));
        checks.push(Check::skipped("maximal_ideal_exact", why.to_string()));
        checks.push(Check::skipped("nu_at_least_three", why.to_string()));
    }

    if target_case && is_prime(cm_type) {
        let mut ok = true;
        let mut details = Vec::new();
        for c in &found {
            let socle = subquotient_module(&RelativeIdeal::unit(h), &c.ideal)?.socle_dimension();
            ok &= socle == 1 && c.nu == cm_type + 1;
            details.push(format!("{}: r(R/I) = {socle}, ν = {}", c.ideal, c.nu));
        }
        checks.push(Check::new("prime_type_gorenstein_quotient", ok, details.join("; ")));
    } else {
        checks.push(Check::skipped(
            "prime_type_gorenstein_quotient",
            format!("type {cm_type}, almost symmetric non-symmetric: {target_case}"),
        ));
    }

    let mut contained = Vec::new();
    for c in &found {
        contained.push(core.is_subset(&c.ideal)?);
    }
    let containment = format!("core {core}; contained in each: {contained:?}");
    if target_case {
        checks.push(Check::new(
            "expected_core_contained",
            contained.iter().all(|&b| b),
            containment,
        ));
    } else {
        checks.push(Check::skipped("expected_core_contained", containment));
    }

    let mut profiles = Vec::with_capacity(found.len());
    for c in &found {
        profiles.push(verify_homological_profile(c)?);
    }
    let failing: Vec<String> = profiles
        .iter()
        .filter(|p| !p.pass)
        .map(|p| format!("{:?}", p.ideal.as_deref().unwrap_or_default()))
        .collect();
    checks.push(Check::new(
        "homological_profiles",
        failing.is_empty(),
        format!("{} profiles, failing: {failing:?}", profiles.len()),
    ));

    let pass = checks.iter().all(Check::passed);
    Ok(VerificationReport {
        theorem: TheoremTag::Suite,
        semigroup: h.generators().to_vec(),
        ideal: None,
        bound: Some(bound),
        profile: None,
        suite: Some(Box::new(SuiteMeasurements {
            frobenius: h.frobenius(),
            multiplicity: h.multiplicity(),
            embedding_dimension: h.embedding_dimension(),
            cm_type,
            symmetric,
            almost_symmetric,
            ulrich_ideals: ideals,
            expected_core: core.generators().to_vec(),
            profiles,
        })),
        checks,
        pass,
        trace,
    })
}
