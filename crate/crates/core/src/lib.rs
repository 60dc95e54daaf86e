//! Ulrich ideals of one-dimensional numerical semigroup rings `k[[H]]`.
//!
//! The crate decides whether a monomial ideal is Ulrich, searches for all of
//! them below a reduction-degree bound, and checks the structure of
//! `Ext^i(R/I, R)` for `i = 1, 2` by exact finite-length linear algebra.
//!
//! ```
//! use std::sync::Arc;
//! use ulrich::{enumerate_ulrich, NumericalSemigroup, RelativeIdeal};
//!
//! let h = Arc::new(NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap());
//! let found = enumerate_ulrich(&h, 30).unwrap();
//! assert_eq!(found.len(), 1);
//! assert_eq!(found[0].ideal, RelativeIdeal::maximal(&h));
//! ```

pub mod cli;
pub mod construct;
pub mod family;
pub mod ideal;
pub mod linalg;
pub mod module;
pub mod semigroup;
pub mod ulrich;
pub mod verify;

pub use construct::{doubled_semigroup, doubling_ulrich_pair, ConstructionError, DoublingInstance, DoublingPair};
pub use family::semigroups_with_max_frobenius;
pub use ideal::{IdealError, RelativeIdeal};
pub use module::{hom_module, hom_space, quotient_module, subquotient_module, FiniteLengthModule, ModuleError};
pub use semigroup::{NumericalSemigroup, SemigroupError};
pub use ulrich::{
    enumerate_ulrich, expected_core_monomial, is_ulrich, UlrichCertificate, UlrichError, Verdict,
};
pub use verify::{theorem_suite, verify_homological_profile, VerificationReport};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Ulrich(#[from] UlrichError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
