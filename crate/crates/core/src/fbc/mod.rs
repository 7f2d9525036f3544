//! Free-by-cyclic groups `F_m ⋊_φ ⟨s⟩` with `s x s⁻¹ = φ(x)`.
//!
//! Elements are normalised to `s^k · u` with `u` a reduced fiber word.
//! Membership in a (secret) fiber is decided by a homomorphism to Z, and
//! fiber elements are rewritten into fiber generators by repeatedly pinching
//! innermost `s x s⁻¹` / `s⁻¹ x s` pairs.

mod alpha;
mod automorphism;
mod group;
mod json;
mod splitting;

pub use alpha::{AlphaSpec, AlphaStep, GroupAutomorphism};
pub use automorphism::Automorphism;
pub use group::{FbcGroup, FbcNormalForm, Fiber, Pinch};
pub use json::{DescriptorFile, PresentationFile};
pub use splitting::{lemma41_rewrite, make_secret_splitting, membership_test, Rewrite, SplittingDescriptor};

use thiserror::Error;

use crate::words::WordError;

/// Default cap on fiber word length during normalization.
pub const DEFAULT_FIBER_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FbcError {
    #[error("images do not define an automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("automorphism spec is incompatible with the group: {0}")]
    IncompatibleSpec(String),
    #[error("stable-letter exponent sum is {0}, not 0")]
    NonzeroExponentSum(i64),
    #[error("word is not in the subgroup")]
    NotInSubgroup,
    #[error("fiber word exceeded {0} letters")]
    FiberCapExceeded(usize),
    #[error("malformed descriptor: {0}")]
    Descriptor(String),
    #[error(transparent)]
    Word(#[from] WordError),
}
