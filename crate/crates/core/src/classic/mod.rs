//! Classic distorted platforms with exact normal forms.
//!
//! * BS(1,2) = ⟨a, b | a b a⁻¹ = b²⟩ as dyadic pairs.
//! * The integer Heisenberg group ⟨a, b, c | [a,c] = [b,c] = 1, [a,b] = c⟩
//!   as integer triples.
//! * A toy abelian platform Zᵖ with a secret full-rank sublattice.
//!
//! [`ball_bfs`] and [`distortion_profile`] give ground-truth word lengths on
//! small balls of any [`CayleyGraph`].

mod abelian;
mod ball;
mod bs12;
mod heisenberg;
mod profile;

pub use abelian::{AbelianPlatform, AbelianSubgroup};
pub use ball::{ball_bfs, Ball, CayleyGraph};
pub use bs12::{bs12_compress, bs12_eval, Bs12, DyadicPair};
pub use heisenberg::{heis_compress_center, heis_eval, HeisTriple, Heisenberg};
pub use profile::{distortion_profile, BPowers, Center, DistortionProfile, SubgroupLength};

use thiserror::Error;

use crate::words::WordError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassicError {
    #[error("ball of radius {radius} exceeds the cap of {cap} elements")]
    BallCapExceeded { radius: usize, cap: usize },
    #[error("sublattice basis is singular or not square")]
    SingularBasis,
    #[error(transparent)]
    Word(#[from] WordError),
}
