//! Distortion towers.
//!
//! `G₁ = ⟨a_1..a_r, t | t⁻¹ a_j t = w_{1j}⟩` distorts `F₁ = ⟨a_j⟩`
//! exponentially, and the amalgam `H = G₁ *_{F₁} G_r` with
//! `G_r = ⟨a_1..a_{r²}, t_1..t_r | t_i⁻¹ a_j t_i = w_{ij}⟩` and `a_j ↔ t_j`
//! distorts `F₂ = ⟨a_1..a_{r²}⟩` doubly exponentially. The relator words are
//! consecutive chunks of the mother word.

mod amalgam;
mod expand;
mod length;
mod mother;

pub use amalgam::{tower_decode, tower_encode_w2, tower_f2_length, Amalgam, W2Template};
pub use expand::{g1_expand, g1_length_only};
pub use length::{TowerLength, MAX_EXACT_DIGITS};
pub use mother::{mother_word, validate_subword_once, RelatorTable};

use thiserror::Error;

use crate::words::WordError;

/// Default branching, matching the rank-14 construction.
pub const DEFAULT_BRANCHING: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TowerError {
    #[error("word is not positive")]
    NotPositive,
    #[error("expansion needs {needed} letters, cap is {cap}")]
    CapExceeded { needed: String, cap: usize },
    #[error("not a tower ciphertext: {0}")]
    TemplateMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Word(#[from] WordError),
}
