//! Subgroup-distortion cryptosystems.
//!
//! The crate is organised bottom-up:
//!
//! * [`words`]: alphabets, words, free reduction, substitutions, length-lex
//!   enumeration and the canonical text form.
//! * [`classic`]: BS(1,2), the integer Heisenberg group and a toy abelian
//!   platform, together with a brute-force ball/distortion oracle.
//! * [`fbc`]: free-by-cyclic groups, the stable-letter pinch rewriting and
//!   secret splittings.
//! * [`towers`]: the mother word, relator tables and the exponential /
//!   doubly exponential distortion towers.
//! * [`protocol`]: encoders and decoders for all protocol variants.
//! * [`channel`]: framing, sessions with a passive tap, and attacks.
//!
//! Data-parallel loops go through [`exec::Exec`]; with the `parallel`
//! feature disabled every path runs sequentially.

pub mod channel;
pub mod classic;
mod error;
pub mod exec;
pub mod fbc;
pub mod protocol;
pub mod towers;
pub mod words;

pub use error::{Error, ErrorKind};
pub use exec::Exec;

/// Default cap on materialized word lengths and ball sizes.
pub const DEFAULT_CAP: usize = 10_000_000;

/// Materialization cap, honouring the `DGC_CAP` environment variable.
pub fn cap_from_env() -> usize {
    std::env::var("DGC_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}
