//! The cryptosystems: Protocol I (basic, with decoys, with PRNG masks) over
//! free-by-cyclic platforms, and Protocol II over the distortion tower.

mod basic;
mod keys;
mod prng;
mod tower;
mod toy;
mod transmission;
mod variants;

pub use basic::{decode_i, encode_i, EncodedI, Piece};
pub use keys::{
    keygen, keygen_toy, secret_splitting, KeyFile, ProtocolName, PublicParams, SharedSecret, DEFAULT_DECOYS,
    DEFAULT_MASK_RANKS,
};
pub use prng::{seed_from_timestamp, Prng};
pub use tower::{decode_ii, encode_ii, message_for, template_for, TowerDecoded};
pub use toy::AbelianToy;
pub use transmission::{ProtocolId, Transmission};
pub use variants::{decode_ia, decoy, encode_ia, MaskedPlatform, RANDOM_WORD_MAX_LEN};

use thiserror::Error;

use crate::fbc::FbcError;
use crate::towers::TowerError;
use crate::words::WordError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProtocolError {
    #[error("malformed timestamp `{0}`")]
    MalformedTimestamp(String),
    #[error("message {0} is not encodable")]
    InvalidMessage(u64),
    #[error("fiber materialization over cap {0}")]
    EncodingCapExceeded(usize),
    #[error("encoder self-check failed: expected {expected}, decoded {got}")]
    VerifyFailed { expected: u64, got: u64 },
    #[error("word is not in the secret subgroup")]
    NotInSubgroup,
    #[error("no word of the transmission is in the subgroup")]
    NoMemberFound,
    #[error("several words of the transmission are in the subgroup")]
    MultipleMembersFound,
    #[error("expected protocol {expected}, found {found}")]
    WrongProtocol { expected: ProtocolId, found: ProtocolId },
    #[error("malformed transmission: {0}")]
    MalformedTransmission(String),
    #[error("bad key: {0}")]
    Key(String),
    #[error(transparent)]
    Fbc(#[from] FbcError),
    #[error(transparent)]
    Tower(#[from] TowerError),
    #[error(transparent)]
    Word(#[from] WordError),
}
