//! Framing, two-endpoint sessions with a passive tap, transcripts and the
//! eavesdropper attacks.

mod attacks;
mod frame;
mod lattice;
mod session;
mod transcript;
mod transport;

pub use attacks::{attack_alphabet_partition, attack_guess_bound, attack_subgroup_reconstruction, AttackReport};
pub use frame::{Frame, MAX_PAYLOAD};
pub use lattice::Lattice;
pub use session::{replay, run_session, SessionOutcome, Transport};
pub use transcript::{Direction, Entry, Transcript};
pub use transport::{duplex, tcp_pair, PipeEnd};

use thiserror::Error;

use crate::protocol::ProtocolError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChannelError {
    #[error("framing error: {0}")]
    Framing(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("bad transcript: {0}")]
    Transcript(String),
    #[error("endpoint failed: {0}")]
    Endpoint(String),
    #[error(transparent)]
    Protocol(#[from] ProtocolError),
}

impl From<std::io::Error> for ChannelError {
    fn from(e: std::io::Error) -> Self {
        ChannelError::Io(e.to_string())
    }
}
