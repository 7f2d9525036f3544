use thiserror::Error;

use crate::channel::ChannelError;
use crate::classic::ClassicError;
use crate::fbc::FbcError;
use crate::protocol::ProtocolError;
use crate::towers::TowerError;
use crate::words::WordError;

/// Any error of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Classic(#[from] ClassicError),
    #[error(transparent)]
    Fbc(#[from] FbcError),
    #[error(transparent)]
    Tower(#[from] TowerError),
    #[error(transparent)]
    Protocol(#[from] ProtocolError),
    #[error(transparent)]
    Channel(#[from] ChannelError),
}

/// Coarse classification, used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or inconsistent input.
    Data,
    /// A materialization or search cap was hit.
    Cap,
}

impl ErrorKind {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Data => 2,
            ErrorKind::Cap => 3,
        }
    }
}

fn fbc_kind(e: &FbcError) -> ErrorKind {
    match e {
        FbcError::FiberCapExceeded(_) => ErrorKind::Cap,
        _ => ErrorKind::Data,
    }
}

fn tower_kind(e: &TowerError) -> ErrorKind {
    match e {
        TowerError::CapExceeded { .. } => ErrorKind::Cap,
        _ => ErrorKind::Data,
    }
}

fn protocol_kind(e: &ProtocolError) -> ErrorKind {
    match e {
        ProtocolError::EncodingCapExceeded(_) => ErrorKind::Cap,
        ProtocolError::Fbc(e) => fbc_kind(e),
        ProtocolError::Tower(e) => tower_kind(e),
        _ => ErrorKind::Data,
    }
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Classic(ClassicError::BallCapExceeded { .. }) => ErrorKind::Cap,
            Error::Fbc(e) => fbc_kind(e),
            Error::Tower(e) => tower_kind(e),
            Error::Protocol(e) | Error::Channel(ChannelError::Protocol(e)) => protocol_kind(e),
            _ => ErrorKind::Data,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_are_classified() {
        let e: Error = ProtocolError::Fbc(FbcError::FiberCapExceeded(10)).into();
        assert_eq!(e.kind(), ErrorKind::Cap);
        let e: Error = TowerError::CapExceeded { needed: "1".into(), cap: 0 }.into();
        assert_eq!(e.kind().exit_code(), 3);
        let e: Error = WordError::ZeroExponent.into();
        assert_eq!(e.kind().exit_code(), 2);
    }
}
