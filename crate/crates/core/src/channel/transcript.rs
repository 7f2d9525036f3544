use std::io::{Read, Write};

use super::{ChannelError, Frame};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    AliceToBob,
    BobToAlice,
}

impl Direction {
    pub fn tag(self) -> u8 {
        match self {
            Direction::AliceToBob => 0,
            Direction::BobToAlice => 1,
        }
    }

    pub fn from_tag(tag: u8) -> Result<Self, ChannelError> {
        match tag {
            0 => Ok(Direction::AliceToBob),
            1 => Ok(Direction::BobToAlice),
            t => Err(ChannelError::Transcript(format!("unknown direction tag {t}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub direction: Direction,
    pub frame: Frame,
    /// Position in the transcript.
    pub counter: u64,
}

/// Append-only record of every frame that crossed the stream.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Transcript {
    entries: Vec<Entry>,
}

impl Transcript {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, direction: Direction, frame: Frame) {
        let counter = self.entries.len() as u64;
        self.entries.push(Entry { direction, frame, counter });
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Alice-to-Bob frames with their frame index.
    pub fn requests(&self) -> impl Iterator<Item = (u64, &Frame)> {
        self.entries.iter().filter(|e| e.direction == Direction::AliceToBob).map(|e| &e.frame).zip(0..).map(|(f, i)| (i, f))
    }

    /// Each entry as a direction byte followed by the framed payload.
    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<(), ChannelError> {
        for e in &self.entries {
            w.write_all(&[e.direction.tag()])?;
            e.frame.write_to(w)?;
        }
        Ok(())
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.write_to(&mut out).unwrap();
        out
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self, ChannelError> {
        let mut t = Transcript::new();
        loop {
            let mut tag = [0u8; 1];
            match r.read(&mut tag)? {
                0 => return Ok(t),
                _ => {
                    let d = Direction::from_tag(tag[0])?;
                    let f = Frame::read_from(r)?.ok_or_else(|| ChannelError::Transcript("tag without frame".into()))?;
                    t.push(d, f);
                }
            }
        }
    }

    pub fn from_bytes(mut bytes: &[u8]) -> Result<Self, ChannelError> {
        Self::read_from(&mut bytes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_round_trip() {
        let mut t = Transcript::new();
        t.push(Direction::AliceToBob, Frame::new("x").unwrap());
        t.push(Direction::BobToAlice, Frame::new("ACK 1").unwrap());
        let bytes = t.to_bytes();
        assert_eq!(&bytes[..6], &[0, 0, 0, 0, 1, b'x']);
        assert_eq!(Transcript::from_bytes(&bytes).unwrap(), t);
        assert!(Transcript::from_bytes(&[7, 0, 0, 0, 0]).is_err());
        assert!(Transcript::from_bytes(&[0]).is_err());
        assert_eq!(t.requests().count(), 1);
    }
}
