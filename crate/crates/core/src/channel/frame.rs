use std::io::{self, Read, Write};

use super::ChannelError;

/// Largest accepted payload, in bytes.
pub const MAX_PAYLOAD: usize = 1 << 24;

/// One length-prefixed unit on the byte stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub payload: Vec<u8>,
}

impl Frame {
    pub fn new(payload: impl Into<Vec<u8>>) -> Result<Self, ChannelError> {
        let payload = payload.into();
        if payload.len() > MAX_PAYLOAD {
            return Err(ChannelError::Framing(format!("payload of {} bytes", payload.len())));
        }
        Ok(Frame { payload })
    }

    pub fn text(&self) -> Result<&str, ChannelError> {
        std::str::from_utf8(&self.payload).map_err(|_| ChannelError::Framing("payload is not UTF-8".into()))
    }

    /// 4-byte big-endian length, then the payload.
    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(4 + self.payload.len());
        out.extend_from_slice(&(self.payload.len() as u32).to_be_bytes());
        out.extend_from_slice(&self.payload);
        out
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<(), ChannelError> {
        w.write_all(&self.encode())?;
        w.flush()?;
        Ok(())
    }

    /// `Ok(None)` on a clean end of stream before the length prefix.
    pub fn read_from<R: Read>(r: &mut R) -> Result<Option<Frame>, ChannelError> {
        let mut len = [0u8; 4];
        let mut got = 0;
        while got < 4 {
            match r.read(&mut len[got..]) {
                Ok(0) if got == 0 => return Ok(None),
                Ok(0) => return Err(ChannelError::Framing("truncated length prefix".into())),
                Ok(k) => got += k,
                Err(e) if e.kind() == io::ErrorKind::Interrupted => {}
                Err(e) => return Err(e.into()),
            }
        }
        let n = u32::from_be_bytes(len) as usize;
        if n > MAX_PAYLOAD {
            return Err(ChannelError::Framing(format!("length prefix {n} over limit")));
        }
        let mut payload = vec![0u8; n];
        r.read_exact(&mut payload).map_err(|e| match e.kind() {
            io::ErrorKind::UnexpectedEof => ChannelError::Framing("truncated payload".into()),
            _ => e.into(),
        })?;
        Ok(Some(Frame { payload }))
    }

    /// Splits a complete byte buffer into frames.
    pub fn parse_all(mut bytes: &[u8]) -> Result<Vec<Frame>, ChannelError> {
        let mut out = Vec::new();
        while let Some(f) = Frame::read_from(&mut bytes)? {
            out.push(f);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_layout() {
        let f = Frame::new("DGC1 I 0\n.\n").unwrap();
        let bytes = f.encode();
        assert_eq!(&bytes[..4], &[0, 0, 0, 11]);
        assert_eq!(Frame::parse_all(&bytes).unwrap(), vec![f]);
    }

    #[test]
    fn malformed_streams() {
        assert!(Frame::parse_all(&[0, 0]).is_err());
        assert!(Frame::parse_all(&[0, 0, 0, 5, b'a']).is_err());
        assert!(Frame::parse_all(&[0x01, 0, 0, 1]).is_err());
        assert!(Frame::new(vec![0u8; MAX_PAYLOAD + 1]).is_err());
        assert_eq!(Frame::parse_all(&[]).unwrap(), vec![]);
    }
}
