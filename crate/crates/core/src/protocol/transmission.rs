use std::fmt;
use std::str::FromStr;

use super::ProtocolError;
use crate::words::{parse_word, parse_word_lenient, Alphabet, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProtocolId {
    I,
    IA,
    IB,
    II,
}

impl ProtocolId {
    pub const ALL: [ProtocolId; 4] = [ProtocolId::I, ProtocolId::IA, ProtocolId::IB, ProtocolId::II];

    pub fn as_str(self) -> &'static str {
        match self {
            ProtocolId::I => "I",
            ProtocolId::IA => "IA",
            ProtocolId::IB => "IB",
            ProtocolId::II => "II",
        }
    }
}

impl fmt::Display for ProtocolId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProtocolId {
    type Err = ProtocolError;

    fn from_str(s: &str) -> Result<Self, ProtocolError> {
        ProtocolId::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| ProtocolError::MalformedTransmission(format!("unknown protocol `{s}`")))
    }
}

/// The on-wire unit: `DGC1 <id> <count>\n`, one word per line, `.\n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transmission {
    pub protocol: ProtocolId,
    pub words: Vec<Word>,
}

impl Transmission {
    pub fn new(protocol: ProtocolId, words: Vec<Word>) -> Self {
        Transmission { protocol, words }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("DGC1 {} {}\n", self.protocol, self.words.len());
        for w in &self.words {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out.push_str(".\n");
        out
    }

    /// Total transmitted letters.
    pub fn letter_count(&self) -> usize {
        self.words.iter().map(Word::len).sum()
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self, ProtocolError> {
        Self::parse_with(text, |line| parse_word(line, alphabet))
    }

    /// Parses without a known alphabet; each word gets its own.
    pub fn parse_lenient(text: &str) -> Result<Self, ProtocolError> {
        Self::parse_with(text, parse_word_lenient)
    }

    fn parse_with<F>(text: &str, parse: F) -> Result<Self, ProtocolError>
    where
        F: Fn(&str) -> Result<Word, crate::words::WordError>,
    {
        let bad = |m: &str| ProtocolError::MalformedTransmission(m.to_string());
        let body = text.strip_suffix("\n").ok_or_else(|| bad("missing final newline"))?;
        let mut lines: Vec<&str> = body.split('\n').collect();
        if lines.pop() != Some(".") {
            return Err(bad("missing terminator"));
        }
        let (header, lines) = lines.split_first().ok_or_else(|| bad("empty"))?;
        let mut parts = header.split(' ');
        if parts.next() != Some("DGC1") {
            return Err(bad("bad magic"));
        }
        let protocol: ProtocolId = parts.next().ok_or_else(|| bad("missing protocol"))?.parse()?;
        let count: usize = parts
            .next()
            .filter(|c| *c == "0" || !c.starts_with('0'))
            .and_then(|c| c.parse().ok())
            .ok_or_else(|| bad("bad word count"))?;
        if parts.next().is_some() {
            return Err(bad("trailing header fields"));
        }
        if lines.len() != count {
            return Err(bad("word count mismatch"));
        }
        let words = lines
            .iter()
            .map(|line| parse(line).map_err(|e| ProtocolError::MalformedTransmission(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Transmission { protocol, words })
    }
}
