use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::WordError;

struct Inner {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

/// An ordered list of generator names.
///
/// Cloning is cheap; words hold a clone of the alphabet they live over.
#[derive(Clone)]
pub struct Alphabet(Arc<Inner>);

pub(crate) fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(WordError::InvalidAlphabet("empty".into()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(WordError::InvalidAlphabet(format!("bad name `{n}`")));
            }
            if index.insert(n.clone(), i as u32).is_some() {
                return Err(WordError::InvalidAlphabet(format!("duplicate `{n}`")));
            }
        }
        Ok(Alphabet(Arc::new(Inner { names, index })))
    }

    /// `a, b, c, …` for rank ≤ 26, `g1, g2, …` beyond.
    pub fn standard(rank: usize) -> Self {
        assert!(rank > 0, "rank must be positive");
        if rank <= 26 {
            Self::new((0..rank).map(|i| ((b'a' + i as u8) as char).to_string())).unwrap()
        } else {
            Self::indexed("g", rank)
        }
    }

    /// `{prefix}1, …, {prefix}{rank}`.
    pub fn indexed(prefix: &str, rank: usize) -> Self {
        Self::new((1..=rank).map(|i| format!("{prefix}{i}"))).expect("valid indexed alphabet")
    }

    /// Disjoint union, `self` first.
    pub fn union(&self, other: &Alphabet) -> Result<Self, WordError> {
        Self::new(self.names().iter().chain(other.names()).cloned())
    }

    /// Alphabet extended by extra names.
    pub fn extended<I, S>(&self, extra: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::new(
            self.names()
                .iter()
                .cloned()
                .chain(extra.into_iter().map(Into::into)),
        )
    }

    pub fn rank(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, gen: u32) -> &str {
        &self.0.names[gen as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.0.index.get(name).copied()
    }

    pub fn same(&self, other: &Alphabet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.names == other.0.names
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.names.join(","))
    }
}
