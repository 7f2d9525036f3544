//! Alphabets, words and the operations every platform builds on.

mod alphabet;
mod enumerate;
mod subst;
mod text;
mod word;

pub use alphabet::Alphabet;
pub use enumerate::{count_of_length, count_up_to, index_to_word, word_to_index};
pub use subst::SubstitutionTable;
pub use text::{parse_word, parse_word_lenient, serialize_word};
pub use word::{reduce_push, Letter, Word};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("zero exponent")]
    ZeroExponent,
    #[error("words are over different alphabets")]
    AlphabetMismatch,
    #[error("word is not freely reduced")]
    NotReduced,
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("enumeration index does not fit in 64 bits")]
    IndexOverflow,
    #[error("generator index {0} out of range")]
    LetterOutOfRange(u32),
}

/// Convenience: `free_reduce` as a free function.
pub fn free_reduce(w: &Word) -> Word {
    w.free_reduce()
}

/// Letter count of the free reduction.
pub fn word_length(w: &Word) -> usize {
    w.word_length()
}
