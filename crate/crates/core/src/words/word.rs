use std::fmt;
use std::hash::{Hash, Hasher};

use super::{Alphabet, SubstitutionTable, WordError};

/// A signed generator, packed as `2·gen + inverse`.
///
/// The derived ordering is the letter order used everywhere:
/// `g1 < g1⁻¹ < g2 < g2⁻¹ < …`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u32);

impl Letter {
    pub const fn new(gen: u32, inverse: bool) -> Self {
        Letter(gen * 2 + inverse as u32)
    }

    pub const fn pos(gen: u32) -> Self {
        Letter(gen * 2)
    }

    pub const fn neg(gen: u32) -> Self {
        Letter(gen * 2 + 1)
    }

    pub const fn from_code(code: u32) -> Self {
        Letter(code)
    }

    pub const fn code(self) -> u32 {
        self.0
    }

    pub const fn gen(self) -> u32 {
        self.0 >> 1
    }

    pub const fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    pub const fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }

    /// `+1` or `-1`.
    pub const fn sign(self) -> i64 {
        if self.is_inverse() {
            -1
        } else {
            1
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}{}", self.gen(), if self.is_inverse() { "⁻" } else { "⁺" })
    }
}

/// Push `l` onto a freely reduced buffer, cancelling against the top.
#[inline]
pub fn reduce_push(buf: &mut Vec<Letter>, l: Letter) {
    if buf.last() == Some(&l.inverse()) {
        buf.pop();
    } else {
        buf.push(l);
    }
}

/// A finite sequence of letters over an alphabet.
///
/// Words are values: no operation here reduces implicitly, call
/// [`Word::free_reduce`] when a reduced representative is wanted.
#[derive(Clone)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(alphabet: &Alphabet, letters: Vec<Letter>) -> Result<Self, WordError> {
        let rank = alphabet.rank() as u32;
        if let Some(bad) = letters.iter().find(|l| l.gen() >= rank) {
            return Err(WordError::LetterOutOfRange(bad.gen()));
        }
        Ok(Word { alphabet: alphabet.clone(), letters })
    }

    /// Caller guarantees every letter is in range.
    pub(crate) fn from_raw(alphabet: &Alphabet, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| (l.gen() as usize) < alphabet.rank()));
        Word { alphabet: alphabet.clone(), letters }
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        Word { alphabet: alphabet.clone(), letters: Vec::new() }
    }

    /// The single-letter word `gen^±1`.
    pub fn generator(alphabet: &Alphabet, gen: u32, inverse: bool) -> Result<Self, WordError> {
        Self::new(alphabet, vec![Letter::new(gen, inverse)])
    }

    /// `gen^k`, expanded.
    pub fn power_of(alphabet: &Alphabet, gen: u32, k: i64) -> Result<Self, WordError> {
        let l = Letter::new(gen, k < 0);
        Self::new(alphabet, vec![l; k.unsigned_abs() as usize])
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    /// Raw letter count (no reduction).
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| p[0] != p[1].inverse())
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| !l.is_inverse())
    }

    pub fn free_reduce(&self) -> Word {
        let mut out = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            reduce_push(&mut out, l);
        }
        Word::from_raw(&self.alphabet, out)
    }

    /// Letter count of the free reduction.
    pub fn word_length(&self) -> usize {
        if self.is_reduced() {
            self.letters.len()
        } else {
            self.free_reduce().len()
        }
    }

    fn check(&self, other: &Word) -> Result<(), WordError> {
        if self.alphabet.same(&other.alphabet) {
            Ok(())
        } else {
            Err(WordError::AlphabetMismatch)
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        self.check(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word::from_raw(&self.alphabet, letters))
    }

    pub fn invert(&self) -> Word {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        Word::from_raw(&self.alphabet, letters)
    }

    /// `u⁻¹ · self · u`, unreduced.
    pub fn conjugate(&self, u: &Word) -> Result<Word, WordError> {
        u.invert().concat(self)?.concat(u)
    }

    pub fn substitute(&self, table: &SubstitutionTable) -> Result<Word, WordError> {
        table.apply(self)
    }

    /// Signed exponent sum of one generator.
    pub fn exponent_sum(&self, gen: u32) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.gen() == gen)
            .map(|l| l.sign())
            .sum()
    }

    /// Exponent sums of every generator, in alphabet order.
    pub fn exponent_vector(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.alphabet.rank()];
        for l in &self.letters {
            v[l.gen() as usize] += l.sign();
        }
        v
    }

    /// Same letters read over another alphabet (indices must stay in range).
    pub fn with_alphabet(&self, alphabet: &Alphabet) -> Result<Word, WordError> {
        Word::new(alphabet, self.letters.clone())
    }

    /// `self^k`, unreduced.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let n = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&base.letters);
        }
        Word::from_raw(&self.alphabet, letters)
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && self.alphabet.same(&other.alphabet)
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::serialize_word(self))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}
