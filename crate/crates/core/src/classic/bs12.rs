use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{CayleyGraph, ClassicError};
use crate::words::{Alphabet, Letter, Word, WordError};

/// An element `(x, k)` of BS(1,2) = Z[1/2] ⋊ Z with `x = p / 2^q`.
///
/// `q` is minimal (`p` odd or `q = 0`), so the representation is canonical
/// and doubles as a hash key. Multiplication: `(x,k)(y,l) = (x + 2^k·y, k+l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyadicPair {
    numer: BigInt,
    shift: u64,
    height: i64,
}

impl DyadicPair {
    pub fn identity() -> Self {
        DyadicPair { numer: BigInt::zero(), shift: 0, height: 0 }
    }

    /// `a ↦ (0, 1)`.
    pub fn a() -> Self {
        DyadicPair { numer: BigInt::zero(), shift: 0, height: 1 }
    }

    /// `b ↦ (1, 0)`.
    pub fn b() -> Self {
        Self::integer(BigInt::one(), 0)
    }

    pub fn integer(x: BigInt, height: i64) -> Self {
        DyadicPair { numer: x, shift: 0, height }
    }

    /// `(p / 2^q, k)`, normalised.
    pub fn new(numer: BigInt, shift: u64, height: i64) -> Self {
        let mut d = DyadicPair { numer, shift, height };
        d.normalise();
        d
    }

    fn normalise(&mut self) {
        if self.numer.is_zero() {
            self.shift = 0;
            return;
        }
        let tz = self.numer.trailing_zeros().unwrap_or(0).min(self.shift);
        if tz > 0 {
            self.numer >>= tz as usize;
            self.shift -= tz;
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.numer
    }

    pub fn shift(&self) -> u64 {
        self.shift
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    /// `N` when the element is `b^N`.
    pub fn as_b_power(&self) -> Option<&BigInt> {
        (self.height == 0 && self.shift == 0).then_some(&self.numer)
    }

    /// `x + 2^e · (p / 2^q)`, in place.
    fn add_scaled(&mut self, p: &BigInt, q: u64, e: i64) {
        if p.is_zero() {
            return;
        }
        // term = p·2^(e) / 2^q
        let (mut tp, mut tq) = (p.clone(), q);
        if e >= 0 {
            tp <<= e as usize;
        } else {
            tq += e.unsigned_abs();
        }
        if tq > self.shift {
            self.numer <<= (tq - self.shift) as usize;
            self.shift = tq;
        } else {
            tp <<= (self.shift - tq) as usize;
        }
        self.numer += tp;
        self.normalise();
    }

    pub fn inverse(&self) -> Self {
        // (x,k)⁻¹ = (−2^(−k)·x, −k)
        let mut out = DyadicPair { numer: BigInt::zero(), shift: 0, height: -self.height };
        out.add_scaled(&-&self.numer, self.shift, -self.height);
        out
    }

    /// Right multiplication by a generator letter (`a` is 0, `b` is 1).
    pub fn mul_letter(&mut self, l: Letter) {
        match (l.gen(), l.is_inverse()) {
            (0, false) => self.height += 1,
            (0, true) => self.height -= 1,
            (_, inv) => {
                let one = if inv { -BigInt::one() } else { BigInt::one() };
                let h = self.height;
                self.add_scaled(&one, 0, h);
            }
        }
    }
}

impl Mul for &DyadicPair {
    type Output = DyadicPair;

    fn mul(self, rhs: &DyadicPair) -> DyadicPair {
        let mut out = self.clone();
        out.add_scaled(&rhs.numer, rhs.shift, self.height);
        out.height += rhs.height;
        out
    }
}

/// BS(1,2) on the alphabet `{a, b}`.
#[derive(Clone, Debug)]
pub struct Bs12 {
    alphabet: Alphabet,
}

impl Default for Bs12 {
    fn default() -> Self {
        Bs12 { alphabet: Alphabet::new(["a", "b"]).unwrap() }
    }
}

impl Bs12 {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn eval(&self, w: &Word) -> Result<DyadicPair, ClassicError> {
        bs12_eval(w)
    }
}

/// Map a word's generators onto platform generators by name.
pub(crate) fn gen_map(w: &Word, names: &[&str]) -> Result<Vec<u32>, WordError> {
    w.alphabet()
        .names()
        .iter()
        .map(|n| {
            names
                .iter()
                .position(|m| m == n)
                .map(|i| i as u32)
                .ok_or_else(|| WordError::UnknownGenerator(n.clone()))
        })
        .collect()
}

/// Exact evaluation of a word over (a subset of) `{a, b}`.
pub fn bs12_eval(w: &Word) -> Result<DyadicPair, ClassicError> {
    let map = gen_map(w, &["a", "b"])?;
    let mut acc = DyadicPair::identity();
    for l in w.letters() {
        acc.mul_letter(Letter::new(map[l.gen() as usize], l.is_inverse()));
    }
    Ok(acc)
}

/// A short word for `b^N`, Horner-style over the binary expansion of `|N|`.
///
/// With set bits `i₁ > i₂ > …` the word is
/// `a^i₁ b a^-(i₁-i₂) b … b a^-i_last`, length `2·i₁ + popcount`.
/// For `N = 2ⁿ` this is exactly `aⁿ b a⁻ⁿ`.
pub fn bs12_compress(n: &BigInt) -> Word {
    let g = Bs12::default();
    let alphabet = g.alphabet().clone();
    if n.is_zero() {
        return Word::identity(&alphabet);
    }
    let b = Letter::new(1, n.is_negative());
    let mag = n.magnitude();
    let bits: Vec<u64> = (0..mag.bits()).rev().filter(|&i| mag.bit(i)).collect();
    let mut letters = Vec::new();
    let top = bits[0];
    letters.extend(std::iter::repeat_n(Letter::pos(0), top as usize));
    let mut level = top;
    for &i in &bits {
        letters.extend(std::iter::repeat_n(Letter::neg(0), (level - i) as usize));
        letters.push(b);
        level = i;
    }
    letters.extend(std::iter::repeat_n(Letter::neg(0), level as usize));
    Word::new(&alphabet, letters).expect("bs12 letters")
}

impl CayleyGraph for Bs12 {
    type Element = DyadicPair;

    fn identity(&self) -> DyadicPair {
        DyadicPair::identity()
    }

    fn generator_count(&self) -> usize {
        2
    }

    fn step(&self, e: &DyadicPair, l: Letter) -> DyadicPair {
        let mut out = e.clone();
        out.mul_letter(l);
        out
    }
}
