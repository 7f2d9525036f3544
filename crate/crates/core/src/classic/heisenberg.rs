use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::bs12::gen_map;
use super::{CayleyGraph, ClassicError};
use crate::words::{Alphabet, Letter, Word};

/// `(x, y, z)` with `(x,y,z)(x',y',z') = (x+x', y+y', z+z'+x·y')`.
///
/// `a = (1,0,0)`, `b = (0,1,0)`, `c = (0,0,1)`; one checks `[a,b] = c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeisTriple {
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
}

impl HeisTriple {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Self {
        HeisTriple { x: x.into(), y: y.into(), z: z.into() }
    }

    pub fn identity() -> Self {
        Self::new(0, 0, 0)
    }

    pub fn inverse(&self) -> Self {
        HeisTriple {
            x: -&self.x,
            y: -&self.y,
            z: &self.x * &self.y - &self.z,
        }
    }

    pub fn mul_letter(&mut self, l: Letter) {
        let one = if l.is_inverse() { -BigInt::one() } else { BigInt::one() };
        match l.gen() {
            0 => self.x += one,
            1 => {
                self.z += &one * &self.x;
                self.y += one;
            }
            _ => self.z += one,
        }
    }

    /// Central element `c^z`.
    pub fn central(&self) -> Option<&BigInt> {
        (self.x.is_zero() && self.y.is_zero()).then_some(&self.z)
    }
}

impl Mul for &HeisTriple {
    type Output = HeisTriple;

    fn mul(self, rhs: &HeisTriple) -> HeisTriple {
        HeisTriple {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
            z: &self.z + &rhs.z + &self.x * &rhs.y,
        }
    }
}

/// Heisenberg group on `{a, b, c}`.
#[derive(Clone, Debug)]
pub struct Heisenberg {
    alphabet: Alphabet,
}

impl Default for Heisenberg {
    fn default() -> Self {
        Heisenberg { alphabet: Alphabet::new(["a", "b", "c"]).unwrap() }
    }
}

impl Heisenberg {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
}

pub fn heis_eval(w: &Word) -> Result<HeisTriple, ClassicError> {
    let map = gen_map(w, &["a", "b", "c"])?;
    let mut acc = HeisTriple::identity();
    for l in w.letters() {
        acc.mul_letter(Letter::new(map[l.gen() as usize], l.is_inverse()));
    }
    Ok(acc)
}

fn push_commutator(letters: &mut Vec<Letter>, n: usize) {
    for l in [Letter::pos(0), Letter::pos(1), Letter::neg(0), Letter::neg(1)] {
        letters.extend(std::iter::repeat_n(l, n));
    }
}

/// A word for `c^N` by greedy square decomposition.
///
/// Each square `n²` becomes the commutator `aⁿ bⁿ a⁻ⁿ b⁻ⁿ` (length `4n`);
/// a remainder too small to profit from another commutator is written as a
/// plain power of `c`. Perfect squares always give the bare commutator.
pub fn heis_compress_center(n: &BigUint) -> Word {
    let alphabet = Heisenberg::default().alphabet().clone();
    let mut rest = n.clone();
    let mut letters = Vec::new();
    while !rest.is_zero() {
        let root = rest.sqrt();
        let square = &root * &root;
        if square == rest || root >= BigUint::from(4u32) {
            let r = usize::try_from(&root).expect("commutator exponent fits in memory");
            push_commutator(&mut letters, r);
            rest -= square;
        } else {
            let r = usize::try_from(&rest).expect("small remainder");
            letters.extend(std::iter::repeat_n(Letter::pos(2), r));
            break;
        }
    }
    Word::new(&alphabet, letters).expect("heisenberg letters")
}

impl CayleyGraph for Heisenberg {
    type Element = HeisTriple;

    fn identity(&self) -> HeisTriple {
        HeisTriple::identity()
    }

    fn generator_count(&self) -> usize {
        3
    }

    fn step(&self, e: &HeisTriple, l: Letter) -> HeisTriple {
        let mut out = e.clone();
        out.mul_letter(l);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn eval(s: &str) -> HeisTriple {
        heis_eval(&parse_word(s, Heisenberg::default().alphabet()).unwrap()).unwrap()
    }

    #[test]
    fn presentation_identities() {
        assert_eq!(eval("a b a^-1 b^-1"), HeisTriple::new(0, 0, 1));
        assert_eq!(eval("a b"), HeisTriple::new(1, 1, 1));
        assert_eq!(eval("c b a"), HeisTriple::new(1, 1, 1));
        assert_eq!(eval("1"), HeisTriple::identity());
        assert_eq!(eval("a c a^-1 c^-1"), HeisTriple::identity());
        assert_eq!(eval("b c b^-1 c^-1"), HeisTriple::identity());
    }

    #[test]
    fn c_is_central() {
        for s in ["a b^-2 a", "b^3 a^-1", "a^-1 b a b"] {
            assert_eq!(eval(&format!("c {s}")), eval(&format!("{s} c")));
        }
    }

    #[test]
    fn inverse_and_mul() {
        let e = eval("a^2 b^-1 c a");
        assert_eq!(&e * &e.inverse(), HeisTriple::identity());
        assert_eq!(&e.inverse() * &e, HeisTriple::identity());
    }

    #[test]
    fn compress_examples() {
        let w = heis_compress_center(&9u32.into());
        assert_eq!(w.to_string(), "a^3 b^3 a^-3 b^-3");
        assert_eq!(w.len(), 12);
        assert!(heis_compress_center(&0u32.into()).is_empty());
        let w = heis_compress_center(&10u32.into());
        assert!(w.len() <= 13);
        assert_eq!(heis_eval(&w).unwrap(), HeisTriple::new(0, 0, 10));
    }

    #[test]
    fn compress_is_exact_on_many_values() {
        for n in 0u32..2000 {
            let w = heis_compress_center(&n.into());
            assert_eq!(heis_eval(&w).unwrap(), HeisTriple::new(0, 0, n), "{n}");
            let bound = 4.0 * (n as f64).sqrt() + 4.0 * (2.0 * (n as f64).sqrt() + 1.0).sqrt() + 32.0;
            assert!((w.len() as f64) <= bound, "{n}: {}", w.len());
        }
    }
}
