use num_bigint::BigUint;

use super::{Automorphism, FbcError, DEFAULT_FIBER_CAP};
use crate::classic::{CayleyGraph, SubgroupLength};
use crate::words::{reduce_push, Alphabet, Letter, Word};

/// `F_m ⋊_φ ⟨s⟩` with relations `s x s⁻¹ = φ(x)`.
///
/// The full alphabet is the fiber alphabet followed by the stable letter, so
/// fiber letters keep their codes in both.
#[derive(Clone, Debug)]
pub struct FbcGroup {
    phi: Automorphism,
    alphabet: Alphabet,
    cap: usize,
}

/// `s^k · u` with `u` reduced over the fiber.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FbcNormalForm {
    pub k: i64,
    pub u: Word,
}

/// Result of eliminating every stable letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pinch {
    pub word: Word,
    pub steps: usize,
}

impl FbcGroup {
    pub fn new(phi: Automorphism, stable: &str) -> Result<Self, FbcError> {
        let alphabet = phi.alphabet().extended([stable])?;
        Ok(FbcGroup { phi, alphabet, cap: DEFAULT_FIBER_CAP })
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn phi(&self) -> &Automorphism {
        &self.phi
    }

    pub fn fiber(&self) -> &Alphabet {
        self.phi.alphabet()
    }

    /// Fiber generators then the stable letter.
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.phi.rank()
    }

    pub fn stable_gen(&self) -> u32 {
        self.rank() as u32
    }

    pub fn stable(&self) -> Letter {
        Letter::pos(self.stable_gen())
    }

    fn is_stable(&self, l: Letter) -> bool {
        l.gen() == self.stable_gen()
    }

    /// A fiber word read over the full alphabet.
    pub fn embed(&self, u: &Word) -> Word {
        Word::new(&self.alphabet, u.letters().to_vec()).expect("fiber embeds")
    }

    fn check(&self, w: &Word) -> Result<(), FbcError> {
        if w.alphabet().same(&self.alphabet) {
            Ok(())
        } else {
            Err(FbcError::Word(crate::words::WordError::AlphabetMismatch))
        }
    }

    pub fn stable_exponent(&self, w: &Word) -> i64 {
        w.letters().iter().filter(|l| self.is_stable(**l)).map(|l| l.sign()).sum()
    }

    /// `w = s^K · Π φ^{E_i − K}(x_i)` where `E_i` is the stable exponent
    /// before fiber letter `x_i` and `K` the total.
    pub fn normalize(&self, w: &Word) -> Result<FbcNormalForm, FbcError> {
        self.check(w)?;
        let total = self.stable_exponent(w);
        let mut u: Vec<Letter> = Vec::new();
        let mut height = 0i64;
        let mut run: Vec<Letter> = Vec::new();
        let flush = |run: &mut Vec<Letter>, height: i64, u: &mut Vec<Letter>| -> Result<(), FbcError> {
            if run.is_empty() {
                return Ok(());
            }
            let image = self.phi.apply_power(run, height - total, self.cap)?;
            for l in image {
                reduce_push(u, l);
            }
            run.clear();
            if u.len() > self.cap {
                return Err(FbcError::FiberCapExceeded(self.cap));
            }
            Ok(())
        };
        for &l in w.letters() {
            if self.is_stable(l) {
                flush(&mut run, height, &mut u)?;
                height += l.sign();
            } else {
                reduce_push(&mut run, l);
            }
        }
        flush(&mut run, height, &mut u)?;
        Ok(FbcNormalForm { k: total, u: Word::new(self.fiber(), u)? })
    }

    pub fn equal(&self, w1: &Word, w2: &Word) -> Result<bool, FbcError> {
        Ok(self.normalize(w1)? == self.normalize(w2)?)
    }

    /// `s^k · u` as a word.
    pub fn recompose(&self, nf: &FbcNormalForm) -> Word {
        let s = Word::power_of(&self.alphabet, self.stable_gen(), nf.k).unwrap();
        s.concat(&self.embed(&nf.u)).unwrap()
    }

    /// Britton reduction, leftmost innermost pair first:
    /// `s x s⁻¹ → φ(x)`, `s⁻¹ x s → φ⁻¹(x)`.
    pub fn pinch_reduce(&self, v: &Word) -> Result<Pinch, FbcError> {
        self.check(v)?;
        let sum = self.stable_exponent(v);
        if sum != 0 {
            return Err(FbcError::NonzeroExponentSum(sum));
        }
        // (opening stable letter, fiber word since it)
        let mut stack: Vec<(Option<Letter>, Vec<Letter>)> = vec![(None, Vec::new())];
        let mut steps = 0;
        for &l in v.letters() {
            if !self.is_stable(l) {
                reduce_push(&mut stack.last_mut().unwrap().1, l);
                continue;
            }
            match stack.last() {
                Some((Some(open), _)) if *open == l.inverse() => {
                    let (open, x) = stack.pop().unwrap();
                    let p = open.unwrap().sign();
                    let y = self.phi.apply_power(&x, p, self.cap)?;
                    let top = &mut stack.last_mut().unwrap().1;
                    for m in y {
                        reduce_push(top, m);
                    }
                    if top.len() > self.cap {
                        return Err(FbcError::FiberCapExceeded(self.cap));
                    }
                    steps += 1;
                }
                _ => stack.push((Some(l), Vec::new())),
            }
        }
        debug_assert_eq!(stack.len(), 1);
        let (_, u) = stack.pop().unwrap();
        Ok(Pinch { word: Word::new(self.fiber(), u)?, steps })
    }
}

impl CayleyGraph for FbcGroup {
    type Element = FbcNormalForm;

    fn identity(&self) -> FbcNormalForm {
        FbcNormalForm { k: 0, u: Word::identity(self.fiber()) }
    }

    fn generator_count(&self) -> usize {
        self.alphabet.rank()
    }

    // s^k u · s^ε = s^{k+ε} φ^{-ε}(u)
    fn step(&self, e: &FbcNormalForm, l: Letter) -> FbcNormalForm {
        if self.is_stable(l) {
            let u = if l.is_inverse() { self.phi.apply(&e.u) } else { self.phi.apply_inverse(&e.u) };
            FbcNormalForm { k: e.k + l.sign(), u }
        } else {
            let mut letters = e.u.letters().to_vec();
            reduce_push(&mut letters, l);
            FbcNormalForm { k: e.k, u: Word::new(self.fiber(), letters).unwrap() }
        }
    }
}

/// The fiber `F_m`, with intrinsic length the reduced fiber length.
pub struct Fiber;

impl SubgroupLength<FbcGroup> for Fiber {
    fn intrinsic_length(&self, e: &FbcNormalForm) -> Option<BigUint> {
        (e.k == 0).then(|| BigUint::from(e.u.len()))
    }
}
