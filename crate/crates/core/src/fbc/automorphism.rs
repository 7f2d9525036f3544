use super::FbcError;
use crate::words::{Alphabet, Letter, SubstitutionTable, Word};

/// A free-group automorphism given by images and verified inverse images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    forward: SubstitutionTable,
    backward: SubstitutionTable,
}

impl Automorphism {
    pub fn new(alphabet: &Alphabet, images: Vec<Word>, inverse_images: Vec<Word>) -> Result<Self, FbcError> {
        let forward = SubstitutionTable::new(alphabet, alphabet, images)
            .map_err(|e| FbcError::InvalidAutomorphism(e.to_string()))?;
        let backward = SubstitutionTable::new(alphabet, alphabet, inverse_images)
            .map_err(|e| FbcError::InvalidAutomorphism(e.to_string()))?;
        let phi = Automorphism { forward, backward };
        for g in 0..alphabet.rank() as u32 {
            let x = Word::generator(alphabet, g, false)?;
            if phi.apply_inverse(&phi.apply(&x)) != x || phi.apply(&phi.apply_inverse(&x)) != x {
                return Err(FbcError::InvalidAutomorphism(format!(
                    "inverse check fails on `{}`",
                    alphabet.name(g)
                )));
            }
        }
        Ok(phi)
    }

    /// `b1 ↦ b2, b2 ↦ b1 b2`, inverse `b1 ↦ b2 b1⁻¹, b2 ↦ b1`.
    pub fn fibonacci(alphabet: &Alphabet) -> Self {
        assert_eq!(alphabet.rank(), 2, "fibonacci automorphism needs rank 2");
        let w = |ls: &[Letter]| Word::new(alphabet, ls.to_vec()).unwrap();
        let (b1, b2) = (Letter::pos(0), Letter::pos(1));
        Self::new(
            alphabet,
            vec![w(&[b2]), w(&[b1, b2])],
            vec![w(&[b2, b1.inverse()]), w(&[b1])],
        )
        .expect("fibonacci automorphism")
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        let t = SubstitutionTable::identity(alphabet);
        Automorphism { forward: t.clone(), backward: t }
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.forward.domain()
    }

    pub fn rank(&self) -> usize {
        self.alphabet().rank()
    }

    pub fn images(&self) -> &[Word] {
        self.forward.images()
    }

    pub fn inverse_images(&self) -> &[Word] {
        self.backward.images()
    }

    pub fn forward(&self) -> &SubstitutionTable {
        &self.forward
    }

    pub fn backward(&self) -> &SubstitutionTable {
        &self.backward
    }

    /// Freely reduced `φ(w)`.
    pub fn apply(&self, w: &Word) -> Word {
        Word::new(self.alphabet(), self.forward.apply_letters_reduced(w.letters())).unwrap()
    }

    pub fn apply_inverse(&self, w: &Word) -> Word {
        Word::new(self.alphabet(), self.backward.apply_letters_reduced(w.letters())).unwrap()
    }

    /// `φ^p` applied to raw letters, freely reduced, aborting past `cap`.
    pub fn apply_power(&self, letters: &[Letter], p: i64, cap: usize) -> Result<Vec<Letter>, FbcError> {
        let table = if p >= 0 { &self.forward } else { &self.backward };
        let mut cur = letters.to_vec();
        for _ in 0..p.unsigned_abs() {
            cur = table.apply_letters_reduced(&cur);
            if cur.len() > cap {
                return Err(FbcError::FiberCapExceeded(cap));
            }
        }
        Ok(cur)
    }

    pub fn inverse(&self) -> Self {
        Automorphism { forward: self.backward.clone(), backward: self.forward.clone() }
    }

    /// `φ^p` as an automorphism.
    pub fn power(&self, p: i64) -> Self {
        let base = if p >= 0 { self.clone() } else { self.inverse() };
        let mut out = Automorphism::identity(self.alphabet());
        for _ in 0..p.unsigned_abs() {
            out = out.then(&base);
        }
        out
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Automorphism) -> Self {
        Automorphism {
            forward: self.forward.compose(&other.forward).unwrap(),
            backward: other.backward.compose(&self.backward).unwrap(),
        }
    }

    /// Same images read over another alphabet of equal rank.
    pub fn renamed(&self, alphabet: &Alphabet) -> Result<Self, FbcError> {
        let conv = |ws: &[Word]| -> Result<Vec<Word>, FbcError> {
            ws.iter().map(|w| w.with_alphabet(alphabet).map_err(FbcError::from)).collect()
        };
        if alphabet.rank() != self.rank() {
            return Err(FbcError::IncompatibleSpec("rank mismatch".into()));
        }
        Automorphism::new(alphabet, conv(self.images())?, conv(self.inverse_images())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn fib() -> Automorphism {
        Automorphism::fibonacci(&Alphabet::new(["b1", "b2"]).unwrap())
    }

    #[test]
    fn fibonacci_growth() {
        let phi = fib();
        let b1 = parse_word("b1", phi.alphabet()).unwrap();
        // F(1..=21), independent recurrence
        let mut fibs = vec![1u64, 1];
        while fibs.len() < 22 {
            let n = fibs.len();
            fibs.push(fibs[n - 1] + fibs[n - 2]);
        }
        let mut cur = b1;
        let mut prev_len = 0;
        for n in 0..=20 {
            assert_eq!(cur.len() as u64, fibs[n], "n = {n}");
            assert!(cur.len() >= prev_len);
            prev_len = cur.len();
            cur = phi.apply(&cur);
        }
    }

    #[test]
    fn bad_inverse_rejected() {
        let ab = Alphabet::new(["b1", "b2"]).unwrap();
        let w = |s| parse_word(s, &ab).unwrap();
        let r = Automorphism::new(&ab, vec![w("b2"), w("b1 b2")], vec![w("b2"), w("b1")]);
        assert!(matches!(r, Err(FbcError::InvalidAutomorphism(_))));
    }

    #[test]
    fn powers_compose() {
        let phi = fib();
        let x = parse_word("b1 b2^-1 b1", phi.alphabet()).unwrap();
        let p3 = phi.power(3);
        assert_eq!(p3.apply(&x), phi.apply(&phi.apply(&phi.apply(&x))));
        assert_eq!(phi.power(-2).apply(&phi.power(2).apply(&x)), x);
        assert_eq!(
            phi.apply_power(x.letters(), -3, 1000).unwrap(),
            phi.power(-3).apply(&x).into_letters()
        );
    }
}
