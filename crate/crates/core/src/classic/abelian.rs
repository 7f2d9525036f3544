use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ClassicError;
use crate::words::{Alphabet, Letter, Word};

/// Free abelian group Zᵖ on generators `e1 … ep`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianPlatform {
    alphabet: Alphabet,
}

impl AbelianPlatform {
    pub fn new(dim: usize) -> Self {
        AbelianPlatform { alphabet: Alphabet::indexed("e", dim) }
    }

    pub fn dim(&self) -> usize {
        self.alphabet.rank()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Exponent vector; words over Zᵖ are equal iff these agree.
    pub fn vector(&self, w: &Word) -> Vec<BigInt> {
        w.exponent_vector().into_iter().map(BigInt::from).collect()
    }

    /// Canonical word `e1^v1 e2^v2 …`.
    pub fn word(&self, v: &[BigInt]) -> Word {
        let mut letters = Vec::new();
        for (g, x) in v.iter().enumerate() {
            let n = usize::try_from(x.magnitude()).expect("exponent fits in memory");
            letters.extend(std::iter::repeat_n(Letter::new(g as u32, x.is_negative()), n));
        }
        Word::new(&self.alphabet, letters).expect("abelian letters")
    }
}

/// A full-rank sublattice `H < Zᵖ` given by basis rows.
///
/// `ℓ_H(h)` is the ℓ¹ norm of the (unique) coordinates of `h` in the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianSubgroup {
    basis: Vec<Vec<BigInt>>,
}

impl AbelianSubgroup {
    pub fn new(basis: Vec<Vec<BigInt>>) -> Result<Self, ClassicError> {
        let p = basis.len();
        if p == 0 || basis.iter().any(|r| r.len() != p) {
            return Err(ClassicError::SingularBasis);
        }
        let s = AbelianSubgroup { basis };
        // singular iff some unit vector scaled by det is unsolvable
        if s.solve(&vec![BigInt::zero(); p]).is_none() {
            return Err(ClassicError::SingularBasis);
        }
        Ok(s)
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ cᵢ·Bᵢ`.
    pub fn combine(&self, coeffs: &[BigInt]) -> Vec<BigInt> {
        let p = self.dim();
        let mut out = vec![BigInt::zero(); p];
        for (c, row) in coeffs.iter().zip(&self.basis) {
            for (o, x) in out.iter_mut().zip(row) {
                *o += c * x;
            }
        }
        out
    }

    /// Rational solution of `c·B = h`; `None` when `B` is singular.
    fn solve(&self, h: &[BigInt]) -> Option<Vec<BigRational>> {
        let p = self.dim();
        // augmented system Bᵀ c = h
        let mut m: Vec<Vec<BigRational>> = (0..p)
            .map(|i| {
                let mut row: Vec<BigRational> =
                    (0..p).map(|j| BigRational::from_integer(self.basis[j][i].clone())).collect();
                row.push(BigRational::from_integer(h[i].clone()));
                row
            })
            .collect();
        for col in 0..p {
            let pivot = (col..p).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, pivot);
            let inv = BigRational::one() / m[col][col].clone();
            for x in m[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..p {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=p {
                        let delta = &f * &m[col][c];
                        m[r][c] -= delta;
                    }
                }
            }
        }
        Some(m.into_iter().map(|row| row[p].clone()).collect())
    }

    /// Integer coordinates of `h`, or `None` if `h ∉ H`.
    pub fn coordinates(&self, h: &[BigInt]) -> Option<Vec<BigInt>> {
        if h.len() != self.dim() {
            return None;
        }
        let sol = self.solve(h)?;
        sol.into_iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    pub fn contains(&self, h: &[BigInt]) -> bool {
        self.coordinates(h).is_some()
    }

    /// `ℓ_H(h)`.
    pub fn intrinsic_length(&self, h: &[BigInt]) -> Option<BigUint> {
        self.coordinates(h)
            .map(|c| c.iter().map(|x| x.magnitude().clone()).sum())
    }
}
