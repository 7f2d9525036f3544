use crate::exec::Exec;

use super::{Alphabet, Letter, Word, WordError};

/// A homomorphism between free groups, given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionTable {
    domain: Alphabet,
    codomain: Alphabet,
    images: Vec<Word>,
    inverse_images: Vec<Vec<Letter>>,
}

const PAR_CHUNK: usize = 1 << 16;

impl SubstitutionTable {
    pub fn new(domain: &Alphabet, codomain: &Alphabet, images: Vec<Word>) -> Result<Self, WordError> {
        if images.len() != domain.rank() {
            return Err(WordError::InvalidAlphabet(format!(
                "{} images for {} generators",
                images.len(),
                domain.rank()
            )));
        }
        if images.iter().any(|w| !w.alphabet().same(codomain)) {
            return Err(WordError::AlphabetMismatch);
        }
        let inverse_images = images.iter().map(|w| w.invert().into_letters()).collect();
        Ok(SubstitutionTable {
            domain: domain.clone(),
            codomain: codomain.clone(),
            images,
            inverse_images,
        })
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        Self::rename(alphabet, alphabet)
    }

    /// Generator `i` of `domain` ↦ generator `i` of `codomain`.
    pub fn rename(domain: &Alphabet, codomain: &Alphabet) -> Self {
        assert!(domain.rank() <= codomain.rank());
        let images = (0..domain.rank() as u32)
            .map(|g| Word::from_raw(codomain, vec![Letter::pos(g)]))
            .collect();
        Self::new(domain, codomain, images).expect("rename table")
    }

    pub fn domain(&self) -> &Alphabet {
        &self.domain
    }

    pub fn codomain(&self) -> &Alphabet {
        &self.codomain
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, gen: u32) -> &Word {
        &self.images[gen as usize]
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Word::len).max().unwrap_or(0)
    }

    /// Image of a letter, as a slice.
    #[inline]
    pub fn letter_image(&self, l: Letter) -> &[Letter] {
        if l.is_inverse() {
            &self.inverse_images[l.gen() as usize]
        } else {
            self.images[l.gen() as usize].letters()
        }
    }

    /// Unreduced image of a raw letter slice (domain letters assumed).
    pub fn apply_letters(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::with_capacity(letters.len() * self.max_image_len().max(1));
        for &l in letters {
            out.extend_from_slice(self.letter_image(l));
        }
        out
    }

    /// Freely reduced image of a raw letter slice.
    pub fn apply_letters_reduced(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::with_capacity(letters.len());
        for &l in letters {
            for &m in self.letter_image(l) {
                super::reduce_push(&mut out, m);
            }
        }
        out
    }

    /// Homomorphic image, unreduced.
    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        self.apply_with(w, Exec::Sequential)
    }

    pub fn apply_with(&self, w: &Word, exec: Exec) -> Result<Word, WordError> {
        if !w.alphabet().same(&self.domain) {
            return Err(WordError::AlphabetMismatch);
        }
        let letters = exec.flat_map_chunks(w.letters(), PAR_CHUNK, |c| self.apply_letters(c));
        Ok(Word::from_raw(&self.codomain, letters))
    }

    /// `then ∘ self`.
    pub fn compose(&self, then: &SubstitutionTable) -> Result<SubstitutionTable, WordError> {
        if !self.codomain.same(&then.domain) {
            return Err(WordError::AlphabetMismatch);
        }
        let images = self
            .images
            .iter()
            .map(|w| then.apply(w).map(|x| x.free_reduce()))
            .collect::<Result<Vec<_>, _>>()?;
        SubstitutionTable::new(&self.domain, &then.codomain, images)
    }
}
