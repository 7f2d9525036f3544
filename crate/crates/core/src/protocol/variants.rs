use super::basic::{decode_i, encode_i};
use super::{Prng, ProtocolError};
use crate::fbc::{membership_test, SplittingDescriptor};
use crate::words::{count_up_to, index_to_word, Alphabet, Letter, Word};

/// Decoys and masks are drawn from reduced words of at most this length.
pub const RANDOM_WORD_MAX_LEN: usize = 8;

fn random_word(prng: &mut Prng, alphabet: &Alphabet) -> Word {
    let count = count_up_to(alphabet.rank(), RANDOM_WORD_MAX_LEN).expect("index space fits in u64");
    index_to_word(prng.below(count), alphabet)
}

/// A public word outside `H`.
pub fn decoy(prng: &mut Prng, d: &SplittingDescriptor) -> Word {
    let w = random_word(prng, d.public_alphabet());
    if d.weight(&w) != 0 {
        return w;
    }
    let g = d.hom_weights().iter().position(|&x| x != 0).expect("some generator has nonzero weight") as u32;
    // repeat the sign of a trailing g so the word stays reduced
    let l = match w.letters().last() {
        Some(&last) if last.gen() == g => last,
        _ => Letter::pos(g),
    };
    let mut letters = w.into_letters();
    letters.push(l);
    Word::new(d.public_alphabet(), letters).unwrap()
}

/// Payload plus `count` decoys, shuffled.
pub fn encode_ia(n: u64, d: &SplittingDescriptor, count: usize, prng: &mut Prng) -> Result<Vec<Word>, ProtocolError> {
    let mut words = vec![encode_i(n, d)?.word];
    words.extend((0..count).map(|_| decoy(prng, d)));
    prng.shuffle(&mut words);
    Ok(words)
}

pub fn decode_ia(words: &[Word], d: &SplittingDescriptor) -> Result<u64, ProtocolError> {
    let mut members = words.iter().filter(|w| membership_test(w, d));
    let w = members.next().ok_or(ProtocolError::NoMemberFound)?;
    if members.next().is_some() {
        return Err(ProtocolError::MultipleMembersFound);
    }
    decode_i(w, d)
}

/// `D₁ * D₂ * … * D_k`: the public group followed by free factors with
/// generators `d2_1.., d3_1..`.
#[derive(Clone, Debug)]
pub struct MaskedPlatform {
    splitting: SplittingDescriptor,
    ranks: Vec<usize>,
    masks: Alphabet,
    alphabet: Alphabet,
}

impl MaskedPlatform {
    pub fn new(splitting: SplittingDescriptor, ranks: Vec<usize>) -> Result<Self, ProtocolError> {
        if ranks.is_empty() || ranks.contains(&0) {
            return Err(ProtocolError::Key("mask factor ranks must be positive".into()));
        }
        let names: Vec<String> = ranks
            .iter()
            .enumerate()
            .flat_map(|(f, &r)| (1..=r).map(move |j| format!("d{}_{}", f + 2, j)))
            .collect();
        let masks = Alphabet::new(names)?;
        let alphabet = splitting.public_alphabet().union(&masks)?;
        Ok(MaskedPlatform { splitting, ranks, masks, alphabet })
    }

    pub fn splitting(&self) -> &SplittingDescriptor {
        &self.splitting
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Generators of `D₂ * … * D_k`.
    pub fn mask_alphabet(&self) -> &Alphabet {
        &self.masks
    }

    /// Full public alphabet.
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn offset(&self) -> u32 {
        self.splitting.public_alphabet().rank() as u32
    }

    fn mask(&self, prng: &mut Prng) -> Vec<Letter> {
        let off = self.offset();
        random_word(prng, &self.masks)
            .letters()
            .iter()
            .map(|l| Letter::new(l.gen() + off, l.is_inverse()))
            .collect()
    }

    pub fn is_mask_letter(&self, l: Letter) -> bool {
        l.gen() >= self.offset()
    }

    /// `a_0 d_1 a_1 … d_m a_m`.
    pub fn encode(&self, n: u64, prng: &mut Prng) -> Result<(Word, Word), ProtocolError> {
        let payload = encode_i(n, &self.splitting)?.word;
        let mut letters = self.mask(prng);
        for &l in payload.letters() {
            letters.push(l);
            letters.extend(self.mask(prng));
        }
        Ok((Word::new(&self.alphabet, letters)?, payload))
    }

    /// Regenerates the masks and strips them by position.
    pub fn strip(&self, w: &Word, prng: &mut Prng) -> Result<Word, ProtocolError> {
        if !w.alphabet().same(&self.alphabet) {
            return Err(ProtocolError::NotInSubgroup);
        }
        let letters = w.letters();
        let mut pos = self.mask(prng).len();
        let mut payload = Vec::new();
        while pos < letters.len() {
            let l = letters[pos];
            if self.is_mask_letter(l) {
                return Err(ProtocolError::NotInSubgroup);
            }
            payload.push(l);
            pos += 1 + self.mask(prng).len();
        }
        if pos != letters.len() {
            return Err(ProtocolError::NotInSubgroup);
        }
        Ok(Word::new(self.splitting.public_alphabet(), payload)?)
    }

    pub fn decode(&self, w: &Word, prng: &mut Prng) -> Result<u64, ProtocolError> {
        decode_i(&self.strip(w, prng)?, &self.splitting)
    }
}
