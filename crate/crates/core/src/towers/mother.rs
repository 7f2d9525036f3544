use std::collections::HashSet;
use std::fmt::Write;

use super::TowerError;
use crate::words::{Alphabet, Letter, SubstitutionTable, Word};

/// `B_1 B_2 … B_{k−1} a_k` with `B_i = a_i (a_i a_{i+1}) (a_i a_{i+2}) … (a_i a_k)`.
pub fn mother_word(k: usize) -> Word {
    assert!(k >= 2, "mother word needs k >= 2");
    let alphabet = Alphabet::indexed("a", k);
    let mut letters = Vec::with_capacity(k * k);
    for i in 0..k as u32 - 1 {
        letters.push(Letter::pos(i));
        for j in i + 1..k as u32 {
            letters.push(Letter::pos(i));
            letters.push(Letter::pos(j));
        }
    }
    letters.push(Letter::pos(k as u32 - 1));
    Word::new(&alphabet, letters).unwrap()
}

/// Every ordered two-letter subword occurs at most once.
pub fn validate_subword_once(w: &Word) -> Result<bool, TowerError> {
    if !w.is_positive() {
        return Err(TowerError::NotPositive);
    }
    let mut seen = HashSet::new();
    Ok(w.letters().windows(2).all(|p| seen.insert((p[0], p[1]))))
}

/// Relator words `w_{ij}` for one level of the tower.
///
/// Level 1 has one stable letter and `r` words; level 2 has `r` stable
/// letters and `r²` words each. All words have length `r`.
#[derive(Clone, Debug)]
pub struct RelatorTable {
    branching: usize,
    level: u32,
    alphabet: Alphabet,
    rows: Vec<Vec<Word>>,
}

impl RelatorTable {
    pub fn new(r: usize, level: u32) -> Result<Self, TowerError> {
        if r < 2 {
            return Err(TowerError::InvalidParameter(format!("branching {r} < 2")));
        }
        let (stable, gens) = match level {
            1 => (1, r),
            2 => (r, r * r),
            _ => return Err(TowerError::InvalidParameter(format!("level {level}"))),
        };
        let mother = mother_word(gens);
        let alphabet = mother.alphabet().clone();
        let chunks: Vec<Word> = mother
            .letters()
            .chunks(r)
            .map(|c| Word::new(&alphabet, c.to_vec()).unwrap())
            .collect();
        let rows = chunks.chunks(gens).map(<[Word]>::to_vec).collect::<Vec<_>>();
        debug_assert_eq!(rows.len(), stable);
        Ok(RelatorTable { branching: r, level, alphabet, rows })
    }

    pub fn branching(&self) -> usize {
        self.branching
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Generators `a1..a_k` with `k = r^level`.
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn level_rank(&self) -> usize {
        self.alphabet.rank()
    }

    pub fn stable_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Word>] {
        &self.rows
    }

    /// `w_{ij}`, 1-based.
    pub fn word(&self, i: usize, j: usize) -> &Word {
        &self.rows[i - 1][j - 1]
    }

    /// `a_j ↦ w_{ij}`.
    pub fn substitution(&self, i: usize) -> SubstitutionTable {
        SubstitutionTable::new(&self.alphabet, &self.alphabet, self.rows[i - 1].clone()).unwrap()
    }

    pub fn concatenated(&self) -> Word {
        let letters = self.rows.iter().flatten().flat_map(|w| w.letters().iter().copied()).collect();
        Word::new(&self.alphabet, letters).unwrap()
    }

    /// Positivity, lengths, row shape and the subword condition on the mother word.
    pub fn validate(&self) -> bool {
        let r = self.branching;
        let shape = self.rows.iter().all(|row| row.len() == self.level_rank())
            && self.rows.iter().flatten().all(|w| w.len() == r && w.is_positive());
        shape && self.concatenated() == mother_word(self.level_rank()) && validate_subword_once(&self.concatenated()) == Ok(true)
    }

    /// Lines `w[i][j] = <word>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, w) in row.iter().enumerate() {
                writeln!(out, "w[{}][{}] = {}", i + 1, j + 1, w).unwrap();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    #[test]
    fn small_mother_words() {
        assert_eq!(mother_word(2).to_string(), "a1^2 a2^2");
        assert_eq!(mother_word(3).to_string(), "a1^2 a2 a1 a3 a2^2 a3^2");
    }

    #[test]
    fn mother_word_14_prefix() {
        let w = mother_word(14);
        assert_eq!(w.len(), 196);
        let head = Word::new(w.alphabet(), w.letters()[..14].to_vec()).unwrap();
        let w11 = parse_word("a1 a1 a2 a1 a3 a1 a4 a1 a5 a1 a6 a1 a7 a1", w.alphabet()).unwrap();
        assert_eq!(head, w11);
    }

    #[test]
    fn subword_once() {
        let ab = Alphabet::indexed("a", 2);
        assert_eq!(validate_subword_once(&parse_word("a1 a2 a1 a2", &ab).unwrap()), Ok(false));
        assert_eq!(validate_subword_once(&parse_word("a1", &ab).unwrap()), Ok(true));
        assert_eq!(validate_subword_once(&parse_word("a1^-1", &ab).unwrap()), Err(TowerError::NotPositive));
        for k in (2..=20).chain([196]) {
            let w = mother_word(k);
            assert_eq!(w.len(), k * k);
            assert_eq!(validate_subword_once(&w), Ok(true), "k = {k}");
        }
    }

    #[test]
    fn tables() {
        let t = RelatorTable::new(2, 1).unwrap();
        assert_eq!(t.word(1, 1).to_string(), "a1^2");
        assert_eq!(t.word(1, 2).to_string(), "a2^2");
        let t = RelatorTable::new(14, 1).unwrap();
        assert_eq!(t.word(1, 1).to_string(), "a1^2 a2 a1 a3 a1 a4 a1 a5 a1 a6 a1 a7 a1");
        assert!(t.validate());
        let t = RelatorTable::new(14, 2).unwrap();
        assert_eq!(t.stable_count(), 14);
        assert_eq!(t.rows().iter().map(Vec::len).sum::<usize>(), 2744);
        assert_eq!(t.concatenated().len(), 38416);
        assert!(t.validate());
        assert!(t.to_text().starts_with("w[1][1] = a1^2 a2 a1 a3"));
    }
}
