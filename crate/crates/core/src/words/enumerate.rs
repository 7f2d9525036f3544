//! Length-lexicographic bijection between ℕ and freely reduced words.
//!
//! Words are ordered by length, then lexicographically in the letter order
//! `g1 < g1⁻¹ < g2 < …`. Within a fixed length the index is a mixed-radix
//! number: the first letter has `2r` choices, every later letter `2r − 1`
//! (anything but the inverse of its predecessor).

use super::{Alphabet, Letter, Word, WordError};

/// Number of reduced words of length exactly `len` over a rank-`rank` alphabet.
pub fn count_of_length(rank: usize, len: usize) -> Option<u64> {
    if len == 0 {
        return Some(1);
    }
    let r = rank as u64;
    let tail = (2 * r - 1).checked_pow(u32::try_from(len - 1).ok()?)?;
    (2 * r).checked_mul(tail)
}

/// Number of reduced words of length at most `max_len`.
pub fn count_up_to(rank: usize, max_len: usize) -> Option<u64> {
    (0..=max_len).try_fold(0u64, |acc, l| acc.checked_add(count_of_length(rank, l)?))
}

pub fn index_to_word(index: u64, alphabet: &Alphabet) -> Word {
    let rank = alphabet.rank();
    let mut rest = index;
    let mut len = 0usize;
    loop {
        match count_of_length(rank, len) {
            Some(c) if rest >= c => {
                rest -= c;
                len += 1;
            }
            _ => break,
        }
    }
    let branch = 2 * rank as u64 - 1;
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    for pos in 0..len {
        let weight = branch.pow((len - 1 - pos) as u32);
        let digit = (rest / weight) as u32;
        rest %= weight;
        let code = match letters.last() {
            None => digit,
            Some(prev) => {
                let forbidden = prev.inverse().code();
                if digit < forbidden {
                    digit
                } else {
                    digit + 1
                }
            }
        };
        letters.push(Letter::from_code(code));
    }
    Word::from_raw(alphabet, letters)
}

pub fn word_to_index(w: &Word) -> Result<u64, WordError> {
    if !w.is_reduced() {
        return Err(WordError::NotReduced);
    }
    let rank = w.alphabet().rank();
    let len = w.len();
    let offset = count_up_to(rank, len.saturating_sub(1)).ok_or(WordError::IndexOverflow)?;
    let offset = if len == 0 { 0 } else { offset };
    let branch = 2 * rank as u64 - 1;
    let mut within: u64 = 0;
    let mut prev: Option<Letter> = None;
    for &l in w.letters() {
        let digit = match prev {
            None => l.code() as u64,
            Some(p) => {
                let forbidden = p.inverse().code();
                (if l.code() > forbidden { l.code() - 1 } else { l.code() }) as u64
            }
        };
        let base = if prev.is_none() { 2 * rank as u64 } else { branch };
        debug_assert!(digit < base);
        within = within
            .checked_mul(branch)
            .and_then(|x| x.checked_add(digit))
            .ok_or(WordError::IndexOverflow)?;
        prev = Some(l);
    }
    offset.checked_add(within).ok_or(WordError::IndexOverflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_indices_rank_two() {
        let ab = Alphabet::standard(2);
        let expect = ["1", "a", "a^-1", "b", "b^-1"];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(index_to_word(i as u64, &ab).to_string(), *e);
        }
    }

    /// Brute force: all reduced words of each length, sorted by letter order.
    fn brute_force(rank: usize, max_len: usize) -> Vec<Vec<Letter>> {
        let mut out = vec![vec![]];
        let mut layer: Vec<Vec<Letter>> = vec![vec![]];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for code in 0..(2 * rank as u32) {
                    let l = Letter::from_code(code);
                    if w.last().map(|p| p.inverse()) == Some(l) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    #[test]
    fn matches_brute_force_enumeration() {
        for rank in 1..=3 {
            let ab = Alphabet::standard(rank);
            let all = brute_force(rank, 5);
            for (i, w) in all.iter().enumerate() {
                assert_eq!(index_to_word(i as u64, &ab).letters(), w.as_slice());
            }
        }
        // i = 5 over rank 2 is "a a"
        assert_eq!(index_to_word(5, &Alphabet::standard(2)).to_string(), "a^2");
    }

    #[test]
    fn counts() {
        assert_eq!(count_of_length(2, 0), Some(1));
        assert_eq!(count_of_length(2, 1), Some(4));
        assert_eq!(count_of_length(2, 3), Some(36));
        assert_eq!(count_up_to(2, 2), Some(1 + 4 + 12));
        assert_eq!(count_of_length(3, 100), None);
    }

    #[test]
    fn exhaustive_bijection_small_indices() {
        for rank in 1..=3 {
            let ab = Alphabet::standard(rank);
            for i in 0..10_000u64 {
                let w = index_to_word(i, &ab);
                assert!(w.is_reduced());
                assert_eq!(word_to_index(&w).unwrap(), i);
            }
        }
    }

    #[test]
    fn unreduced_rejected() {
        let ab = Alphabet::standard(2);
        let w = super::super::parse_word("a a^-1", &ab).unwrap();
        assert_eq!(word_to_index(&w), Err(WordError::NotReduced));
    }
}
