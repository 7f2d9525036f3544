//! Canonical text form.
//!
//! ```text
//! word  := "1" | token (SP token)*
//! token := name | name "^" int
//! int   := "-"? [1-9][0-9]*
//! ```

use std::fmt::Write;

use super::alphabet::valid_name;
use super::{Alphabet, Letter, Word, WordError};

fn parse_exponent(tok: &str, exp: &str) -> Result<i64, WordError> {
    let digits = exp.strip_prefix('-').unwrap_or(exp);
    if digits == "0" {
        return Err(WordError::ZeroExponent);
    }
    let well_formed = !digits.is_empty()
        && digits.bytes().all(|b| b.is_ascii_digit())
        && !digits.starts_with('0');
    if !well_formed {
        return Err(WordError::MalformedToken(tok.to_string()));
    }
    exp.parse::<i64>()
        .map_err(|_| WordError::MalformedToken(tok.to_string()))
}

/// Split a token into its generator name and exponent.
fn split_token(tok: &str) -> Result<(&str, i64), WordError> {
    let (name, k) = match tok.split_once('^') {
        Some((name, exp)) => (name, parse_exponent(tok, exp)?),
        None => (tok, 1),
    };
    if !valid_name(name) {
        return Err(WordError::MalformedToken(tok.to_string()));
    }
    Ok((name, k))
}

fn letters_from_text<F>(text: &str, mut lookup: F) -> Result<Vec<Letter>, WordError>
where
    F: FnMut(&str) -> Result<u32, WordError>,
{
    let tokens: Vec<&str> = text.split_whitespace().collect();
    match tokens.as_slice() {
        [] => return Err(WordError::MalformedToken(String::new())),
        ["1"] => return Ok(Vec::new()),
        _ => {}
    }
    let mut letters = Vec::new();
    for tok in tokens {
        let (name, k) = split_token(tok)?;
        let gen = lookup(name)?;
        let l = Letter::new(gen, k < 0);
        letters.extend(std::iter::repeat_n(l, k.unsigned_abs() as usize));
    }
    Ok(letters)
}

/// Parse the text form over a known alphabet. Powers are expanded.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word, WordError> {
    let letters = letters_from_text(text, |name| {
        alphabet
            .index_of(name)
            .ok_or_else(|| WordError::UnknownGenerator(name.to_string()))
    })?;
    Ok(Word::from_raw(alphabet, letters))
}

/// Parse without a declared alphabet: generators are numbered in order of
/// first appearance. Used by observers that only see the wire.
pub fn parse_word_lenient(text: &str) -> Result<Word, WordError> {
    let mut names: Vec<String> = Vec::new();
    let letters = letters_from_text(text, |name| {
        Ok(match names.iter().position(|n| n == name) {
            Some(i) => i as u32,
            None => {
                names.push(name.to_string());
                (names.len() - 1) as u32
            }
        })
    })?;
    if names.is_empty() {
        names.push("e".into());
    }
    let alphabet = Alphabet::new(names)?;
    Ok(Word::from_raw(&alphabet, letters))
}

/// Canonical text: runs collapsed to powers, single spaces, `1` for the
/// empty word.
pub fn serialize_word(w: &Word) -> String {
    let letters = w.letters();
    if letters.is_empty() {
        return "1".to_string();
    }
    let alphabet = w.alphabet();
    let mut out = String::with_capacity(letters.len() * 3);
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut j = i + 1;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        let run = (j - i) as i64;
        if i > 0 {
            out.push(' ');
        }
        out.push_str(alphabet.name(l.gen()));
        let k = if l.is_inverse() { -run } else { run };
        if k != 1 {
            write!(out, "^{k}").unwrap();
        }
        i = j;
    }
    out
}
