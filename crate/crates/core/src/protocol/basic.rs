use super::ProtocolError;
use crate::fbc::{lemma41_rewrite, FbcError, SplittingDescriptor};
use crate::words::{reduce_push, Letter, Word};

/// One factor of the payload: `s^k b_j^{±1} s^-k`, of fiber length `len`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Piece {
    pub k: u32,
    pub letter: Letter,
    pub len: usize,
}

/// Protocol I ciphertext with the data the sender used to build it.
#[derive(Clone, Debug)]
pub struct EncodedI {
    pub word: Word,
    pub pieces: Vec<Piece>,
}

/// `φ^k(b_j)` for every `k` whose image still fits in `max_len`,
/// largest first, ties by smaller `k` then smaller `j`.
fn piece_catalogue(d: &SplittingDescriptor, max_len: usize) -> Vec<(Piece, Vec<Letter>)> {
    let phi = d.automorphism();
    let mut out = Vec::new();
    for j in 0..d.fiber_rank() as u32 {
        let mut cur = vec![Letter::pos(j)];
        for k in 0..=64u32 {
            if cur.len() > max_len {
                break;
            }
            // a piece no longer than one already listed for this j adds nothing
            let stalled = out.iter().any(|(p, _): &(Piece, Vec<Letter>)| p.letter.gen() == j && p.len >= cur.len());
            if !stalled || k == 0 {
                out.push((Piece { k, letter: Letter::pos(j), len: cur.len() }, cur.clone()));
            }
            cur = phi.forward().apply_letters_reduced(&cur);
        }
    }
    out.sort_by(|(a, _), (b, _)| b.len.cmp(&a.len).then(a.k.cmp(&b.k)).then(a.letter.cmp(&b.letter)));
    out
}

/// Greedy by growth, then verified by running the receiver's pipeline.
pub fn encode_i(n: u64, d: &SplittingDescriptor) -> Result<EncodedI, ProtocolError> {
    if n == 0 {
        return Err(ProtocolError::InvalidMessage(n));
    }
    let cap = d.secret_group().cap();
    if n > cap as u64 {
        return Err(ProtocolError::EncodingCapExceeded(cap));
    }
    let n = n as usize;
    let catalogue = piece_catalogue(d, n);
    let mut h: Vec<Letter> = Vec::with_capacity(n);
    let mut pieces = Vec::new();
    while h.len() < n {
        let rem = n - h.len();
        let last = h.last().copied();
        let pick = catalogue
            .iter()
            .find(|(p, letters)| p.len <= rem && Some(letters[0].inverse()) != last)
            .map(|(p, letters)| (*p, letters.clone()));
        let (piece, letters) = match pick {
            Some(x) => x,
            // rank one with a trailing inverse letter: extend the run
            None => {
                let l = last.expect("catalogue has single letters");
                (Piece { k: 0, letter: l, len: 1 }, vec![l])
            }
        };
        let before = h.len();
        for l in letters {
            reduce_push(&mut h, l);
        }
        if h.len() != before + piece.len {
            return Err(ProtocolError::VerifyFailed { expected: n as u64, got: h.len() as u64 });
        }
        pieces.push(piece);
    }
    let secret = d.secret_group();
    let s = secret.stable();
    let mut v: Vec<Letter> = Vec::new();
    for p in &pieces {
        for _ in 0..p.k {
            reduce_push(&mut v, s);
        }
        reduce_push(&mut v, p.letter);
        for _ in 0..p.k {
            reduce_push(&mut v, s.inverse());
        }
    }
    let v = Word::new(secret.alphabet(), v)?;
    let word = d.to_public().apply(&v)?.free_reduce();
    let got = decode_i(&word, d)?;
    if got != n as u64 {
        return Err(ProtocolError::VerifyFailed { expected: n as u64, got });
    }
    Ok(EncodedI { word, pieces })
}

/// `ℓ_H` of the rewritten word.
pub fn decode_i(w: &Word, d: &SplittingDescriptor) -> Result<u64, ProtocolError> {
    match lemma41_rewrite(w, d) {
        Ok(r) => Ok(r.word.len() as u64),
        Err(FbcError::NotInSubgroup) => Err(ProtocolError::NotInSubgroup),
        Err(e) => Err(e.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    #[test]
    fn small_messages() {
        let d = SplittingDescriptor::fibonacci();
        let e = encode_i(1, &d).unwrap();
        assert_eq!(e.word.to_string(), "a_1");
        let e = encode_i(5, &d).unwrap();
        assert_eq!(e.pieces.len(), 1);
        assert_eq!(e.word.to_string(), "t^3 a_2 t^-3");
        assert_eq!(decode_i(&e.word, &d).unwrap(), 5);
        assert!(encode_i(0, &d).is_err());
    }

    #[test]
    fn compresses_large_messages() {
        let d = SplittingDescriptor::fibonacci();
        for n in [32u64, 100, 1000, 10_000, 123_457] {
            let e = encode_i(n, &d).unwrap();
            assert!((e.word.len() as u64) < n, "n = {n}, m = {}", e.word.len());
            assert_eq!(decode_i(&e.word, &d).unwrap(), n);
        }
    }

    #[test]
    fn tampered_word_rejected() {
        let d = SplittingDescriptor::fibonacci();
        let e = encode_i(7, &d).unwrap();
        let t = parse_word("t", d.public_alphabet()).unwrap();
        let bad = e.word.concat(&t).unwrap();
        assert_eq!(decode_i(&bad, &d), Err(ProtocolError::NotInSubgroup));
    }
}
