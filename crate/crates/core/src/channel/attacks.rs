use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use super::{Lattice, Transcript};
use crate::protocol::{ProtocolId, PublicParams, SharedSecret, Transmission};
use crate::words::{Alphabet, Letter, Word};

/// Outcome of one eavesdropper attack.
///
/// `success` is only ever set against a ground-truth oracle; without one the
/// report carries what was recovered and leaves the flag false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AttackReport {
    pub name: String,
    pub applicable: bool,
    pub success: bool,
    /// Structural information visible without any secret.
    pub leak: bool,
    pub recovered: Vec<String>,
    pub work: u64,
    pub notes: Vec<String>,
}

impl AttackReport {
    fn new(name: &str) -> Self {
        AttackReport {
            name: name.into(),
            applicable: true,
            success: false,
            leak: false,
            recovered: Vec::new(),
            work: 0,
            notes: Vec::new(),
        }
    }

    fn not_applicable(name: &str, why: String) -> Self {
        let mut r = Self::new(name);
        r.applicable = false;
        r.notes.push(why);
        r
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = match (self.applicable, self.success) {
            (false, _) => "not applicable",
            (true, true) => "success",
            (true, false) => "not recovered",
        };
        writeln!(out, "attack {}: {status}", self.name).unwrap();
        if self.leak {
            writeln!(out, "structural leak: yes").unwrap();
        }
        writeln!(out, "work: {}", self.work).unwrap();
        for r in &self.recovered {
            writeln!(out, "recovered: {r}").unwrap();
        }
        for n in &self.notes {
            writeln!(out, "note: {n}").unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap()
    }
}

fn requests(transcript: &Transcript, alphabet: &Alphabet) -> Result<Vec<(u64, Transmission)>, String> {
    transcript
        .requests()
        .map(|(i, f)| {
            let text = f.text().map_err(|e| e.to_string())?;
            Transmission::parse(text, alphabet).map(|t| (i, t)).map_err(|e| format!("frame {i}: {e}"))
        })
        .collect()
}

/// Exponent vector of `w` in the coordinates of `target`, matched by name.
fn vector_in(w: &Word, target: &Alphabet) -> Vec<BigInt> {
    let mut v = vec![BigInt::from(0); target.rank()];
    for l in w.letters() {
        let name = w.alphabet().name(l.gen());
        let i = target.index_of(name).expect("generator of the public alphabet") as usize;
        v[i] += l.sign();
    }
    v
}

fn row_word(row: &[BigInt], alphabet: &Alphabet) -> String {
    let parts: Vec<String> = row
        .iter()
        .enumerate()
        .filter(|(_, x)| *x != &BigInt::from(0))
        .map(|(i, x)| {
            let name = alphabet.name(i as u32);
            if *x == BigInt::from(1) {
                name.to_string()
            } else {
                format!("{name}^{x}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// `t x t⁻¹ = φ(x)` abelianizes to `x − φ(x) = 0`.
fn public_relators(pp: &PublicParams, alphabet: &Alphabet) -> Result<Vec<Vec<BigInt>>, String> {
    let Some(p) = &pp.presentation else { return Ok(Vec::new()) };
    let g = p.to_group().map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for (j, img) in g.phi().images().iter().enumerate() {
        let x = Word::generator(g.fiber(), j as u32, false).expect("fiber generator");
        let mut v = vector_in(&x, alphabet);
        for (a, b) in v.iter_mut().zip(vector_in(img, alphabet)) {
            *a -= b;
        }
        out.push(v);
    }
    Ok(out)
}

/// Eve's reconstruction of `H` in the abelianization of the public group:
/// the integer span of every intercepted word plus the public relators.
///
/// With `oracle` the lattice is compared against the true image of `H`.
pub fn attack_subgroup_reconstruction(
    transcript: &Transcript,
    pp: &PublicParams,
    oracle: Option<&SharedSecret>,
) -> AttackReport {
    const NAME: &str = "subgroup";
    let protocol = pp.protocol.0;
    if !matches!(protocol, ProtocolId::I | ProtocolId::IA) {
        return AttackReport::not_applicable(NAME, format!("protocol {protocol} is not a Protocol I variant"));
    }
    let alphabet = match pp.alphabet() {
        Ok(a) => a,
        Err(e) => return AttackReport::not_applicable(NAME, e.to_string()),
    };
    let relators = match public_relators(pp, &alphabet) {
        Ok(r) => r,
        Err(e) => return AttackReport::not_applicable(NAME, e),
    };
    let txs = match requests(transcript, &alphabet) {
        Ok(t) => t,
        Err(e) => return AttackReport::not_applicable(NAME, e),
    };
    let mut report = AttackReport::new(NAME);
    let mut rows = relators.clone();
    let mut intercepts = 0usize;
    for (_, tx) in &txs {
        for w in &tx.words {
            rows.push(vector_in(w, &alphabet));
            intercepts += 1;
        }
    }
    let dim = alphabet.rank();
    let (lattice, ops) = Lattice::span_counted(dim, &rows);
    report.work = ops;
    report.recovered = lattice.rows().iter().map(|r| row_word(r, &alphabet)).collect();
    report.notes.push(format!("{intercepts} intercepted words, lattice rank {}", lattice.rank()));
    match oracle.and_then(|k| truth(k, &alphabet, &relators)) {
        Some(truth) => {
            report.success = truth == lattice;
            if !report.success {
                let extra = lattice.rows().iter().filter(|r| !truth.contains(r)).count();
                let missing = truth.rows().iter().filter(|r| !lattice.contains(r)).count();
                report.notes.push(format!("{extra} recovered rows outside H, {missing} rows of H not reached"));
            }
        }
        None => report.notes.push("no ground truth supplied".into()),
    }
    report
}

fn truth(key: &SharedSecret, alphabet: &Alphabet, relators: &[Vec<BigInt>]) -> Option<Lattice> {
    let mut rows = relators.to_vec();
    match key {
        SharedSecret::Toy { toy, .. } => rows.extend(toy.subgroup().basis().iter().cloned()),
        _ => {
            let d = key.splitting()?;
            if !d.public_alphabet().same(alphabet) {
                return None;
            }
            rows.extend(d.subgroup_generators().iter().map(|w| vector_in(w, alphabet)));
        }
    }
    Some(Lattice::span(alphabet.rank(), &rows))
}

/// Drops every letter of the mask factors. The factor of a letter is
/// visible from its name, so no seed is needed.
pub fn attack_alphabet_partition(transcript: &Transcript, pp: &PublicParams, oracle: Option<&SharedSecret>) -> AttackReport {
    const NAME: &str = "alphabet";
    let protocol = pp.protocol.0;
    let ranks = match (&pp.mask_ranks, protocol) {
        (Some(r), ProtocolId::IB) => r.clone(),
        _ => return AttackReport::not_applicable(NAME, format!("protocol {protocol} has no mask factors")),
    };
    let alphabet = match pp.alphabet() {
        Ok(a) => a,
        Err(e) => return AttackReport::not_applicable(NAME, e.to_string()),
    };
    let masks: usize = ranks.iter().sum();
    if masks >= alphabet.rank() {
        return AttackReport::not_applicable(NAME, "mask ranks exceed the alphabet".into());
    }
    let base = Alphabet::new(alphabet.names()[..alphabet.rank() - masks].iter().cloned()).expect("prefix alphabet");
    let txs = match requests(transcript, &alphabet) {
        Ok(t) => t,
        Err(e) => return AttackReport::not_applicable(NAME, e),
    };
    let mut report = AttackReport::new(NAME);
    let mut matched = 0usize;
    let mut total = 0usize;
    for (frame, tx) in &txs {
        for w in &tx.words {
            total += 1;
            report.work += w.len() as u64;
            let kept: Vec<Letter> = w.letters().iter().copied().filter(|l| (l.gen() as usize) < base.rank()).collect();
            let payload = Word::new(&base, kept).expect("base letters");
            report.recovered.push(format!("frame {frame}: {payload}"));
            if let Some(truth) = oracle.and_then(|k| k.unmask(w, *frame).ok()) {
                if truth.letters() == payload.letters() {
                    matched += 1;
                }
            }
        }
    }
    match oracle {
        Some(_) => {
            report.success = matched == total;
            report.notes.push(format!("{matched}/{total} payloads match the receiver's unmasking"));
        }
        None => report.notes.push("no ground truth supplied".into()),
    }
    report
}

/// Runs of equal letters as `(name, signed count)`.
fn runs(w: &Word) -> Vec<(&str, i64)> {
    let mut out: Vec<(&str, i64)> = Vec::new();
    let mut last: Option<Letter> = None;
    for &l in w.letters() {
        let name = w.alphabet().name(l.gen());
        match out.last_mut() {
            Some(r) if last == Some(l) => r.1 += l.sign(),
            _ => out.push((name, l.sign())),
        }
        last = Some(l);
    }
    out
}

/// `(k, p)` when `w` has the public shape `t⁻ᵏ f⁻ᵖ tᵏ g t⁻ᵏ fᵖ tᵏ`.
fn template_shape(w: &Word) -> Option<(i64, i64)> {
    let r = runs(w);
    let names: Vec<&str> = r.iter().map(|x| x.0).collect();
    let e: Vec<i64> = r.iter().map(|x| x.1).collect();
    let (k, p) = match names.as_slice() {
        ["t", "f1_1", "t", "f2_1", "t", "f1_1", "t"] => {
            let k = e[2];
            let ok = k > 0 && e[0] == -k && e[4] == -k && e[6] == k && e[1] == -e[5] && e[3] == 1;
            (ok.then_some(k)?, e[5])
        }
        ["f1_1", "f2_1", "f1_1"] => {
            let ok = e[0] == -e[2] && e[1] == 1;
            (ok.then_some(0)?, e[2])
        }
        _ => return None,
    };
    (p == 1 || p == 2).then_some((k, p))
}

/// The only inference open to Eve without secrets: `n > m` for the
/// transmitted length `m`. Protocol II templates are also read off their
/// public shape.
pub fn attack_guess_bound(transcript: &Transcript) -> AttackReport {
    let mut report = AttackReport::new("guess");
    for (frame, f) in transcript.requests() {
        let tx = match f.text().map_err(|e| e.to_string()).and_then(|t| Transmission::parse_lenient(t).map_err(|e| e.to_string())) {
            Ok(tx) => tx,
            Err(e) => {
                report.notes.push(format!("frame {frame}: unreadable ({e})"));
                continue;
            }
        };
        let m = tx.letter_count();
        report.work += m as u64;
        report.recovered.push(format!("frame {frame}: protocol {}, m = {m}, bound n > {m}", tx.protocol));
        if tx.protocol == ProtocolId::II {
            if let Some((k, p)) = tx.words.first().and_then(template_shape) {
                report.leak = true;
                report.recovered.push(format!("frame {frame}: template k = {k}, a1 power {p}, message n = {}", 2 * k + p));
            }
        }
    }
    if report.leak {
        report.notes.push("Protocol II template parameter is visible on the wire".into());
    }
    report
}
