use num_bigint::BigUint;

use super::{g1_expand, RelatorTable, TowerError, TowerLength};
use crate::exec::Exec;
use crate::words::{Alphabet, Letter, Word};

/// `w₂ = w₁⁻¹ f2_1 w₁` with `w₁ = t⁻ⁿ f1_1^p tⁿ`, `p ∈ {1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct W2Template {
    pub n: u64,
    pub a1_power: u32,
}

impl W2Template {
    pub fn new(n: u64) -> Self {
        W2Template { n, a1_power: 1 }
    }

    pub fn padded(n: u64) -> Self {
        W2Template { n, a1_power: 2 }
    }

    /// Letters of the literal word.
    pub fn letter_count(&self) -> u64 {
        4 * self.n + 2 * self.a1_power as u64 + 1
    }
}

/// `G₁ *_{F₁} G_r` over generators `f1_1..f1_r, t, f2_1..f2_{r²}, t1..tr`.
#[derive(Clone, Debug)]
pub struct Amalgam {
    r: usize,
    level1: RelatorTable,
    level2: RelatorTable,
    alphabet: Alphabet,
}

impl Amalgam {
    pub fn new(r: usize) -> Result<Self, TowerError> {
        let level1 = RelatorTable::new(r, 1)?;
        let level2 = RelatorTable::new(r, 2)?;
        let names = (1..=r)
            .map(|j| format!("f1_{j}"))
            .chain(["t".to_string()])
            .chain((1..=r * r).map(|j| format!("f2_{j}")))
            .chain((1..=r).map(|i| format!("t{i}")));
        Ok(Amalgam { r, level1, level2, alphabet: Alphabet::new(names)? })
    }

    pub fn branching(&self) -> usize {
        self.r
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn level1(&self) -> &RelatorTable {
        &self.level1
    }

    pub fn level2(&self) -> &RelatorTable {
        &self.level2
    }

    fn f1(&self, j: usize) -> u32 {
        (j - 1) as u32
    }

    fn t(&self) -> u32 {
        self.r as u32
    }

    fn f2(&self, j: usize) -> u32 {
        (self.r + j) as u32
    }

    pub fn encode(&self, tpl: W2Template) -> Word {
        let n = tpl.n as usize;
        let p = tpl.a1_power as usize;
        let (t, a, b) = (Letter::pos(self.t()), Letter::pos(self.f1(1)), Letter::pos(self.f2(1)));
        let mut letters = Vec::with_capacity(tpl.letter_count() as usize);
        let conj = |letters: &mut Vec<Letter>, x: Letter| {
            letters.extend(std::iter::repeat_n(t.inverse(), n));
            letters.extend(std::iter::repeat_n(x, p));
            letters.extend(std::iter::repeat_n(t, n));
        };
        conj(&mut letters, a.inverse());
        letters.push(b);
        conj(&mut letters, a);
        Word::new(&self.alphabet, letters).unwrap()
    }

    pub fn decode(&self, w: &Word) -> Result<W2Template, TowerError> {
        let mismatch = || TowerError::TemplateMismatch(w.to_string());
        if !w.alphabet().same(&self.alphabet) {
            return Err(TowerError::TemplateMismatch("alphabet".into()));
        }
        let mut runs: Vec<(Letter, u64)> = Vec::new();
        for &l in w.letters() {
            match runs.last_mut() {
                Some((m, c)) if *m == l => *c += 1,
                _ => runs.push((l, 1)),
            }
        }
        let (n, p) = match runs.len() {
            3 => (0, runs[0].1),
            7 => (runs[0].1, runs[1].1),
            _ => return Err(mismatch()),
        };
        if !(1..=2).contains(&p) {
            return Err(mismatch());
        }
        let tpl = W2Template { n, a1_power: p as u32 };
        // the runs of the encoded word fully determine it
        let (t, a, b) = (Letter::pos(self.t()), Letter::pos(self.f1(1)), Letter::pos(self.f2(1)));
        let expect: Vec<(Letter, u64)> = if n == 0 {
            vec![(a.inverse(), p), (b, 1), (a, p)]
        } else {
            vec![(t.inverse(), n), (a.inverse(), p), (t, n), (b, 1), (t.inverse(), n), (a, p), (t, n)]
        };
        if runs == expect {
            Ok(tpl)
        } else {
            Err(mismatch())
        }
    }

    /// `ℓ_{F₁}(w₁) = p · rⁿ`.
    pub fn f1_length(&self, tpl: W2Template) -> TowerLength {
        TowerLength::power(tpl.a1_power as u64, self.r as u64, TowerLength::exact(tpl.n))
    }

    /// `ℓ_{F₂}(w₂) = r^(p · rⁿ)`.
    pub fn f2_length(&self, tpl: W2Template) -> TowerLength {
        TowerLength::power(1, self.r as u64, self.f1_length(tpl))
    }

    /// Rewrites `w₂` into a positive word over `F₂`:
    /// expand `w₁` in `G₁`, move it into `G_r` via `f1_j ↦ t_j`, then pinch
    /// `t_i⁻¹ X t_i ↦ X(w_{i·})` from the inside out.
    pub fn expand(&self, w: &Word, cap: usize, exec: Exec) -> Result<Word, TowerError> {
        let tpl = self.decode(w)?;
        let needed = match self.f2_length(tpl) {
            TowerLength::Exact(v) if v <= BigUint::from(cap) => v,
            other => return Err(TowerError::CapExceeded { needed: other.to_string(), cap }),
        };
        let n = u32::try_from(tpl.n).map_err(|_| TowerError::InvalidParameter("n".into()))?;
        // stage A: w₁ over F₁
        let x = g1_expand(n, self.r, cap, exec)?.pow(tpl.a1_power as i64);
        // stage B: f1_j ↦ t_j, giving T; w₂ = T⁻¹ f2_1 T
        let stable: Vec<usize> = x.letters().iter().map(|l| l.gen() as usize).collect();
        // stage C: innermost conjugation first
        let rows: Vec<_> = (1..=self.r).map(|i| self.level2.substitution(i)).collect();
        let mut y = Word::generator(self.level2.alphabet(), 0, false)?;
        for &i in &stable {
            y = rows[i].apply_with(&y, exec)?;
            if y.len() > cap {
                return Err(TowerError::CapExceeded { needed: needed.to_string(), cap });
            }
        }
        debug_assert_eq!(BigUint::from(y.len()), needed);
        Ok(y)
    }
}

pub fn tower_encode_w2(n: u64, r: usize) -> Result<Word, TowerError> {
    Ok(Amalgam::new(r)?.encode(W2Template::new(n)))
}

pub fn tower_decode(w: &Word, r: usize) -> Result<u64, TowerError> {
    let tpl = Amalgam::new(r)?.decode(w)?;
    if tpl.a1_power != 1 {
        return Err(TowerError::TemplateMismatch("padded template".into()));
    }
    Ok(tpl.n)
}

/// `r^(rⁿ)`.
pub fn tower_f2_length(n: u64, r: usize) -> TowerLength {
    TowerLength::power(1, r as u64, TowerLength::power(1, r as u64, TowerLength::exact(n)))
}
