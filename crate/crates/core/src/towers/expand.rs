use num_bigint::BigUint;

use super::{RelatorTable, TowerError, TowerLength};
use crate::exec::Exec;
use crate::words::Word;

/// `t⁻ⁿ a_1 tⁿ` rewritten over `F₁`: `n`-fold substitution `a_j ↦ w_{1j}`
/// starting from `a_1`. The result is positive of length `rⁿ`.
pub fn g1_expand(n: u32, r: usize, cap: usize, exec: Exec) -> Result<Word, TowerError> {
    let table = RelatorTable::new(r, 1)?;
    let needed = BigUint::from(r).pow(n);
    if needed > BigUint::from(cap) {
        return Err(TowerError::CapExceeded { needed: needed.to_string(), cap });
    }
    let sub = table.substitution(1);
    let mut w = Word::generator(table.alphabet(), 0, false)?;
    for _ in 0..n {
        w = sub.apply_with(&w, exec)?;
    }
    Ok(w)
}

/// `ℓ_{F₁}(t⁻ⁿ a_1 tⁿ) = rⁿ`.
pub fn g1_length_only(n: u64, r: usize) -> TowerLength {
    TowerLength::power(1, r as u64, TowerLength::exact(n))
}
