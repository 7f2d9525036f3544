use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

/// Lengths up to this many decimal digits are kept as exact integers.
pub const MAX_EXACT_DIGITS: u64 = 10_000;

/// An exact length, or `coeff · base^exponent` kept symbolic when too large.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TowerLength {
    Exact(BigUint),
    Power { coeff: u64, base: u64, exponent: Box<TowerLength> },
}

impl TowerLength {
    pub fn exact(n: impl Into<BigUint>) -> Self {
        TowerLength::Exact(n.into())
    }

    /// `coeff · base^exponent`, materialized when it has at most
    /// [`MAX_EXACT_DIGITS`] digits.
    pub fn power(coeff: u64, base: u64, exponent: TowerLength) -> Self {
        if let TowerLength::Exact(e) = &exponent {
            if let Some(e64) = e.to_u64() {
                let est = e64 as f64 * (base as f64).log10() + (coeff as f64).log10();
                if est < MAX_EXACT_DIGITS as f64 + 1.0 {
                    let v = BigUint::from(base).pow(e64 as u32) * coeff;
                    if (v.to_string().len() as u64) <= MAX_EXACT_DIGITS {
                        return TowerLength::Exact(v);
                    }
                }
            }
        }
        TowerLength::Power { coeff, base, exponent: Box::new(exponent) }
    }

    pub fn as_exact(&self) -> Option<&BigUint> {
        match self {
            TowerLength::Exact(v) => Some(v),
            TowerLength::Power { .. } => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.as_exact().is_some()
    }

    /// Decimal digit count when exact.
    pub fn digits(&self) -> Option<u64> {
        self.as_exact().map(|v| v.to_string().len() as u64)
    }

    /// Upper bound on `log10` that stays finite for one level of symbolic nesting.
    pub fn log10(&self) -> f64 {
        match self {
            TowerLength::Exact(v) => {
                let bits = v.bits();
                if bits < 1000 {
                    v.to_f64().unwrap().log10()
                } else {
                    bits as f64 * std::f64::consts::LOG10_2
                }
            }
            TowerLength::Power { coeff, base, exponent } => match exponent.as_exact().and_then(|e| e.to_f64()) {
                Some(e) => e * (*base as f64).log10() + (*coeff as f64).log10(),
                None => f64::INFINITY,
            },
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_exact().is_some_and(One::is_one)
    }
}

impl fmt::Display for TowerLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TowerLength::Exact(v) => write!(f, "{v}"),
            TowerLength::Power { coeff, base, exponent } => {
                if *coeff != 1 {
                    write!(f, "{coeff}*")?;
                }
                match exponent.as_ref() {
                    TowerLength::Exact(e) => write!(f, "{base}^{e}"),
                    sym => write!(f, "{base}^({sym})"),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_and_symbolic() {
        let l = TowerLength::power(1, 14, TowerLength::exact(3u32));
        assert_eq!(l, TowerLength::exact(2744u32));
        let big = TowerLength::power(1, 14, TowerLength::exact(100u32));
        assert_eq!(big.digits(), Some(115));
        let huge = TowerLength::power(1, 14, big.clone());
        assert!(!huge.is_exact());
        assert_eq!(huge.to_string(), format!("14^{}", big));
        let nested = TowerLength::power(1, 14, TowerLength::power(1, 14, TowerLength::exact(1_000_000u32)));
        assert_eq!(nested.to_string(), "14^(14^1000000)");
        assert_eq!(TowerLength::power(2, 3, TowerLength::exact(2u32)), TowerLength::exact(18u32));
    }

    #[test]
    fn threshold() {
        // 10^9999 has exactly 10^4 digits; 10^10000 has one more
        assert!(TowerLength::power(1, 10, TowerLength::exact(9999u32)).is_exact());
        assert!(!TowerLength::power(1, 10, TowerLength::exact(10_000u32)).is_exact());
    }
}
