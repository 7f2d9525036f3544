use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::{Prng, ProtocolError};
use crate::classic::{AbelianPlatform, AbelianSubgroup};
use crate::words::Word;

/// Protocol I over `H = B·Zᵖ < Zᵖ`, the abelian shadow used to study the
/// interception attack.
#[derive(Clone, Debug)]
pub struct AbelianToy {
    platform: AbelianPlatform,
    subgroup: AbelianSubgroup,
}

impl AbelianToy {
    pub fn new(basis: Vec<Vec<BigInt>>) -> Result<Self, ProtocolError> {
        let subgroup = AbelianSubgroup::new(basis).map_err(|e| ProtocolError::Key(e.to_string()))?;
        Ok(AbelianToy { platform: AbelianPlatform::new(subgroup.dim()), subgroup })
    }

    pub fn platform(&self) -> &AbelianPlatform {
        &self.platform
    }

    pub fn subgroup(&self) -> &AbelianSubgroup {
        &self.subgroup
    }

    /// `h = B c` for a random `c` with `|c|₁ = n`.
    pub fn encode(&self, n: u64, prng: &mut Prng) -> Result<Word, ProtocolError> {
        if n == 0 {
            return Err(ProtocolError::InvalidMessage(0));
        }
        let p = self.subgroup.dim();
        let mut cuts: Vec<u64> = (0..p - 1).map(|_| prng.below(n + 1)).collect();
        cuts.push(0);
        cuts.push(n);
        cuts.sort_unstable();
        let coeffs: Vec<BigInt> = cuts
            .windows(2)
            .map(|w| {
                let c = BigInt::from(w[1] - w[0]);
                if prng.below(2) == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect();
        Ok(self.platform.word(&self.subgroup.combine(&coeffs)))
    }

    pub fn decode(&self, w: &Word) -> Result<u64, ProtocolError> {
        if !w.alphabet().same(self.platform.alphabet()) {
            return Err(ProtocolError::NotInSubgroup);
        }
        let c = self.subgroup.coordinates(&self.platform.vector(w)).ok_or(ProtocolError::NotInSubgroup)?;
        let total: BigInt = c.iter().map(Signed::abs).sum();
        total.to_u64().ok_or(ProtocolError::InvalidMessage(u64::MAX))
    }
}
