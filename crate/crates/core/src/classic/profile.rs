use std::fmt::Write;

use num_bigint::BigUint;
use num_traits::Zero;

use super::{ball_bfs, Bs12, CayleyGraph, ClassicError, DyadicPair, HeisTriple, Heisenberg};
use crate::exec::Exec;

/// Intrinsic word length `ℓ_T` on a subgroup `H < G`.
pub trait SubgroupLength<G: CayleyGraph> {
    /// `Some(ℓ_T(e))` when `e ∈ H`.
    fn intrinsic_length(&self, e: &G::Element) -> Option<BigUint>;
}

/// `⟨b⟩ < BS(1,2)`: `b^N` has `ℓ_T = |N|`.
pub struct BPowers;

impl SubgroupLength<Bs12> for BPowers {
    fn intrinsic_length(&self, e: &DyadicPair) -> Option<BigUint> {
        e.as_b_power().map(|n| n.magnitude().clone())
    }
}

/// `⟨c⟩ < H_Z`: `c^N` has `ℓ_T = |N|`.
pub struct Center;

impl SubgroupLength<Heisenberg> for Center {
    fn intrinsic_length(&self, e: &HeisTriple) -> Option<BigUint> {
        e.central().map(|z| z.magnitude().clone())
    }
}

/// `n ↦ max{ℓ_T(h) : h ∈ H, ℓ_S(h) ≤ n}` for `n = 0..=radius`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistortionProfile {
    pub radius: usize,
    pub entries: Vec<BigUint>,
}

impl DistortionProfile {
    pub fn entry(&self, n: usize) -> &BigUint {
        &self.entries[n]
    }

    /// Header `n,dist`, one row per `n`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,dist\n");
        for (n, d) in self.entries.iter().enumerate() {
            writeln!(out, "{n},{d}").unwrap();
        }
        out
    }
}

pub fn distortion_profile<G, H>(
    g: &G,
    subgroup: &H,
    radius: usize,
    cap: usize,
    exec: Exec,
) -> Result<DistortionProfile, ClassicError>
where
    G: CayleyGraph,
    H: SubgroupLength<G>,
{
    let ball = ball_bfs(g, radius, cap, exec)?;
    let mut entries = Vec::with_capacity(radius + 1);
    let mut running = BigUint::zero();
    for sphere in &ball.spheres {
        for e in sphere {
            if let Some(l) = subgroup.intrinsic_length(e) {
                if l > running {
                    running = l;
                }
            }
        }
        entries.push(running.clone());
    }
    Ok(DistortionProfile { radius, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bs12_profile_is_exponential() {
        let p = distortion_profile(&Bs12::default(), &BPowers, 7, 1_000_000, Exec::default()).unwrap();
        assert_eq!(p.entry(0), &BigUint::zero());
        assert!(p.entry(5) >= &BigUint::from(4u32));
        for k in 0..=3 {
            assert!(p.entry(2 * k + 1) >= &BigUint::from(1u32 << k));
        }
        assert!(p.entries.windows(2).all(|w| w[0] <= w[1]));
        assert!(p.to_csv().starts_with("n,dist\n0,0\n"));
    }

    #[test]
    fn heisenberg_profile() {
        let p = distortion_profile(&Heisenberg::default(), &Center, 4, 1_000_000, Exec::default()).unwrap();
        assert!(p.entry(4) >= &BigUint::from(1u32));
        let p0 = distortion_profile(&Heisenberg::default(), &Center, 0, 10, Exec::default()).unwrap();
        assert_eq!(p0.entries, vec![BigUint::zero()]);
    }
}
