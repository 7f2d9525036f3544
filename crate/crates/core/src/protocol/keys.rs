use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::tower::{decode_ii, encode_ii};
use super::variants::{decode_ia, encode_ia, MaskedPlatform};
use super::{decode_i, encode_i, AbelianToy, Prng, ProtocolError, ProtocolId, Transmission};
use crate::exec::Exec;
use crate::fbc::{make_secret_splitting, AlphaSpec, AlphaStep, DescriptorFile, PresentationFile, SplittingDescriptor};
use crate::towers::{Amalgam, DEFAULT_BRANCHING};
use crate::words::{count_up_to, index_to_word, Alphabet, Word};

pub const DEFAULT_DECOYS: usize = 5;
pub const DEFAULT_MASK_RANKS: [usize; 2] = [2, 1];

/// Key material shared by Alice and Bob.
#[derive(Clone, Debug)]
pub enum SharedSecret {
    Basic { splitting: SplittingDescriptor },
    /// `seed` drives the sender's decoys and shuffle; the receiver ignores it.
    Decoys { splitting: SplittingDescriptor, count: usize, seed: u64 },
    Masked { platform: MaskedPlatform, seed: u64 },
    Tower { amalgam: Amalgam },
    /// Protocol I over an abelian lattice; `seed` drives the sender's choices.
    Toy { toy: AbelianToy, seed: u64 },
}

/// Everything an eavesdropper is assumed to know.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PublicParams {
    pub protocol: ProtocolName,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mask_ranks: Option<Vec<usize>>,
}

/// Serde shim for [`ProtocolId`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ProtocolName(pub ProtocolId);

impl TryFrom<String> for ProtocolName {
    type Error = ProtocolError;
    fn try_from(s: String) -> Result<Self, ProtocolError> {
        Ok(ProtocolName(s.parse()?))
    }
}

impl From<ProtocolName> for String {
    fn from(p: ProtocolName) -> String {
        p.0.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeyFile {
    pub protocol: ProtocolName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub splitting: Option<DescriptorFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decoy_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mask_ranks: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branching: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub toy_basis: Option<Vec<Vec<i64>>>,
}

fn random_conjugator(prng: &mut Prng, alphabet: &Alphabet) -> Word {
    let count = count_up_to(alphabet.rank(), 2).unwrap();
    index_to_word(1 + prng.below(count - 1), alphabet)
}

/// Secret fiber `α(F)` for a PRNG-chosen `α = inner ∘ φ^j ∘ inner`.
pub fn secret_splitting(prng: &mut Prng) -> SplittingDescriptor {
    let base = SplittingDescriptor::fibonacci().with_cap(crate::cap_from_env());
    let ab = base.public_alphabet().clone();
    let spec = AlphaSpec::identity()
        .then(AlphaStep::Inner(random_conjugator(prng, &ab)))
        .then(AlphaStep::PhiPower(prng.below(5) as i64 - 2))
        .then(AlphaStep::Inner(random_conjugator(prng, &ab)));
    make_secret_splitting(&base, &spec).expect("inner and φ-power steps are automorphisms")
}

/// Deterministic in `seed`. For IB the seed is also the mask seed.
pub fn keygen(protocol: ProtocolId, seed: u64) -> SharedSecret {
    let mut prng = Prng::new(seed);
    match protocol {
        ProtocolId::I => SharedSecret::Basic { splitting: secret_splitting(&mut prng) },
        ProtocolId::IA => {
            let splitting = secret_splitting(&mut prng);
            SharedSecret::Decoys { splitting, count: DEFAULT_DECOYS, seed: prng.next() }
        }
        ProtocolId::IB => {
            let platform = MaskedPlatform::new(secret_splitting(&mut prng), DEFAULT_MASK_RANKS.to_vec()).unwrap();
            SharedSecret::Masked { platform, seed }
        }
        ProtocolId::II => SharedSecret::Tower { amalgam: Amalgam::new(DEFAULT_BRANCHING).unwrap() },
    }
}

/// Toy abelian key: a random upper-triangular basis with determinant > 1.
pub fn keygen_toy(dim: usize, seed: u64) -> SharedSecret {
    assert!(dim >= 1);
    let mut prng = Prng::new(seed);
    let mut basis = vec![vec![BigInt::from(0); dim]; dim];
    for (i, row) in basis.iter_mut().enumerate() {
        row[i] = BigInt::from(2 + prng.below(3));
        for x in row.iter_mut().skip(i + 1) {
            *x = BigInt::from(prng.below(7) as i64 - 3);
        }
    }
    SharedSecret::Toy { toy: AbelianToy::new(basis).unwrap(), seed: prng.next() }
}

impl SharedSecret {
    pub fn protocol(&self) -> ProtocolId {
        match self {
            SharedSecret::Basic { .. } | SharedSecret::Toy { .. } => ProtocolId::I,
            SharedSecret::Decoys { .. } => ProtocolId::IA,
            SharedSecret::Masked { .. } => ProtocolId::IB,
            SharedSecret::Tower { .. } => ProtocolId::II,
        }
    }

    pub fn splitting(&self) -> Option<&SplittingDescriptor> {
        match self {
            SharedSecret::Basic { splitting } | SharedSecret::Decoys { splitting, .. } => Some(splitting),
            SharedSecret::Masked { platform, .. } => Some(platform.splitting()),
            _ => None,
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        match self {
            SharedSecret::Basic { splitting } | SharedSecret::Decoys { splitting, .. } => {
                splitting.public_alphabet().clone()
            }
            SharedSecret::Masked { platform, .. } => platform.alphabet().clone(),
            SharedSecret::Tower { amalgam } => amalgam.alphabet().clone(),
            SharedSecret::Toy { toy, .. } => toy.platform().alphabet().clone(),
        }
    }

    pub fn public_params(&self) -> PublicParams {
        PublicParams {
            protocol: ProtocolName(self.protocol()),
            generators: self.alphabet().names().to_vec(),
            presentation: self.splitting().map(|d| PresentationFile::from_group(d.public())),
            mask_ranks: match self {
                SharedSecret::Masked { platform, .. } => Some(platform.ranks().to_vec()),
                _ => None,
            },
        }
    }

    fn frame_prng(seed: u64, frame: u64) -> Prng {
        Prng::new(seed.wrapping_add(frame))
    }

    /// `frame` distinguishes messages of one session (PRNG stream offset).
    pub fn encode(&self, n: u64, frame: u64) -> Result<Transmission, ProtocolError> {
        let p = self.protocol();
        let words = match self {
            SharedSecret::Basic { splitting } => vec![encode_i(n, splitting)?.word],
            SharedSecret::Decoys { splitting, count, seed } => {
                encode_ia(n, splitting, *count, &mut Self::frame_prng(*seed, frame))?
            }
            SharedSecret::Masked { platform, seed } => {
                vec![platform.encode(n, &mut Self::frame_prng(*seed, frame))?.0]
            }
            SharedSecret::Tower { amalgam } => vec![encode_ii(n, amalgam)?],
            SharedSecret::Toy { toy, seed } => vec![toy.encode(n, &mut Self::frame_prng(*seed, frame))?],
        };
        Ok(Transmission::new(p, words))
    }

    pub fn decode(&self, tx: &Transmission, frame: u64) -> Result<u64, ProtocolError> {
        if tx.protocol != self.protocol() {
            return Err(ProtocolError::WrongProtocol { expected: self.protocol(), found: tx.protocol });
        }
        let single = || match tx.words.as_slice() {
            [w] => Ok(w),
            _ => Err(ProtocolError::MalformedTransmission(format!("expected one word, got {}", tx.words.len()))),
        };
        match self {
            SharedSecret::Basic { splitting } => decode_i(single()?, splitting),
            SharedSecret::Decoys { splitting, .. } => decode_ia(&tx.words, splitting),
            SharedSecret::Masked { platform, seed } => platform.decode(single()?, &mut Self::frame_prng(*seed, frame)),
            SharedSecret::Tower { amalgam } => Ok(decode_ii(single()?, amalgam)?.n),
            SharedSecret::Toy { toy, .. } => toy.decode(single()?),
        }
    }

    /// The IB payload inside `w`, with the masks of frame `frame` regenerated.
    pub fn unmask(&self, w: &Word, frame: u64) -> Result<Word, ProtocolError> {
        match self {
            SharedSecret::Masked { platform, seed } => platform.strip(w, &mut Self::frame_prng(*seed, frame)),
            _ => Err(ProtocolError::WrongProtocol { expected: ProtocolId::IB, found: self.protocol() }),
        }
    }

    pub fn parse_transmission(&self, text: &str) -> Result<Transmission, ProtocolError> {
        Transmission::parse(text, &self.alphabet())
    }

    /// `decode(encode(n_i, i), i)` for every message, in order.
    pub fn round_trip_batch(&self, ns: &[u64], exec: Exec) -> Vec<Result<u64, ProtocolError>> {
        let indexed: Vec<(u64, u64)> = ns.iter().copied().zip(0..).collect();
        exec.map(&indexed, |&(n, frame)| {
            let tx = self.encode(n, frame)?;
            let text = tx.to_text();
            self.decode(&self.parse_transmission(&text)?, frame)
        })
    }

    pub fn to_file(&self) -> KeyFile {
        let mut f = KeyFile {
            protocol: ProtocolName(self.protocol()),
            splitting: self.splitting().map(DescriptorFile::from_descriptor),
            decoy_count: None,
            seed: None,
            mask_ranks: None,
            branching: None,
            toy_basis: None,
        };
        match self {
            SharedSecret::Basic { .. } => {}
            SharedSecret::Decoys { count, seed, .. } => {
                f.decoy_count = Some(*count);
                f.seed = Some(*seed);
            }
            SharedSecret::Masked { platform, seed } => {
                f.seed = Some(*seed);
                f.mask_ranks = Some(platform.ranks().to_vec());
            }
            SharedSecret::Tower { amalgam } => f.branching = Some(amalgam.branching()),
            SharedSecret::Toy { toy, seed } => {
                f.seed = Some(*seed);
                f.toy_basis = Some(
                    toy.subgroup()
                        .basis()
                        .iter()
                        .map(|r| r.iter().map(|x| x.to_i64().expect("toy entries are small")).collect())
                        .collect(),
                );
            }
        }
        f
    }

    pub fn from_file(f: &KeyFile) -> Result<Self, ProtocolError> {
        let missing = |what: &str| ProtocolError::Key(format!("missing `{what}`"));
        let splitting = || -> Result<SplittingDescriptor, ProtocolError> {
            let d = f.splitting.as_ref().ok_or_else(|| missing("splitting"))?.to_descriptor()?;
            Ok(d.with_cap(crate::cap_from_env()))
        };
        Ok(match f.protocol.0 {
            ProtocolId::I => match &f.toy_basis {
                Some(b) => SharedSecret::Toy {
                    toy: AbelianToy::new(b.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())?,
                    seed: f.seed.ok_or_else(|| missing("seed"))?,
                },
                None => SharedSecret::Basic { splitting: splitting()? },
            },
            ProtocolId::IA => SharedSecret::Decoys {
                splitting: splitting()?,
                count: f.decoy_count.ok_or_else(|| missing("decoy_count"))?,
                seed: f.seed.ok_or_else(|| missing("seed"))?,
            },
            ProtocolId::IB => SharedSecret::Masked {
                platform: MaskedPlatform::new(splitting()?, f.mask_ranks.clone().ok_or_else(|| missing("mask_ranks"))?)?,
                seed: f.seed.ok_or_else(|| missing("seed"))?,
            },
            ProtocolId::II => SharedSecret::Tower {
                amalgam: Amalgam::new(f.branching.ok_or_else(|| missing("branching"))?)?,
            },
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).unwrap()
    }

    pub fn from_json(text: &str) -> Result<Self, ProtocolError> {
        let f: KeyFile = serde_json::from_str(text).map_err(|e| ProtocolError::Key(e.to_string()))?;
        Self::from_file(&f)
    }
}

impl PublicParams {
    pub fn alphabet(&self) -> Result<Alphabet, ProtocolError> {
        Ok(Alphabet::new(self.generators.iter().cloned())?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap()
    }

    pub fn from_json(text: &str) -> Result<Self, ProtocolError> {
        serde_json::from_str(text).map_err(|e| ProtocolError::Key(e.to_string()))
    }
}
