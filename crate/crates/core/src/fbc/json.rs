use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::{Automorphism, FbcError, FbcGroup, SplittingDescriptor};
use crate::words::{parse_word, Alphabet, SubstitutionTable, Word};

/// Public presentation `F(a) ⋊_φ ⟨t⟩`; maps keyed by generator name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    pub fiber_rank: usize,
    pub stable: String,
    pub phi_images: IndexMap<String, String>,
    pub phi_inverse_images: IndexMap<String, String>,
}

/// Splitting descriptor on disk. Key order of `from_public` fixes the public
/// alphabet, key order of `to_public` the secret one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptorFile {
    pub fiber_rank: usize,
    pub phi_images: IndexMap<String, String>,
    pub phi_inverse_images: IndexMap<String, String>,
    pub to_public: IndexMap<String, String>,
    pub from_public: IndexMap<String, String>,
    pub hom_weights: IndexMap<String, i64>,
    #[serde(default)]
    pub secret: bool,
}

fn bad(msg: impl Into<String>) -> FbcError {
    FbcError::Descriptor(msg.into())
}

fn word_map(names: &Alphabet, words: &[Word]) -> IndexMap<String, String> {
    names.names().iter().cloned().zip(words.iter().map(Word::to_string)).collect()
}

fn parse_map(map: &IndexMap<String, String>, domain: &Alphabet, codomain: &Alphabet) -> Result<Vec<Word>, FbcError> {
    if map.len() != domain.rank() || map.keys().zip(domain.names()).any(|(k, n)| k != n) {
        return Err(bad("image keys do not match the alphabet"));
    }
    map.values().map(|v| parse_word(v, codomain).map_err(FbcError::from)).collect()
}

impl PresentationFile {
    pub fn from_group(g: &FbcGroup) -> Self {
        PresentationFile {
            fiber_rank: g.rank(),
            stable: g.alphabet().name(g.stable_gen()).to_string(),
            phi_images: word_map(g.fiber(), g.phi().images()),
            phi_inverse_images: word_map(g.fiber(), g.phi().inverse_images()),
        }
    }

    pub fn to_group(&self) -> Result<FbcGroup, FbcError> {
        let fiber = Alphabet::new(self.phi_images.keys().cloned())?;
        if fiber.rank() != self.fiber_rank {
            return Err(bad("fiber_rank"));
        }
        let phi = Automorphism::new(
            &fiber,
            parse_map(&self.phi_images, &fiber, &fiber)?,
            parse_map(&self.phi_inverse_images, &fiber, &fiber)?,
        )?;
        FbcGroup::new(phi, &self.stable)
    }
}

impl DescriptorFile {
    pub fn from_descriptor(d: &SplittingDescriptor) -> Self {
        let g = d.public();
        DescriptorFile {
            fiber_rank: d.fiber_rank(),
            phi_images: word_map(g.fiber(), g.phi().images()),
            phi_inverse_images: word_map(g.fiber(), g.phi().inverse_images()),
            to_public: word_map(d.to_public().domain(), d.to_public().images()),
            from_public: word_map(g.alphabet(), d.from_public().images()),
            hom_weights: g.alphabet().names().iter().cloned().zip(d.hom_weights().iter().copied()).collect(),
            secret: d.is_secret(),
        }
    }

    pub fn to_descriptor(&self) -> Result<SplittingDescriptor, FbcError> {
        let m = self.fiber_rank;
        if m == 0 || self.from_public.len() != m + 1 || self.to_public.len() != m + 1 {
            return Err(bad("alphabet sizes disagree with fiber_rank"));
        }
        let public_ab = Alphabet::new(self.from_public.keys().cloned())?;
        let secret_ab = Alphabet::new(self.to_public.keys().cloned())?;
        let presentation = PresentationFile {
            fiber_rank: m,
            stable: public_ab.name(m as u32).to_string(),
            phi_images: self.phi_images.clone(),
            phi_inverse_images: self.phi_inverse_images.clone(),
        };
        let public = presentation.to_group()?;
        if !public.alphabet().same(&public_ab) {
            return Err(bad("phi keys disagree with from_public keys"));
        }
        let to_public = SubstitutionTable::new(&secret_ab, &public_ab, parse_map(&self.to_public, &secret_ab, &public_ab)?)?;
        let from_public =
            SubstitutionTable::new(&public_ab, &secret_ab, parse_map(&self.from_public, &public_ab, &secret_ab)?)?;
        let d = SplittingDescriptor::assemble(public, to_public, from_public, self.secret)?;
        let weights: Vec<i64> = self.hom_weights.values().copied().collect();
        if self.hom_weights.keys().ne(public_ab.names().iter()) || weights != d.hom_weights() {
            return Err(bad("hom_weights do not match from_public"));
        }
        Ok(d)
    }
}

impl SplittingDescriptor {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&DescriptorFile::from_descriptor(self)).unwrap()
    }

    pub fn from_json(text: &str) -> Result<Self, FbcError> {
        let f: DescriptorFile = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        f.to_descriptor()
    }
}
