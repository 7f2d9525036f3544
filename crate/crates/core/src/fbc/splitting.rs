use super::{AlphaSpec, Automorphism, FbcError, FbcGroup};
use crate::words::{Alphabet, SubstitutionTable, Word};

/// A public presentation `G = F(a) ⋊_φ ⟨t⟩` together with a second splitting
/// `G = F(b) ⋊ ⟨s⟩` whose fiber `H = F(b)` is the (secret) subgroup.
#[derive(Clone, Debug)]
pub struct SplittingDescriptor {
    public: FbcGroup,
    secret: FbcGroup,
    to_public: SubstitutionTable,
    from_public: SubstitutionTable,
    hom_weights: Vec<i64>,
    is_secret: bool,
}

/// Output of the membership-search rewriting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rewrite {
    /// Reduced word over the `b` generators.
    pub word: Word,
    pub steps: usize,
    /// `|v|` where `v` is the freely reduced word over `b, s`.
    pub intermediate_len: usize,
    pub input_len: usize,
}

impl Rewrite {
    /// Observed `|v| / |w|`.
    pub fn expansion_ratio(&self) -> f64 {
        if self.input_len == 0 {
            0.0
        } else {
            self.intermediate_len as f64 / self.input_len as f64
        }
    }
}

fn secret_alphabet(m: usize) -> Alphabet {
    Alphabet::indexed("b", m).extended(["s"]).unwrap()
}

impl SplittingDescriptor {
    /// Public generators `a_1..a_m, t`; secret `b1..bm, s`; `b_i ↦ a_i`, `s ↦ t`.
    pub fn standard(phi: Automorphism) -> Result<Self, FbcError> {
        let public = FbcGroup::new(phi, "t")?;
        let to_public = SubstitutionTable::rename(&secret_alphabet(public.rank()), public.alphabet());
        let from_public = SubstitutionTable::rename(public.alphabet(), to_public.domain());
        Self::assemble(public, to_public, from_public, false)
    }

    /// Standard splitting over the Fibonacci automorphism.
    pub fn fibonacci() -> Self {
        Self::standard(Automorphism::fibonacci(&Alphabet::indexed("a_", 2))).unwrap()
    }

    pub(crate) fn assemble(
        public: FbcGroup,
        to_public: SubstitutionTable,
        from_public: SubstitutionTable,
        is_secret: bool,
    ) -> Result<Self, FbcError> {
        let secret_fiber = Alphabet::new(to_public.domain().names()[..public.rank()].iter().cloned())?;
        let stable = to_public.domain().names()[public.rank()].clone();
        let phi = public.phi().renamed(&secret_fiber)?;
        let secret = FbcGroup::new(phi, &stable)?.with_cap(public.cap());
        if !secret.alphabet().same(to_public.domain()) || !from_public.codomain().same(secret.alphabet()) {
            return Err(FbcError::Descriptor("secret alphabet mismatch".into()));
        }
        let sg = secret.stable_gen();
        let hom_weights = from_public.images().iter().map(|w| w.exponent_sum(sg)).collect();
        let d = SplittingDescriptor { public, secret, to_public, from_public, hom_weights, is_secret };
        d.validate()?;
        Ok(d)
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.public = self.public.with_cap(cap);
        self.secret = self.secret.with_cap(cap);
        self
    }

    pub fn fiber_rank(&self) -> usize {
        self.secret.rank()
    }

    pub fn public(&self) -> &FbcGroup {
        &self.public
    }

    pub fn secret_group(&self) -> &FbcGroup {
        &self.secret
    }

    /// φ read over the secret fiber.
    pub fn automorphism(&self) -> &Automorphism {
        self.secret.phi()
    }

    pub fn to_public(&self) -> &SubstitutionTable {
        &self.to_public
    }

    pub fn from_public(&self) -> &SubstitutionTable {
        &self.from_public
    }

    pub fn hom_weights(&self) -> &[i64] {
        &self.hom_weights
    }

    pub fn is_secret(&self) -> bool {
        self.is_secret
    }

    pub fn public_alphabet(&self) -> &Alphabet {
        self.public.alphabet()
    }

    /// The `b` alphabet.
    pub fn subgroup_alphabet(&self) -> &Alphabet {
        self.secret.fiber()
    }

    /// `to_public(b_i)` for each fiber generator.
    pub fn subgroup_generators(&self) -> Vec<Word> {
        self.to_public.images()[..self.fiber_rank()].to_vec()
    }

    /// Public form of a `b` word.
    pub fn encode_fiber(&self, u: &Word) -> Result<Word, FbcError> {
        Ok(self.to_public.apply(&self.secret.embed(u))?.free_reduce())
    }

    pub fn weight(&self, w: &Word) -> i64 {
        w.letters().iter().map(|l| l.sign() * self.hom_weights[l.gen() as usize]).sum()
    }

    pub fn validate(&self) -> Result<(), FbcError> {
        let (p, s) = (&self.public, &self.secret);
        if self.hom_weights.len() != p.alphabet().rank() {
            return Err(FbcError::Descriptor("hom_weights length".into()));
        }
        for (i, w) in self.from_public.images().iter().enumerate() {
            if self.hom_weights[i] != w.exponent_sum(s.stable_gen()) {
                return Err(FbcError::Descriptor(format!("weight of `{}`", p.alphabet().name(i as u32))));
            }
        }
        for i in 0..p.alphabet().rank() as u32 {
            let x = Word::generator(p.alphabet(), i, false)?;
            let round = self.to_public.apply(&self.from_public.apply(&x)?)?;
            if !p.equal(&round, &x)? {
                return Err(FbcError::InvalidAutomorphism(format!(
                    "to_public ∘ from_public moves `{}`",
                    p.alphabet().name(i)
                )));
            }
        }
        for i in 0..s.alphabet().rank() as u32 {
            let y = Word::generator(s.alphabet(), i, false)?;
            let round = self.from_public.apply(&self.to_public.apply(&y)?)?;
            if !s.equal(&round, &y)? {
                return Err(FbcError::InvalidAutomorphism(format!(
                    "from_public ∘ to_public moves `{}`",
                    s.alphabet().name(i)
                )));
            }
            let expect = if i == s.stable_gen() { 1 } else { 0 };
            if self.weight(self.to_public.image(i)) != expect {
                return Err(FbcError::Descriptor(format!("weight of image of `{}`", s.alphabet().name(i))));
            }
        }
        // secret relators map to the identity
        let st = self.to_public.image(s.stable_gen());
        for i in 0..s.rank() as u32 {
            let b = self.to_public.image(i);
            let lhs = st.concat(b)?.concat(&st.invert())?;
            let rhs = self.encode_fiber(&s.phi().apply(&Word::generator(s.fiber(), i, false)?))?;
            if !p.equal(&lhs, &rhs)? {
                return Err(FbcError::IncompatibleSpec(format!("relation for `{}` fails", s.alphabet().name(i))));
            }
        }
        Ok(())
    }
}

/// Signed weight sum is zero.
pub fn membership_test(w: &Word, d: &SplittingDescriptor) -> bool {
    w.alphabet().same(d.public_alphabet()) && d.weight(w) == 0
}

/// Substitute `from_public`, reduce, pinch out `s`.
pub fn lemma41_rewrite(w: &Word, d: &SplittingDescriptor) -> Result<Rewrite, FbcError> {
    if !membership_test(w, d) {
        return Err(FbcError::NotInSubgroup);
    }
    let v = d.from_public.apply(w)?.free_reduce();
    let p = d.secret.pinch_reduce(&v)?;
    Ok(Rewrite { word: p.word, steps: p.steps, intermediate_len: v.len(), input_len: w.len() })
}

/// Applies a secret automorphism `α` of the public group to `base`: the new
/// subgroup is `α(H)`.
pub fn make_secret_splitting(base: &SplittingDescriptor, spec: &AlphaSpec) -> Result<SplittingDescriptor, FbcError> {
    let alpha = spec.build(&base.public)?;
    let to_public = base.to_public.compose(alpha.forward())?;
    let from_public = alpha.backward().compose(&base.from_public)?;
    SplittingDescriptor::assemble(
        base.public.clone(),
        to_public,
        from_public,
        base.is_secret || !spec.steps.is_empty(),
    )
}
