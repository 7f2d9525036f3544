use super::{FbcError, FbcGroup};
use crate::words::{SubstitutionTable, Word};

/// One building block of a secret automorphism of `G = F ⋊_φ ⟨t⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaStep {
    /// `x ↦ g⁻¹ x g`.
    Inner(Word),
    /// `a_i ↦ a_{p[i]}`, `t ↦ t`. Only valid when the permutation commutes with φ.
    Permutation(Vec<usize>),
    /// `a_i ↦ φ^j(a_i)`, `t ↦ t`.
    PhiPower(i64),
    /// Arbitrary images of all generators with claimed inverse images.
    Explicit { images: Vec<Word>, inverse_images: Vec<Word> },
}

/// Steps applied in order: the first step acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlphaSpec {
    pub steps: Vec<AlphaStep>,
}

impl AlphaSpec {
    pub fn identity() -> Self {
        AlphaSpec::default()
    }

    pub fn then(mut self, step: AlphaStep) -> Self {
        self.steps.push(step);
        self
    }

    pub fn build(&self, g: &FbcGroup) -> Result<GroupAutomorphism, FbcError> {
        let mut alpha = GroupAutomorphism::identity(g);
        for step in &self.steps {
            alpha = alpha.then(&GroupAutomorphism::from_step(g, step)?)?;
        }
        alpha.verify(g)?;
        Ok(alpha)
    }
}

/// An endomorphism pair of the public group, images over its alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAutomorphism {
    forward: SubstitutionTable,
    backward: SubstitutionTable,
}

impl GroupAutomorphism {
    pub fn identity(g: &FbcGroup) -> Self {
        let t = SubstitutionTable::identity(g.alphabet());
        GroupAutomorphism { forward: t.clone(), backward: t }
    }

    fn from_step(g: &FbcGroup, step: &AlphaStep) -> Result<Self, FbcError> {
        let ab = g.alphabet();
        let m = g.rank();
        let gens: Vec<Word> = (0..=m as u32).map(|i| Word::generator(ab, i, false).unwrap()).collect();
        let table = |images: Vec<Word>| SubstitutionTable::new(ab, ab, images).map_err(FbcError::from);
        let (fwd, bwd) = match step {
            AlphaStep::Inner(c) => {
                if !c.alphabet().same(ab) {
                    return Err(FbcError::IncompatibleSpec("conjugator over the wrong alphabet".into()));
                }
                let ci = c.invert();
                let f = gens.iter().map(|x| x.conjugate(c).unwrap().free_reduce()).collect();
                let b = gens.iter().map(|x| x.conjugate(&ci).unwrap().free_reduce()).collect();
                (f, b)
            }
            AlphaStep::Permutation(p) => {
                let mut seen = vec![false; m];
                if p.len() != m || p.iter().any(|&i| i >= m || std::mem::replace(&mut seen[i], true)) {
                    return Err(FbcError::IncompatibleSpec(format!("not a permutation of {m} generators")));
                }
                let mut inv = vec![0; m];
                for (i, &j) in p.iter().enumerate() {
                    inv[j] = i;
                }
                let perm = |q: &[usize]| {
                    let mut v: Vec<Word> = q.iter().map(|&j| gens[j].clone()).collect();
                    v.push(gens[m].clone());
                    v
                };
                (perm(p), perm(&inv))
            }
            AlphaStep::PhiPower(j) => {
                let lift = |p: i64| -> Vec<Word> {
                    let phi = g.phi().power(p);
                    let mut v: Vec<Word> = phi.images().iter().map(|w| g.embed(w)).collect();
                    v.push(gens[m].clone());
                    v
                };
                (lift(*j), lift(-*j))
            }
            AlphaStep::Explicit { images, inverse_images } => (images.clone(), inverse_images.clone()),
        };
        Ok(GroupAutomorphism { forward: table(fwd)?, backward: table(bwd)? })
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupAutomorphism) -> Result<Self, FbcError> {
        Ok(GroupAutomorphism {
            forward: self.forward.compose(&other.forward)?,
            backward: other.backward.compose(&self.backward)?,
        })
    }

    pub fn forward(&self) -> &SubstitutionTable {
        &self.forward
    }

    pub fn backward(&self) -> &SubstitutionTable {
        &self.backward
    }

    pub fn apply(&self, w: &Word) -> Result<Word, FbcError> {
        Ok(self.forward.apply(w)?.free_reduce())
    }

    pub fn apply_inverse(&self, w: &Word) -> Result<Word, FbcError> {
        Ok(self.backward.apply(w)?.free_reduce())
    }

    /// Both maps preserve `t a t⁻¹ = φ(a)` and are mutually inverse on generators.
    pub fn verify(&self, g: &FbcGroup) -> Result<(), FbcError> {
        let ab = g.alphabet();
        let t = Word::generator(ab, g.stable_gen(), false)?;
        for (name, table) in [("forward", &self.forward), ("inverse", &self.backward)] {
            let at = table.apply(&t)?;
            for i in 0..g.rank() as u32 {
                let a = Word::generator(ab, i, false)?;
                let lhs = at.concat(&table.apply(&a)?)?.concat(&at.invert())?;
                let rhs = table.apply(&g.embed(&g.phi().apply(&Word::generator(g.fiber(), i, false)?)))?;
                if !g.equal(&lhs, &rhs)? {
                    return Err(FbcError::IncompatibleSpec(format!(
                        "{name} map breaks the relation for `{}`",
                        ab.name(i)
                    )));
                }
            }
        }
        for i in 0..ab.rank() as u32 {
            let x = Word::generator(ab, i, false)?;
            let there = self.apply(&self.apply_inverse(&x)?)?;
            let back = self.apply_inverse(&self.apply(&x)?)?;
            if !g.equal(&there, &x)? || !g.equal(&back, &x)? {
                return Err(FbcError::InvalidAutomorphism(format!(
                    "inverse check fails on `{}`",
                    ab.name(i)
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fbc::Automorphism;
    use crate::words::{parse_word, Alphabet};

    fn fib_group() -> FbcGroup {
        FbcGroup::new(Automorphism::fibonacci(&Alphabet::indexed("a_", 2)), "t").unwrap()
    }

    #[test]
    fn inner_and_phi_power_are_valid() {
        let g = fib_group();
        let c = parse_word("a_1 t^-1 a_2", g.alphabet()).unwrap();
        let spec = AlphaSpec::identity()
            .then(AlphaStep::Inner(c))
            .then(AlphaStep::PhiPower(3))
            .then(AlphaStep::Inner(parse_word("t", g.alphabet()).unwrap()));
        spec.build(&g).unwrap();
    }

    #[test]
    fn swap_breaks_fibonacci() {
        let g = fib_group();
        let r = AlphaSpec::identity().then(AlphaStep::Permutation(vec![1, 0])).build(&g);
        assert!(matches!(r, Err(FbcError::IncompatibleSpec(_))));
    }

    #[test]
    fn swap_commutes_with_swap() {
        let ab = Alphabet::indexed("a_", 2);
        let w = |s| parse_word(s, &ab).unwrap();
        let swap = Automorphism::new(&ab, vec![w("a_2"), w("a_1")], vec![w("a_2"), w("a_1")]).unwrap();
        let g = FbcGroup::new(swap, "t").unwrap();
        let a1 = parse_word("a_1", g.alphabet()).unwrap();
        AlphaSpec::identity()
            .then(AlphaStep::Permutation(vec![1, 0]))
            .then(AlphaStep::Inner(a1))
            .build(&g)
            .unwrap();
    }

    #[test]
    fn bad_explicit_inverse() {
        let g = fib_group();
        let w = |s| parse_word(s, g.alphabet()).unwrap();
        let r = AlphaSpec::identity()
            .then(AlphaStep::Explicit {
                images: vec![w("a_1"), w("a_2"), w("t a_1")],
                inverse_images: vec![w("a_1"), w("a_2"), w("t")],
            })
            .build(&g);
        assert!(r.is_err());
    }
}
