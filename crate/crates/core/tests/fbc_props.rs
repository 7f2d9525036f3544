use dgc_core::fbc::{lemma41_rewrite, membership_test, SplittingDescriptor};
use dgc_core::protocol::{secret_splitting, Prng};
use dgc_core::words::{Letter, Word};
use proptest::prelude::*;

fn public_word(d: &SplittingDescriptor, codes: &[u32]) -> Word {
    let rank = d.public_alphabet().rank() as u32;
    Word::new(d.public_alphabet(), codes.iter().map(|&c| Letter::from_code(c % (2 * rank))).collect()).unwrap()
}

fn fiber_word(d: &SplittingDescriptor, codes: &[u32]) -> Word {
    let m = d.fiber_rank() as u32;
    let alpha = d.subgroup_alphabet();
    Word::new(alpha, codes.iter().map(|&c| Letter::from_code(c % (2 * m))).collect()).unwrap().free_reduce()
}

proptest! {
    #[test]
    fn membership_matches_normal_form(codes in prop::collection::vec(0u32..6, 0..30)) {
        let d = SplittingDescriptor::fibonacci();
        let w = public_word(&d, &codes);
        let nf = d.public().normalize(&w).unwrap();
        prop_assert_eq!(membership_test(&w, &d), nf.k == 0);
    }

    #[test]
    fn rewrite_recovers_secret_fiber_words(seed in any::<u64>(), codes in prop::collection::vec(0u32..4, 0..=64)) {
        let d = secret_splitting(&mut Prng::new(seed));
        let u = fiber_word(&d, &codes);
        let w = d.encode_fiber(&u).unwrap();
        prop_assert!(membership_test(&w, &d));
        let r = lemma41_rewrite(&w, &d).unwrap();
        prop_assert_eq!(r.word.letters(), u.letters());
        let s = d.fiber_rank() as u32;
        let v = d.from_public().apply(&w).unwrap().free_reduce();
        prop_assert!(2 * r.steps <= v.letters().iter().filter(|l| l.gen() == s).count());
    }

    #[test]
    fn equality_is_invariant_under_relators(codes in prop::collection::vec(0u32..6, 0..20), at in 0usize..20, j in 0u32..2) {
        // inserting t x t^-1 φ(x)^-1 anywhere leaves the element unchanged
        let d = SplittingDescriptor::fibonacci();
        let g = d.public();
        let w = public_word(&d, &codes);
        let t = g.stable_gen();
        let x = Word::generator(g.alphabet(), j, false).unwrap();
        let phi_x = g.embed(&g.phi().apply(&Word::generator(g.fiber(), j, false).unwrap()));
        let rel = [vec![Letter::pos(t)], x.letters().to_vec(), vec![Letter::neg(t)], phi_x.invert().letters().to_vec()].concat();
        let cut = at.min(w.len());
        let bigger = Word::new(g.alphabet(), [&w.letters()[..cut], &rel, &w.letters()[cut..]].concat()).unwrap();
        prop_assert!(g.equal(&w, &bigger).unwrap());
    }
}

#[test]
fn keygen_splittings_validate() {
    for seed in 0..50 {
        secret_splitting(&mut Prng::new(seed)).validate().unwrap();
    }
}
