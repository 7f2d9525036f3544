use dgc_core::words::{count_up_to, index_to_word, parse_word, serialize_word, word_to_index, Alphabet, Letter, SubstitutionTable, Word};
use proptest::prelude::*;

fn ab() -> Alphabet {
    Alphabet::new(["a", "b", "c"]).unwrap()
}

fn any_word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u32..6, 0..max).prop_map(|codes| Word::new(&ab(), codes.into_iter().map(Letter::from_code).collect()).unwrap())
}

proptest! {
    #[test]
    fn reduction_is_idempotent(w in any_word(40)) {
        let r = w.free_reduce();
        prop_assert!(r.is_reduced());
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!((w.len() - r.len()) % 2, 0);
    }

    #[test]
    fn inverse_cancels(w in any_word(40)) {
        prop_assert_eq!(w.concat(&w.invert()).unwrap().word_length(), 0);
        prop_assert_eq!(w.invert().invert(), w);
    }

    #[test]
    fn text_round_trip(w in any_word(40)) {
        let r = w.free_reduce();
        prop_assert_eq!(parse_word(&serialize_word(&r), &ab()).unwrap(), r);
    }

    #[test]
    fn enumeration_is_a_bijection(i in 0u64..count_up_to(3, 7).unwrap()) {
        let w = index_to_word(i, &ab());
        prop_assert!(w.is_reduced());
        prop_assert_eq!(word_to_index(&w).unwrap(), i);
    }

    #[test]
    fn substitution_is_a_homomorphism(u in any_word(20), v in any_word(20), imgs in prop::collection::vec(any_word(5), 3)) {
        let t = SubstitutionTable::new(&ab(), &ab(), imgs).unwrap();
        let lhs = t.apply(&u.concat(&v).unwrap()).unwrap().free_reduce();
        let rhs = t.apply(&u).unwrap().concat(&t.apply(&v).unwrap()).unwrap().free_reduce();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(t.apply(&u.invert()).unwrap().free_reduce(), t.apply(&u).unwrap().invert().free_reduce());
    }
}

#[test]
fn enumeration_order_is_length_lex() {
    let words: Vec<Word> = (0..count_up_to(3, 3).unwrap()).map(|i| index_to_word(i, &ab())).collect();
    for pair in words.windows(2) {
        let (x, y) = (&pair[0], &pair[1]);
        assert!(x.len() < y.len() || (x.len() == y.len() && x.letters() < y.letters()));
    }
}
