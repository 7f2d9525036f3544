use dgc_core::protocol::{encode_i, keygen, ProtocolId, Transmission};
use dgc_core::Exec;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn keygen_round_trips(seed in any::<u64>(), n in 1u64..100_000) {
        for p in ProtocolId::ALL {
            let key = keygen(p, seed);
            let tx = key.encode(n, 3).unwrap();
            let back = key.parse_transmission(&tx.to_text()).unwrap();
            prop_assert_eq!(&back, &tx);
            prop_assert_eq!(key.decode(&back, 3).unwrap(), n);
        }
    }

    #[test]
    fn protocol_i_compresses(seed in any::<u64>(), n in 32u64..200_000) {
        let key = keygen(ProtocolId::I, seed);
        let e = encode_i(n, key.splitting().unwrap()).unwrap();
        prop_assert!(e.word.len() < n as usize, "m = {} for n = {}", e.word.len(), n);
    }
}

#[test]
fn transmissions_are_deterministic_per_seed_and_frame() {
    for p in ProtocolId::ALL {
        let a = keygen(p, 11).encode(77, 2).unwrap().to_text();
        assert_eq!(a, keygen(p, 11).encode(77, 2).unwrap().to_text());
    }
    let ib = keygen(ProtocolId::IB, 11);
    assert_ne!(ib.encode(77, 0).unwrap(), ib.encode(77, 1).unwrap());
}

#[test]
fn batch_matches_sequential_and_parallel() {
    let key = keygen(ProtocolId::IA, 4);
    let ns: Vec<u64> = (1..=40).map(|i| i * 37).collect();
    assert_eq!(key.round_trip_batch(&ns, Exec::Sequential), key.round_trip_batch(&ns, Exec::Parallel));
}

#[test]
fn ia_decoys_never_pass_membership() {
    let key = keygen(ProtocolId::IA, 8);
    let d = key.splitting().unwrap();
    for frame in 0..30 {
        let tx = key.encode(500 + frame, frame).unwrap();
        let members = tx.words.iter().filter(|w| dgc_core::fbc::membership_test(w, d)).count();
        assert_eq!(members, 1);
    }
}

#[test]
fn headers_are_checked() {
    let key = keygen(ProtocolId::I, 1);
    let text = key.encode(9, 0).unwrap().to_text();
    assert!(Transmission::parse_lenient(&text).is_ok());
    assert!(key.parse_transmission(&text.replace("DGC1", "DGC2")).is_err());
    assert!(key.parse_transmission(&text.replace(" 1\n", " 2\n")).is_err());
    assert!(key.parse_transmission(text.trim_end_matches(".\n")).is_err());
    let other = keygen(ProtocolId::IA, 1);
    assert!(other.decode(&key.encode(9, 0).unwrap(), 0).is_err());
}
