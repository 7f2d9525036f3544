use super::ProtocolError;

/// splitmix64.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prng {
    state: u64,
}

impl Prng {
    pub fn new(seed: u64) -> Self {
        Prng { state: seed }
    }

    pub fn state(&self) -> u64 {
        self.state
    }

    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// `next() mod n`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next() % n
    }

    /// Fisher–Yates.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// Decimal digit string, taken mod 2⁶⁴.
pub fn seed_from_timestamp(ts: &str) -> Result<u64, ProtocolError> {
    if ts.is_empty() || !ts.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ProtocolError::MalformedTimestamp(ts.to_string()));
    }
    Ok(ts.bytes().fold(0u64, |acc, b| acc.wrapping_mul(10).wrapping_add((b - b'0') as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_vectors() {
        let mut p = Prng::new(1234567);
        let got: Vec<u64> = (0..5).map(|_| p.next()).collect();
        assert_eq!(
            got,
            [6457827717110365317, 3203168211198807973, 9817491932198370423, 4593380528125082431, 16408922859458223821]
        );
        let mut p = Prng::new(0);
        assert_eq!(p.next(), 16294208416658607535);
        let mut p = Prng::new(2032016123342);
        assert_eq!(p.next(), 3096733807018675812);
    }

    #[test]
    fn timestamps() {
        assert_eq!(seed_from_timestamp("02032016123342").unwrap(), 2032016123342);
        assert_eq!(seed_from_timestamp("0").unwrap(), 0);
        assert_eq!(seed_from_timestamp("99999999999999999999").unwrap(), 7766279631452241919);
        assert!(seed_from_timestamp("").is_err());
        assert!(seed_from_timestamp("2016-03-02").is_err());
    }

    #[test]
    fn shuffle_is_deterministic() {
        let mut a: Vec<u32> = (0..20).collect();
        let mut b = a.clone();
        Prng::new(9).shuffle(&mut a);
        Prng::new(9).shuffle(&mut b);
        assert_eq!(a, b);
        let mut s = a.clone();
        s.sort();
        assert_eq!(s, (0..20).collect::<Vec<_>>());
    }
}
