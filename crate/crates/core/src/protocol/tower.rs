use super::ProtocolError;
use crate::towers::{Amalgam, TowerLength, W2Template};
use crate::words::Word;

/// What the receiver learns from a Protocol II ciphertext.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerDecoded {
    pub n: u64,
    pub template: W2Template,
    pub f1_length: TowerLength,
    pub f2_length: TowerLength,
}

/// Odd `n = 2k+1` rides `t⁻ᵏ a_1 tᵏ`; even `n = 2k+2` rides `t⁻ᵏ a_1² tᵏ`.
pub fn template_for(n: u64) -> Result<W2Template, ProtocolError> {
    match n {
        0 => Err(ProtocolError::InvalidMessage(0)),
        n if n % 2 == 1 => Ok(W2Template::new((n - 1) / 2)),
        n => Ok(W2Template::padded((n - 2) / 2)),
    }
}

pub fn message_for(t: W2Template) -> u64 {
    2 * t.n + t.a1_power as u64
}

pub fn encode_ii(n: u64, h: &Amalgam) -> Result<Word, ProtocolError> {
    Ok(h.encode(template_for(n)?))
}

pub fn decode_ii(w: &Word, h: &Amalgam) -> Result<TowerDecoded, ProtocolError> {
    let template = h.decode(w)?;
    Ok(TowerDecoded {
        n: message_for(template),
        template,
        f1_length: h.f1_length(template),
        f2_length: h.f2_length(template),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let h = Amalgam::new(14).unwrap();
        for n in 1..=40 {
            assert_eq!(decode_ii(&encode_ii(n, &h).unwrap(), &h).unwrap().n, n);
        }
        let w = encode_ii(7, &h).unwrap();
        assert_eq!(w.len(), 15);
        assert_eq!(decode_ii(&encode_ii(1, &h).unwrap(), &h).unwrap().template.n, 0);
    }

    #[test]
    fn reports_tower() {
        let h = Amalgam::new(14).unwrap();
        let d = decode_ii(&encode_ii(201, &h).unwrap(), &h).unwrap();
        assert_eq!(d.template.n, 100);
        assert_eq!(d.f1_length.digits(), Some(115));
        assert!(!d.f2_length.is_exact());
        assert!(d.f2_length.to_string().starts_with("14^"));
    }
}
