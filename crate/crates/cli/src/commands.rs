use std::fmt::{self, Write as _};
use std::fs;
use std::io::Read;
use std::path::Path;

use dgc_core::channel::{
    attack_alphabet_partition, attack_guess_bound, attack_subgroup_reconstruction, run_session, Transcript, Transport,
};
use dgc_core::classic::{bs12_eval, distortion_profile, heis_eval, BPowers, Bs12, Center, DistortionProfile, Heisenberg};
use dgc_core::fbc::{Fiber, SplittingDescriptor};
use dgc_core::protocol::{keygen as make_key, keygen_toy, seed_from_timestamp, ProtocolId, PublicParams, SharedSecret};
use dgc_core::towers::{g1_expand, mother_word, Amalgam, W2Template};
use dgc_core::words::{Alphabet, Word};
use dgc_core::{cap_from_env, Exec};
use num_bigint::BigInt;
use serde_json::json;

use crate::{
    AttackArgs, AttackName, DecodeArgs, DistortionArgs, EncodeArgs, Format, KeygenArgs, Platform, ProtocolArg,
    SessionArgs, TowerArgs,
};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Core(dgc_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Core(e) => e.kind().exit_code() as u8,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Data(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl<E: Into<dgc_core::Error>> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Core(e.into())
    }
}

type Out = Result<String, CliError>;

impl From<ProtocolArg> for ProtocolId {
    fn from(p: ProtocolArg) -> ProtocolId {
        match p {
            ProtocolArg::I => ProtocolId::I,
            ProtocolArg::Ia => ProtocolId::IA,
            ProtocolArg::Ib => ProtocolId::IB,
            ProtocolArg::Ii => ProtocolId::II,
        }
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn read_key(path: &Path) -> Result<SharedSecret, CliError> {
    Ok(SharedSecret::from_json(&read_text(path)?)?)
}

fn read_transcript(path: &Path) -> Result<Transcript, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    Ok(Transcript::from_bytes(&bytes)?)
}

fn json_out(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).unwrap();
    s.push('\n');
    s
}

pub fn keygen(a: &KeygenArgs, f: Format) -> Out {
    let seed = seed_from_timestamp(&a.seed)?;
    let key = match a.toy {
        Some(dim) if a.protocol == ProtocolArg::I && dim > 0 => keygen_toy(dim, seed),
        Some(_) => return Err(CliError::Usage("--toy needs --protocol I and a positive dimension".into())),
        None => make_key(a.protocol.into(), seed),
    };
    if a.out.is_none() && !a.reveal {
        return Err(CliError::Usage("refusing to print a secret key: pass --out FILE or --reveal".into()));
    }
    let secret = key.to_json();
    if let Some(out) = &a.out {
        write_file(out, format!("{secret}\n").as_bytes())?;
    }
    if a.reveal {
        return Ok(format!("{secret}\n"));
    }
    let pp = key.public_params();
    Ok(match f {
        Format::Json => format!("{}\n", pp.to_json()),
        _ => format!("protocol {}\ngenerators {}\n", key.protocol(), pp.generators.join(" ")),
    })
}

pub fn encode(a: &EncodeArgs, f: Format) -> Out {
    let key = read_key(&a.key)?;
    let tx = key.encode(a.n, a.frame)?;
    Ok(match f {
        Format::Json => json_out(json!({ "protocol": tx.protocol.as_str(), "letters": tx.letter_count(), "transmission": tx.to_text() })),
        _ => tx.to_text(),
    })
}

pub fn decode(a: &DecodeArgs, f: Format) -> Out {
    let key = read_key(&a.key)?;
    let text = match &a.input {
        Some(p) => read_text(p)?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Data(format!("stdin: {e}")))?;
            s
        }
    };
    let tx = key.parse_transmission(&text)?;
    let n = key.decode(&tx, a.frame)?;
    Ok(match f {
        Format::Json => json_out(json!({ "n": n })),
        _ => format!("{n}\n"),
    })
}

pub fn session(a: &SessionArgs, f: Format) -> Out {
    let key = read_key(&a.key)?;
    let p: ProtocolId = a.protocol.into();
    if key.protocol() != p {
        return Err(CliError::Data(format!("key is for protocol {}, not {p}", key.protocol())));
    }
    let transport = if a.tcp { Transport::Tcp } else { Transport::Pipe };
    let outcome = run_session(&key, &key, &a.messages, transport)?;
    if let Some(path) = &a.transcript {
        write_file(path, &outcome.transcript.to_bytes())?;
    }
    let rows: Vec<(u64, String)> = a
        .messages
        .iter()
        .zip(&outcome.results)
        .map(|(&n, r)| (n, r.as_ref().map(u64::to_string).unwrap_or_else(|e| format!("error: {e}"))))
        .collect();
    let mut out = String::new();
    match f {
        Format::Json => {
            let v: Vec<_> = rows.iter().map(|(n, r)| json!({ "sent": n, "received": r })).collect();
            out = json_out(json!({ "protocol": p.as_str(), "frames": outcome.transcript.len(), "messages": v }));
        }
        Format::Csv => {
            out.push_str("index,sent,received\n");
            for (i, (n, r)) in rows.iter().enumerate() {
                writeln!(out, "{i},{n},{r}").unwrap();
            }
        }
        Format::Text => {
            for (i, (n, r)) in rows.iter().enumerate() {
                writeln!(out, "message {i}: sent {n}, received {r}").unwrap();
            }
            writeln!(out, "transcript: {} frames", outcome.transcript.len()).unwrap();
        }
    }
    Ok(out)
}

pub fn attack(a: &AttackArgs, f: Format) -> Out {
    let transcript = read_transcript(&a.transcript)?;
    let oracle = a.key.as_deref().map(read_key).transpose()?;
    let public = match &a.public {
        Some(p) => Some(PublicParams::from_json(&read_text(p)?)?),
        None => oracle.as_ref().map(SharedSecret::public_params),
    };
    let need_public = || public.as_ref().ok_or_else(|| CliError::Usage("this attack needs --public or --key".into()));
    let report = match a.name {
        AttackName::Subgroup => attack_subgroup_reconstruction(&transcript, need_public()?, oracle.as_ref()),
        AttackName::Alphabet => attack_alphabet_partition(&transcript, need_public()?, oracle.as_ref()),
        AttackName::Guess => attack_guess_bound(&transcript),
    };
    Ok(match f {
        Format::Json => format!("{}\n", report.to_json()),
        _ => report.to_text(),
    })
}

pub fn distortion(a: &DistortionArgs, f: Format) -> Out {
    let exec = if a.sequential { Exec::Sequential } else { Exec::default() };
    let cap = cap_from_env();
    let p: DistortionProfile = match a.platform {
        Platform::Bs12 => distortion_profile(&Bs12::default(), &BPowers, a.radius, cap, exec)?,
        Platform::Heis => distortion_profile(&Heisenberg::default(), &Center, a.radius, cap, exec)?,
        Platform::Fbc => {
            let g = SplittingDescriptor::fibonacci().public().clone().with_cap(cap);
            distortion_profile(&g, &Fiber, a.radius, cap, exec)?
        }
    };
    Ok(match f {
        Format::Json => {
            let entries: Vec<String> = p.entries.iter().map(ToString::to_string).collect();
            json_out(json!({ "radius": p.radius, "entries": entries }))
        }
        _ => p.to_csv(),
    })
}

pub fn tower(a: &TowerArgs, f: Format) -> Out {
    let h = Amalgam::new(a.r)?;
    let tpl = W2Template::new(a.n);
    let w = h.encode(tpl);
    let f1 = h.f1_length(tpl);
    let f2 = h.f2_length(tpl);
    let expanded = if a.materialize { Some(h.expand(&w, cap_from_env(), Exec::default())?) } else { None };
    let (r, n) = (a.r, a.n);
    Ok(match f {
        Format::Json => {
            let mut v = json!({
                "r": r,
                "n": n,
                "word": w.to_string(),
                "letters": w.len(),
                "f1_length": f1.to_string(),
                "f2_length": f2.to_string(),
            });
            if let Some(x) = &expanded {
                v["expanded_length"] = json!(x.len());
                v["expanded"] = json!(x.to_string());
            }
            json_out(v)
        }
        Format::Csv => {
            let mut s = String::from("r,n,letters,f1_length,f2_length\n");
            writeln!(s, "{r},{n},{},{f1},{f2}", w.len()).unwrap();
            s
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "w2 = {w}").unwrap();
            writeln!(s, "letters: {}", w.len()).unwrap();
            writeln!(s, "F1 length: {r}^{n} = {f1}").unwrap();
            writeln!(s, "F2 length: {r}^({r}^{n}) = {f2}").unwrap();
            if let Some(x) = &expanded {
                writeln!(s, "expanded length: {}", x.len()).unwrap();
                writeln!(s, "expanded: {x}").unwrap();
            }
            s
        }
    })
}

fn power(ab: &Alphabet, gen: u32, k: i64) -> Word {
    Word::power_of(ab, gen, k).expect("generator in range")
}

fn cat(parts: &[Word]) -> Word {
    parts.iter().skip(1).fold(parts[0].clone(), |acc, w| acc.concat(w).expect("same alphabet"))
}

pub fn demo(f: Format) -> Out {
    let mut checks: Vec<(String, bool)> = Vec::new();

    let bs = Bs12::default();
    let ab = bs.alphabet();
    let ok = (0..=30u32).all(|n| {
        let w = cat(&[power(ab, 0, n as i64), power(ab, 1, 1), power(ab, 0, -(n as i64))]);
        let e = bs12_eval(&w).unwrap();
        e.as_b_power() == Some(&(BigInt::from(1) << n)) && w.len() == 2 * n as usize + 1
    });
    checks.push(("BS(1,2): a^n b a^-n = b^(2^n), word length 2n+1, n <= 30".into(), ok));

    let hz = Heisenberg::default();
    let abc = hz.alphabet();
    let ok = (0..=50i64).all(|n| {
        let w = cat(&[power(abc, 0, n), power(abc, 1, n), power(abc, 0, -n), power(abc, 1, -n)]);
        let e = heis_eval(&w).unwrap();
        e.central() == Some(&BigInt::from(n * n)) && w.len() == 4 * n as usize
    });
    checks.push(("Heisenberg: a^n b^n a^-n b^-n = c^(n^2), word length 4n, n <= 50".into(), ok));

    let ok = (2..=20).all(|k| mother_word(k).len() == k * k);
    checks.push(("mother word: |W_k| = k^2, k <= 20".into(), ok));

    let ok = (0..=3u32).all(|n| g1_expand(n, 14, cap_from_env(), Exec::default()).map(|w| w.len()) == Ok(14usize.pow(n)));
    checks.push(("G1: t1^-n a1 t1^n has 2n+1 letters and expands to 14^n letters of F1, n <= 3".into(), ok));

    let h = Amalgam::new(14)?;
    let lines: Vec<String> = (1..=3u64)
        .map(|n| {
            let tpl = W2Template::new(n);
            let digits = h.f2_length(tpl).digits().map(|d| format!("{d} digits")).unwrap_or_else(|| "symbolic".into());
            format!("H: w2 at n = {n} has {} letters, F2 length 14^(14^{n}) ({digits})", tpl.letter_count())
        })
        .collect();

    Ok(match f {
        Format::Json => {
            let c: Vec<_> = checks.iter().map(|(s, ok)| json!({ "identity": s, "ok": ok })).collect();
            json_out(json!({ "checks": c, "tower": lines }))
        }
        _ => {
            let mut s = String::new();
            for (line, ok) in &checks {
                writeln!(s, "[{}] {line}", if *ok { "ok" } else { "FAILED" }).unwrap();
            }
            for l in &lines {
                writeln!(s, "{l}").unwrap();
            }
            s
        }
    })
}
