use std::io::{Read, Write};
use std::sync::mpsc::{channel, Sender};
use std::thread;

use super::transport::{duplex, tcp_pair};
use super::{ChannelError, Direction, Frame, Transcript};
use crate::protocol::{ProtocolError, SharedSecret};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Transport {
    #[default]
    Pipe,
    Tcp,
}

/// Per-message outcomes (in message order) and the full transcript.
#[derive(Debug)]
pub struct SessionOutcome {
    pub results: Vec<Result<u64, ProtocolError>>,
    pub transcript: Transcript,
}

type Tap = Sender<(Direction, Frame)>;

fn send<S: Write>(stream: &mut S, tap: &Tap, d: Direction, text: String) -> Result<(), ChannelError> {
    let f = Frame::new(text)?;
    // the copy goes out before the frame so the tap sees frames in wire order
    let _ = tap.send((d, f.clone()));
    f.write_to(stream)
}

fn alice<S: Read + Write>(
    mut stream: S,
    key: &SharedSecret,
    messages: &[u64],
    tap: Tap,
) -> Result<Vec<Option<ProtocolError>>, ChannelError> {
    let mut local = Vec::with_capacity(messages.len());
    let mut frame = 0u64;
    for &n in messages {
        let tx = match key.encode(n, frame) {
            Ok(tx) => tx,
            Err(e) => {
                local.push(Some(e));
                continue;
            }
        };
        send(&mut stream, &tap, Direction::AliceToBob, tx.to_text())?;
        frame += 1;
        let reply = Frame::read_from(&mut stream)?.ok_or_else(|| ChannelError::Endpoint("bob hung up".into()))?;
        if !reply.text()?.starts_with("ACK") && !reply.text()?.starts_with("NAK") {
            return Err(ChannelError::Framing("bad reply".into()));
        }
        local.push(None);
    }
    Ok(local)
}

fn bob<S: Read + Write>(mut stream: S, key: &SharedSecret, tap: Tap) -> Result<Vec<Result<u64, ProtocolError>>, ChannelError> {
    let mut out = Vec::new();
    let mut frame = 0u64;
    while let Some(f) = Frame::read_from(&mut stream)? {
        let r = f
            .text()
            .map_err(|e| ProtocolError::MalformedTransmission(e.to_string()))
            .and_then(|t| key.parse_transmission(t))
            .and_then(|tx| key.decode(&tx, frame));
        let reply = match &r {
            Ok(n) => format!("ACK {n}"),
            Err(e) => format!("NAK {e}"),
        };
        send(&mut stream, &tap, Direction::BobToAlice, reply)?;
        out.push(r);
        frame += 1;
    }
    Ok(out)
}

/// Runs Alice and Bob as two threads joined only by a byte stream.
pub fn run_session(
    alice_key: &SharedSecret,
    bob_key: &SharedSecret,
    messages: &[u64],
    transport: Transport,
) -> Result<SessionOutcome, ChannelError> {
    let (tap, seen) = channel();
    let (a, b) = thread::scope(|s| -> Result<_, ChannelError> {
        let tap_b = tap.clone();
        let (a, b) = match transport {
            Transport::Pipe => {
                let (x, y) = duplex();
                let a = s.spawn(move || alice(x, alice_key, messages, tap));
                let b = s.spawn(move || bob(y, bob_key, tap_b));
                (a, b)
            }
            Transport::Tcp => {
                let (x, y) = tcp_pair()?;
                let a = s.spawn(move || alice(x, alice_key, messages, tap));
                let b = s.spawn(move || bob(y, bob_key, tap_b));
                (a, b)
            }
        };
        let panicked = |_| ChannelError::Endpoint("endpoint panicked".into());
        Ok((a.join().map_err(panicked)?, b.join().map_err(panicked)?))
    })?;
    let (local, mut remote) = (a?, b?.into_iter());
    let results = local
        .into_iter()
        .map(|l| match l {
            Some(e) => Err(e),
            None => remote.next().expect("one reply per frame"),
        })
        .collect();
    let mut transcript = Transcript::new();
    for (d, f) in seen.try_iter() {
        transcript.push(d, f);
    }
    Ok(SessionOutcome { results, transcript })
}

/// Bob's side recomputed from the transcript alone.
pub fn replay(transcript: &Transcript, bob_key: &SharedSecret) -> Vec<Result<u64, ProtocolError>> {
    transcript
        .requests()
        .map(|(i, f)| {
            f.text()
                .map_err(|e| ProtocolError::MalformedTransmission(e.to_string()))
                .and_then(|t| bob_key.parse_transmission(t))
                .and_then(|tx| bob_key.decode(&tx, i))
        })
        .collect()
}
