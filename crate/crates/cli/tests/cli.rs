use std::path::Path;
use std::process::{Command, Output};

fn dgc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dgc")).args(args).output().unwrap()
}

fn dgc_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dgc")).args(args).env(key, value).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn tower_materializes_small_case() {
    let o = dgc(&["tower", "--r", "2", "--n", "3", "--materialize"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("F2 length: 2^(2^3) = 256"), "{s}");
    assert!(s.contains("expanded length: 256"));
    let o = dgc(&["--format", "json", "tower", "--r", "14", "--n", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["f2_length"].as_str().unwrap().len(), 225);
}

#[test]
fn bs12_profile_csv() {
    let o = dgc(&["bench", "distortion", "--platform", "bs12", "--radius", "5"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let last = s.lines().last().unwrap();
    let (n, d) = last.split_once(',').unwrap();
    assert_eq!(n, "5");
    assert!(d.parse::<u64>().unwrap() >= 4);
    for p in ["heis", "fbc"] {
        assert!(dgc(&["bench", "distortion", "--platform", p, "--radius", "3"]).status.success());
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let key = dir.path().join("k.json");
    assert!(dgc(&["keygen", "--protocol", "I", "--seed", "3", "--out", path(&key)]).status.success());
    let garbage = dir.path().join("g.txt");
    std::fs::write(&garbage, "not a transmission").unwrap();
    assert_eq!(dgc(&["decode", "--key", path(&key), "--in", path(&garbage)]).status.code(), Some(2));
    assert_eq!(dgc(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(dgc(&["tower", "--r", "2"]).status.code(), Some(1));
    assert_eq!(dgc(&["keygen", "--protocol", "I", "--seed", "3"]).status.code(), Some(1));
    let capped = dgc_env(&["tower", "--r", "2", "--n", "3", "--materialize"], "DGC_CAP", "100");
    assert_eq!(capped.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap"));
}

#[test]
fn encode_decode_files() {
    let dir = tempfile::tempdir().unwrap();
    for p in ["I", "IA", "IB", "II"] {
        let key = dir.path().join(format!("{p}.json"));
        assert!(dgc(&["keygen", "--protocol", p, "--seed", "02032016123342", "--out", path(&key)]).status.success());
        let o = dgc(&["encode", "--key", path(&key), "--n", "321"]);
        assert!(o.status.success());
        let tx = dir.path().join(format!("{p}.tx"));
        std::fs::write(&tx, &o.stdout).unwrap();
        assert!(stdout(&o).starts_with(&format!("DGC1 {p} ")));
        let d = dgc(&["decode", "--key", path(&key), "--in", path(&tx)]);
        assert_eq!(stdout(&d), "321\n", "{p}");
    }
}

#[test]
fn secrets_need_reveal() {
    let dir = tempfile::tempdir().unwrap();
    let key = dir.path().join("k.json");
    let o = dgc(&["keygen", "--protocol", "IB", "--seed", "7", "--out", path(&key)]);
    let s = stdout(&o);
    assert!(!s.contains("to_public") && !s.contains("seed"), "{s}");
    let o = dgc(&["keygen", "--protocol", "IB", "--seed", "7", "--reveal"]);
    assert_eq!(stdout(&o), std::fs::read_to_string(&key).unwrap());
}

#[test]
fn session_then_attacks() {
    let dir = tempfile::tempdir().unwrap();
    let key = dir.path().join("toy.json");
    let tr = dir.path().join("t.bin");
    assert!(dgc(&["keygen", "--protocol", "I", "--toy", "2", "--seed", "4", "--out", path(&key)]).status.success());
    let msgs = "17,40,99,123,5,77,310,64,9,250";
    let o = dgc(&["session", "--protocol", "I", "--key", path(&key), "--messages", msgs, "--transcript", path(&tr)]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("transcript: 20 frames"));
    let o = dgc(&["attack", "--name", "subgroup", "--transcript", path(&tr), "--key", path(&key)]);
    assert!(stdout(&o).starts_with("attack subgroup: success"), "{}", stdout(&o));

    let ib = dir.path().join("ib.json");
    let tr = dir.path().join("ib.bin");
    dgc(&["keygen", "--protocol", "IB", "--seed", "12", "--out", path(&ib)]);
    let o = dgc(&["session", "--protocol", "IB", "--key", path(&ib), "--messages", "6,60", "--transcript", path(&tr), "--tcp"]);
    assert!(o.status.success());
    let o = dgc(&["--format", "json", "attack", "--name", "alphabet", "--transcript", path(&tr), "--key", path(&ib)]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["success"], true);
    let o = dgc(&["attack", "--name", "guess", "--transcript", path(&tr)]);
    assert!(stdout(&o).contains("bound n >"));
    assert_eq!(dgc(&["session", "--protocol", "I", "--key", path(&ib), "--messages", "1"]).status.code(), Some(2));
}

#[test]
fn demo_identities_hold() {
    let o = dgc(&["demo"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(!s.contains("FAILED"));
    assert_eq!(s.matches("[ok]").count(), 4);
    assert!(s.contains("F2 length 14^(14^2) (225 digits)"));
}
