use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn parikh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parikh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn run_to(dir: &TempDir, name: &str, args: &[&str]) -> String {
    let path: PathBuf = dir.path().join(name);
    let path = path.to_string_lossy().into_owned();
    let mut full = args.to_vec();
    full.extend(["-o", &path]);
    let out = parikh(&full);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn demo_example1_line() {
    let out = parikh(&["demo", "example1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "input NFA: 18 states; minimal equivalent DFA: 212; Parikh-equivalent DFA fixture: 22; verify(bound=250): OK\n"
    );
}

#[test]
fn verify_is_reflexive_and_symmetric() {
    let a = fixture("example1.json");
    let b = fixture("example1_pdfa.json");
    assert_eq!(code(&parikh(&["verify", "--bound", "12", &a, &a])), 0);
    assert_eq!(code(&parikh(&["verify", "--bound", "250", &a, &b])), 0);
    assert_eq!(code(&parikh(&["verify", "--bound", "250", &b, &a])), 0);
}

#[test]
fn verify_reports_differences() {
    let dir = TempDir::new().unwrap();
    let a = fixture("example1.json");
    let other = run_to(&dir, "other.json", &["fixture", "random-nfa", "--seed", "3", "--size", "3"]);
    let out = parikh(&["verify", &a, &other]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("MISMATCH"));
    assert_eq!(code(&parikh(&["verify", &other, &a])), 1);
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"alphabet\":[\"a\"],\"states\":0}").unwrap();
    let bad = bad.to_string_lossy().into_owned();
    for cmd in ["nfa2pdfa", "dot", "report", "minimize"] {
        let out = parikh(&[cmd, &bad]);
        assert_eq!(code(&out), 2, "{cmd}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(code(&parikh(&["nfa2pdfa", "/no/such/file.json"])), 2);
    // a grammar where an automaton is expected, and the reverse
    assert_eq!(code(&parikh(&["nfa2pdfa", &fixture("witness5.json")])), 2);
    assert_eq!(code(&parikh(&["cfg2pdfa", &fixture("example1.json")])), 2);
    assert_eq!(code(&parikh(&["unary-dfa", &fixture("example1.json")])), 2);
    assert_eq!(code(&parikh(&["no-such-command"])), 2);
}

#[test]
fn conversions_verify_against_their_inputs() {
    let dir = TempDir::new().unwrap();
    let a = fixture("example1.json");
    let d = run_to(&dir, "pdfa.json", &["nfa2pdfa", &a]);
    assert_eq!(code(&parikh(&["verify", "--bound", "60", &a, &d])), 0);
    let t = run_to(&dir, "p2dfa.json", &["nfa2p2dfa", &a]);
    assert_eq!(code(&parikh(&["verify", "--bound", "40", &a, &t])), 0);

    let g = fixture("witness5.json");
    for (cmd, name) in [("cfg2pnfa", "g_nfa.json"), ("cfg2pdfa", "g_dfa.json"), ("cfg2p2dfa", "g_2dfa.json")] {
        let out = run_to(&dir, name, &[cmd, &g]);
        assert_eq!(code(&parikh(&["verify", "--bound", "10", &g, &out])), 0, "{cmd}");
    }
}

#[test]
fn witness_dfa_minimizes_to_at_least_nine_states() {
    let dir = TempDir::new().unwrap();
    let d = run_to(&dir, "w.json", &["cfg2pdfa", &fixture("witness5.json")]);
    let out = parikh(&["minimize", &d]);
    assert_eq!(code(&out), 0);
    let stderr = String::from_utf8(out.stderr.clone()).unwrap();
    let states: usize = stderr
        .trim()
        .strip_prefix("minimal DFA: ")
        .and_then(|s| s.strip_suffix(" states"))
        .expect("size line")
        .parse()
        .unwrap();
    assert!(states >= 9, "{stderr}");
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["states"], states);
}

#[test]
fn unary_commands() {
    let dir = TempDir::new().unwrap();
    let u = run_to(&dir, "u.json", &["fixture", "random-nfa", "--letters", "1", "--size", "6", "--seed", "11"]);
    let d = run_to(&dir, "ud.json", &["unary-dfa", &u]);
    let t = run_to(&dir, "ut.json", &["unary-2dfa", &u]);
    assert_eq!(code(&parikh(&["verify", "--bound", "30", &u, &d])), 0);
    assert_eq!(code(&parikh(&["verify", "--bound", "30", &u, &t])), 0);
    let nf: Value = serde_json::from_str(&stdout(&parikh(&["unary-chrobak", &u]))).unwrap();
    assert!(nf["path"].is_array() && nf["cycles"].is_array());
}

#[test]
fn structured_outputs() {
    let a = fixture("example1.json");
    let parts: Value = serde_json::from_str(&stdout(&parikh(&["decompose", &a]))).unwrap();
    assert_eq!(parts["nonunary"]["states"], 55);
    assert_eq!(parts["unary"].as_array().unwrap().len(), 2);

    let rep: Value = serde_json::from_str(&stdout(&parikh(&["semilinear", &a]))).unwrap();
    assert!(rep["Y"].is_array() && rep["Z"].is_array());

    let g: Value = serde_json::from_str(&stdout(&parikh(&["decompose", &fixture("witness5.json")]))).unwrap();
    assert_eq!(g["nonunary"]["variables"].as_array().unwrap().len(), 9);

    let csv = stdout(&parikh(&["report", "--csv", &a]));
    assert!(csv.starts_with("conversion,input_n,input_m,states,bound_name,bound_value,status\n"));
    assert!(stdout(&parikh(&["report", &a])).contains("decompose A_0 states = 55 = n(m+1)+1 = 55 PASS"));

    assert!(stdout(&parikh(&["dot", &a])).starts_with("digraph"));
}

#[test]
fn output_is_deterministic() {
    let a = fixture("example1.json");
    for args in [
        vec!["nfa2pdfa", a.as_str()],
        vec!["semilinear", a.as_str()],
        vec!["fixture", "random-grammar", "--seed", "9", "--size", "3"],
        vec!["demo", "random", "--seed", "5"],
    ] {
        let first = parikh(&args);
        assert_eq!(code(&first), 0, "{args:?}");
        assert_eq!(first.stdout, parikh(&args).stdout, "{args:?}");
    }
    let one = parikh(&["fixture", "random-nfa", "--seed", "1"]);
    let two = parikh(&["fixture", "random-nfa", "--seed", "2"]);
    assert_ne!(one.stdout, two.stdout);
}

#[test]
fn shipped_fixtures_match_the_builtins() {
    for (name, which) in [("example1.json", "example1"), ("example1_pdfa.json", "example1-pdfa")] {
        let shipped = std::fs::read_to_string(fixture(name)).unwrap();
        assert_eq!(stdout(&parikh(&["fixture", which])), shipped, "{name}");
    }
    let shipped = std::fs::read_to_string(fixture("witness5.json")).unwrap();
    assert_eq!(stdout(&parikh(&["fixture", "witness", "--size", "5"])), shipped);
}
