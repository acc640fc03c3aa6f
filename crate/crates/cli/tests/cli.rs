use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn posetlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posetlab")).args(args).output().expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_posetlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn file(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn winner_reports_first_and_second() {
    let dir = TempDir::new().unwrap();
    let anti = file(&dir, "anti.poset", "3\n");
    let o = posetlab(&["winner", s(&anti), "--game", "poset"]);
    assert_eq!(stdout(&o).trim(), "first");
    assert_eq!(o.status.code(), Some(0));

    let two_k2 = file(&dir, "k2k2.graph", "4\n0 1\n2 3\n");
    let o = posetlab(&["winner", s(&two_k2), "--game", "kayles"]);
    assert_eq!(stdout(&o).trim(), "second");
    assert_eq!(o.status.code(), Some(1));

    let empty = file(&dir, "empty.poset", "0\n");
    let o = posetlab(&["winner", s(&empty)]);
    assert_eq!(stdout(&o).trim(), "second");
}

#[test]
fn grundy_of_a_chain() {
    let dir = TempDir::new().unwrap();
    let chain = file(&dir, "chain.poset", "4\n0 1\n1 2\n2 3\n");
    let o = posetlab(&["grundy", s(&chain)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "4");
}

#[test]
fn reduce_k2_writes_poset_and_mapping() {
    let dir = TempDir::new().unwrap();
    let k2 = file(&dir, "k2.graph", "2\n0 1\n");
    let out = dir.path().join("out.poset");
    let map = dir.path().join("out.map");
    let dot = dir.path().join("out.dot");
    let o = posetlab(&[
        "reduce",
        s(&k2),
        "--from",
        "kayles",
        "--to",
        "poset",
        "--out",
        s(&out),
        "--map-out",
        s(&map),
        "--dot",
        s(&dot),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    // K2 padded to K2 ⊔ K2 ⊔ K2: 3 edges and 6 vertices give 3 + 6 + 3 elements
    let poset = fs::read_to_string(&out).unwrap();
    assert_eq!(poset.lines().next(), Some("12"));
    let mapping = fs::read_to_string(&map).unwrap();
    assert_eq!(mapping.lines().filter(|l| l.starts_with("A ")).count(), 3);
    assert_eq!(mapping.lines().filter(|l| l.starts_with("B ")).count(), 6);
    assert_eq!(mapping.lines().filter(|l| l.starts_with("C ")).count(), 3);
    assert!(fs::read_to_string(&dot).unwrap().starts_with("digraph poset"));

    let o = posetlab(&["winner", s(&out)]);
    assert_eq!(stdout(&o).trim(), "first");
}

#[test]
fn reduce_chain_to_nested_sets() {
    let dir = TempDir::new().unwrap();
    let chain = file(&dir, "chain.poset", "3\n0 1\n1 2\n");
    let o = posetlab(&["reduce", s(&chain), "--from", "poset", "--to", "setgame"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let sets = dir.path().join("chain.sets");
    fs::write(&sets, &text).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("3 3"));
    assert_eq!(lines.collect::<Vec<_>>(), vec!["0 1 2", "1 2", "2"]);
    let o = posetlab(&["grundy", s(&sets), "--game", "setgame"]);
    assert_eq!(stdout(&o).trim(), "3");
}

#[test]
fn unsupported_reduction_is_an_error() {
    let dir = TempDir::new().unwrap();
    let chain = file(&dir, "chain.poset", "2\n0 1\n");
    let o = posetlab(&["reduce", s(&chain), "--from", "poset", "--to", "kayles"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unsupported"));
}

#[test]
fn verify_suites_exit_codes() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("theorem.jsonl");
    let o = posetlab(&["verify", "--suite", "theorem", "--max-n", "4", "--out", s(&report)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let lines: Vec<String> = fs::read_to_string(&report).unwrap().lines().map(String::from).collect();
    assert_eq!(lines.len(), 75);
    assert!(lines.iter().all(|l| l.contains("\"verdict\":\"pass\"")));

    let o = posetlab(&["verify", "--suite", "lemma1", "--max-n", "5", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));

    let o = posetlab(&["verify", "--suite", "lemma2", "--max-n", "9"]);
    assert_eq!(o.status.code(), Some(2));

    let o = posetlab(&["verify", "--suite", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn play_against_the_engine() {
    let dir = TempDir::new().unwrap();
    let single = file(&dir, "one.poset", "1\n");
    let o = with_stdin(&["play", s(&single)], "5\n0\n");
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert!(text.contains("illegal move"), "{text}");
    assert!(text.contains("you win"), "{text}");

    let o = with_stdin(&["play", s(&single), "--engine-first"], "");
    assert!(stdout(&o).contains("engine plays 0"));
    assert!(stdout(&o).contains("engine wins"));
}

#[test]
fn export_dot_of_a_graph_image() {
    let dir = TempDir::new().unwrap();
    let k2 = file(&dir, "k2.graph", "2\n0 1\n");
    let o = posetlab(&["export-dot", s(&k2), "--game", "kayles"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph poset"));
    assert!(dot.contains("level=\"B\""));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.graph", "3\n0 1\n1 x\n");
    let o = posetlab(&["winner", s(&bad), "--game", "kayles"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let cyclic = file(&dir, "cyc.poset", "2\n0 1\n1 0\n");
    let o = posetlab(&["winner", s(&cyclic)]);
    assert_eq!(o.status.code(), Some(2));
}
