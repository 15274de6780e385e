use std::io::Write;
use std::process::{Command, Output, Stdio};

fn braid3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braid3"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = braid3(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn documented_commands() {
    assert_eq!(stdout(&["normalize", "s1^-1 s2 s1^-1 s2"]), "d^-2 | a1^2 a2^2\n");
    assert_eq!(stdout(&["genus", "a1^3 a2"]), "1\n");
    assert!(stdout(&["classify", "a1^3 a2^-3"])
        .starts_with("labels=ConnectedSumTwoBraids relation=OPEN rep=`a1^3 a2^-3`"));
    assert_eq!(stdout(&["shortest", "a1^-1 a2 a1^-1 a2"]), "a1^-1 a3^-1 a2^2\n");
    assert_eq!(stdout(&["oracle", "burau", "a2 a1", "a3 a2"]), "true\n");
    assert_eq!(stdout(&["oracle", "max-inf", "a1^3 a2", "--depth", "4"]), "2\n");
    assert!(stdout(&["conjugate", "a1", "a3"]).starts_with("conjugate c="));
    assert!(stdout(&["unknot-seq", "a1^-1 a2 a1^-1 a2"]).contains("a3^-1 a2^-1 a1^2  ->  a3^-1 a2^-1"));
    assert!(stdout(&["summit", "--set", "a1^-1 a2 a1^-1 a2"]).contains("summit set size 6"));
    assert!(stdout(&["invariants", "a1^3 a2"]).contains("genus=1"));
}

#[test]
fn json_records() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--json", "classify", "d^-4 a1^6"])).unwrap();
    assert_eq!(v["v"], 1);
    assert_eq!(v["relation"], "STRICT");
    assert_eq!(v["u_bound"], 1);
    assert_eq!(v["genus"], 2);
}

#[test]
fn exit_codes() {
    assert_eq!(braid3(&["genus", "a1^2"]).status.code(), Some(1));
    assert_eq!(braid3(&["normalize", "a1 a4"]).status.code(), Some(2));
    assert_eq!(braid3(&["oracle", "shortest", "a1", "--max-len", "12"]).status.code(), Some(1));
    assert_eq!(braid3(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn corpus_matches_golden_records() {
    let out = stdout(&["corpus"]);
    assert_eq!(out.lines().count(), braid3::corpus::CORPUS.len());
    assert!(!out.contains("MISMATCH"));
}

#[test]
fn batch_is_ordered_and_deterministic() {
    let input: String = [
        "s1^-1 s2 s1^-1 s2",
        "a1^3 a2",
        "a1^2",
        "d^-4 a1^6",
        "a1^3 a2^-3",
        "a1 ^",
        "a3^-1 a2^2 a3^2 a1",
    ]
    .iter()
    .enumerate()
    .flat_map(|(n, w)| {
        ["genus", "classify"]
            .map(|c| format!("{{\"id\": {n}, \"word\": \"{w}\", \"command\": \"{c}\", \"note\": \"x\"}}\n"))
    })
    .collect();
    let run = || {
        let mut child = Command::new(env!("CARGO_BIN_EXE_braid3"))
            .args(["batch", "--jsonl", "-"])
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
        child.wait_with_output().unwrap()
    };
    let first = run();
    assert!(first.status.success());
    assert_eq!(first.stdout, run().stdout);
    let records: Vec<serde_json::Value> = String::from_utf8(first.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 14);
    for (n, r) in records.iter().enumerate() {
        assert_eq!(r["v"], 1);
        assert_eq!(r["id"], n / 2);
    }
    assert_eq!(records[4]["error"]["kind"], "NotAKnot");
    assert_eq!(records[10]["error"]["exit_code"], 2);
}
