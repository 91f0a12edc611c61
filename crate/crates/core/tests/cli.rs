mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use common::*;
use powerdec::cli::cli_main;
use powerdec::config::format_word;
use powerdec::decoder::DecoderParams;
use powerdec::sim::{run_trials, write_csv, SimConfig};
use powerdec::variants::Variant;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_powerdec"))
        .args(args)
        .output()
        .expect("run binary")
}

fn code_file(dir: &Path, json: &str) -> PathBuf {
    let path = dir.join("code.json");
    std::fs::write(&path, json).unwrap();
    path
}

const WORKED: &str = r#"{"field": {"p": 23}, "n": 23, "k": 7}"#;

#[test]
fn radius_prints_exact_and_floor() {
    let dir = tempfile::tempdir().unwrap();
    let code = code_file(dir.path(), WORKED);
    let out = bin(&["radius", "--code", code.to_str().unwrap(), "--s", "2", "--l", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("tau_pow=19/2"), "{text}");
    assert!(text.contains("floor=9"));
    assert!(text.contains("tau_gs=79/8"));

    let out = bin(&["radius", "--code", code.to_str().unwrap(), "--sweep", "--max-s", "2", "--max-l", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 5);
}

#[test]
fn decode_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = code_file(dir.path(), WORKED);
    let code = code.to_str().unwrap();
    let r3 = format_word(&words(&R3));
    let r4 = format_word(&words(&R4));
    for variant in ["gao", "reencoded"] {
        let ok = bin(&["decode", "--code", code, "--s", "2", "--l", "3", "--variant", variant, "--received", &r3]);
        assert_eq!(ok.status.code(), Some(0));
        let text = String::from_utf8(ok.stdout).unwrap();
        assert!(text.contains(&format!("codeword: {}", format_word(&words(&C3)))), "{text}");
        let bad = bin(&["decode", "--code", code, "--s", "2", "--l", "3", "--variant", variant, "--received", &r4]);
        assert_eq!(bad.status.code(), Some(2));
    }
    let json = bin(&["decode", "--code", code, "--s", "2", "--l", "3", "--received", &r3, "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["status"], "decoded");
    assert_eq!(v["deg_lambda0"], 16);
    assert_eq!(v["tau_pow"], "19/2");
}

#[test]
fn malformed_input_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let code = code_file(dir.path(), WORKED);
    let code = code.to_str().unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["decode", "--code", code, "--s", "2", "--l", "3", "--received", "1,2,3"],
        vec!["decode", "--code", code, "--s", "2", "--l", "3", "--received", "1,2,x"],
        vec!["decode", "--code", code, "--s", "1", "--l", "4", "--received", "0"],
        vec!["decode", "--code", code, "--s", "2", "--l", "3", "--variant", "syndrome", "--received", "0"],
        vec!["decode", "--code", "/nonexistent.json", "--s", "1", "--l", "1", "--received", "0"],
        vec!["encode", "--code", code, "--message", "1,2,3,4,5,6,7,8"],
        vec!["radius", "--code", code],
        vec!["frobnicate"],
        vec!["decode", "--code", code, "--s", "2", "--l", "3", "--variant", "bogus", "--received", "0"],
    ];
    for args in cases {
        let out = bin(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
        let mut argv = vec!["powerdec"];
        argv.extend(&args);
        assert_eq!(cli_main(argv), 1);
    }
}

#[test]
fn encode_prints_codeword() {
    let dir = tempfile::tempdir().unwrap();
    let code = code_file(dir.path(), r#"{"field": {"p": 7}, "n": 6, "k": 2, "alphas": [1,2,3,4,5,6]}"#);
    let out = bin(&["encode", "--code", code.to_str().unwrap(), "--message", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "2,3,4,5,6,0");
}

#[test]
fn simulate_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let code = code_file(dir.path(), WORKED);
    let code = code.to_str().unwrap();
    let mut outputs = Vec::new();
    for (i, jobs) in ["1", "4", "8", "1"].iter().enumerate() {
        let csv = dir.path().join(format!("out{i}.csv"));
        let out = bin(&[
            "simulate", "--code", code, "--s", "2", "--l", "3", "--trials", "60", "--seed", "5",
            "--jobs", jobs, "--out", csv.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert!(String::from_utf8(out.stdout).unwrap().contains("wall_time_s="));
        outputs.push(std::fs::read(&csv).unwrap());
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
    let text = String::from_utf8(outputs.remove(0)).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,k,q,s,l,variant,tau,trials,fail_no_result,fail_wrong,pf,seed");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("23,7,23,2,3,gao,8,60,"));
    assert!(lines[3].starts_with("23,7,23,2,3,gao,10,60,"));
}

#[test]
fn simulate_with_explicit_weights_and_variant() {
    let dir = tempfile::tempdir().unwrap();
    let code = code_file(dir.path(), r#"{"field": {"p": 23}, "n": 22, "k": 7}"#);
    let csv = dir.path().join("syn.csv");
    let out = bin(&[
        "simulate", "--code", code.to_str().unwrap(), "--s", "2", "--l", "3", "--tau", "0,4",
        "--trials", "20", "--seed", "1", "--variant", "syndrome", "--out", csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.contains("22,7,23,2,3,syndrome,0,20,0,0,0.000000,1"));
    assert!(text.contains("22,7,23,2,3,syndrome,4,20,0,0,0.000000,1"));
}

#[test]
fn library_simulation_determinism_across_widths() {
    let row = TABLE[1];
    let mut reference = None;
    for jobs in [1, 4, 8] {
        let cfg = SimConfig {
            code: row.code(),
            params: DecoderParams::new(row.s, row.l),
            variant: Variant::Gao,
            taus: vec![12, 13, 14],
            trials: 40,
            seed: 99,
            jobs,
        };
        let stats = run_trials(&cfg).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &cfg, &stats).unwrap();
        match &reference {
            None => reference = Some(buf),
            Some(r) => assert_eq!(r, &buf),
        }
    }
}
