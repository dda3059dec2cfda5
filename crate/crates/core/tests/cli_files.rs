//! The binary's file-based subcommands end to end.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_twistor"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli_files");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn read_json(p: &PathBuf) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn implicitize_then_verify() {
    let input = scratch("quadric_in.json");
    let surface = scratch("quadric_surface.json");
    std::fs::write(&input, r#"{"g": "v", "h": "0"}"#).unwrap();
    let st = bin()
        .args(["implicitize", "--in"])
        .arg(&input)
        .arg("--out")
        .arg(&surface)
        .status()
        .unwrap();
    assert!(st.success());
    let v = read_json(&surface);
    assert_eq!(v["degree"], 2);
    assert_eq!(v["provenance"]["construction"], "slice");

    let on = scratch("line_on.json");
    std::fs::write(&on, r#"{"A": ["1", "0", "2", "0"], "B": ["0", "1", "0", "2"]}"#).unwrap();
    let out = bin().args(["verify", "--surface"]).arg(&surface).arg("--line").arg(&on).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("on surface: true"));

    let off = scratch("line_off.json");
    std::fs::write(&off, r#"{"A": ["1", "0", "0", "0"], "B": ["0", "0", "0", "1"]}"#).unwrap();
    let out = bin().args(["verify", "--surface"]).arg(&surface).arg("--line").arg(&off).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stdout).contains("on surface: false"));
}

#[test]
fn report_writes_certificate() {
    let input = scratch("ruled_in.json");
    let cert = scratch("ruled_cert.json");
    std::fs::write(&input, r#"{"f4": "w^2 - 1", "f5": "2*w"}"#).unwrap();
    let st = bin()
        .args(["report", "--samples", "4", "--seed", "9", "--in"])
        .arg(&input)
        .arg("--out")
        .arg(&cert)
        .status()
        .unwrap();
    assert!(st.success());
    let v = read_json(&cert);
    assert_eq!(v["seed"], 9);
    assert_eq!(v["parity_ok"], true);
    assert_eq!(v["twistor_fibers"].as_array().unwrap().len(), 4);
}

#[test]
fn bad_input_exits_with_error() {
    let out = bin().args(["lift", "--g", "v**2", "--h", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 2"));
    let out = bin().args(["is-twistor", "--pluecker", "1,0,0,0,0,1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
