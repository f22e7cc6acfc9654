use std::path::Path;
use std::process::{Command, Output};

/// Runs `srm` with whitespace-separated arguments.
fn srm(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srm"))
        .args(args.split_whitespace())
        .output()
        .expect("spawn srm")
}

fn code(o: &Output) -> Option<i32> {
    o.status.code()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn params_json() {
    let o = srm("code params --q 3 --n 4 --r 5 --I 1 --format json");
    assert_eq!(code(&o), Some(0));
    assert_eq!(json(&o)["length"], 81);
    assert_eq!(json(&o)["dimension"], 62);
}

#[test]
fn dual_of_table_code() {
    let o = srm("code dual --q 3 --n 4 --r 5 --I 1");
    assert_eq!(code(&o), Some(0));
    let s = String::from_utf8_lossy(&o.stdout);
    assert!(s.contains("C_3(3,{3},4)"), "{s}");
}

#[test]
fn exit_codes() {
    // I outside M_r
    assert_eq!(code(&srm("code params --q 3 --n 4 --r 5 --I 2")), Some(2));
    assert_eq!(code(&srm("verify nosuch")), Some(2));
    assert_eq!(code(&srm("code params --q 6 --n 2 --r 1")), Some(2));
    let o = srm("code mindist --q 3 --n 4 --r 4 --I 2 --strategy bz --budget 1000");
    assert_eq!(code(&o), Some(3));
    assert_eq!(code(&srm("verify example")), Some(0));
}

#[test]
fn mindist_report() {
    let o = srm("code mindist --q 3 --n 4 --r 1 --I 1 --format json");
    assert_eq!(code(&o), Some(0));
    let v = json(&o);
    assert_eq!(v["exact"], 54);
    let w = v["witness"].as_str().unwrap();
    assert_eq!(w.len(), 81);
    assert_eq!(w.chars().filter(|&c| c != '0').count(), 54);
}

#[test]
fn config_overrides_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    let body = r#"{"field": {"p": 3, "n": 4}, "code": {"r": 3, "I": [3]}, "format": "json"}"#;
    std::fs::write(&cfg, body).unwrap();
    let o = srm(&format!(
        "--config {} code params --q 3 --n 4 --r 5 --I 1 --format text",
        path(&cfg)
    ));
    assert_eq!(code(&o), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["dimension"], 19);
}

#[test]
fn unknown_config_key() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.json");
    std::fs::write(&cfg, r#"{"budgit": 5}"#).unwrap();
    let o = srm(&format!("--config {} field info --q 3 --n 4", path(&cfg)));
    assert_eq!(code(&o), Some(2));
}

#[test]
fn export_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for out in [&a, &b] {
        let o = srm(&format!(
            "export --q 2 --n 4 --r 2 --I 0 --what minvectors --out {}",
            path(out)
        ));
        assert_eq!(code(&o), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 20);
    assert!(rows
        .iter()
        .all(|r| r.len() == 16 && r.matches('1').count() == 4));
}

#[test]
fn generator_export_shape() {
    let o = srm("export --q 2 --n 4 --r 2 --I 0 --what generator");
    assert_eq!(code(&o), Some(0));
    let s = String::from_utf8_lossy(&o.stdout);
    let rows: Vec<&str> = s.lines().collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.split(',').count() == 16));
}
