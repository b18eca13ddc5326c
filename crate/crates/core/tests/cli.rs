use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cartan-toric")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn passing_runs_exit_zero() {
    assert_eq!(code(&["fan", "--type", "A2"]), 0);
    assert_eq!(code(&["coh", "--type", "G2"]), 0);
    assert_eq!(code(&["peterson", "--rank", "1"]), 0);
    assert_eq!(code(&["peterson", "--rank", "2", "--format", "text"]), 0);
}

#[test]
fn usage_and_guards_exit_two() {
    assert_eq!(code(&["fan", "--type", "X9"]), 2);
    assert_eq!(code(&["fan", "--type", "E5"]), 2);
    assert_eq!(code(&["peterson", "--rank", "5"]), 2);
    assert_eq!(code(&["peterson", "--rank", "3"]), 2);
    assert_eq!(code(&["plot", "--type", "A3"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["coh", "--type", "E8"]), 2);
}

#[test]
fn json_is_reproducible() {
    let args = ["fan", "--type", "B2", "--seed", "5", "--samples", "200"];
    let a = run(&args).stdout;
    let b = run(&args).stdout;
    assert!(!a.is_empty());
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["schema"], 1);
    let a = run(&["peterson", "--rank", "2", "--seed", "3"]).stdout;
    let b = run(&["peterson", "--rank", "2", "--seed", "3"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn plot_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.svg");
    assert_eq!(code(&["plot", "--type", "G2", "--out", path.to_str().unwrap()]), 0);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    let json = run(&["plot", "--type", "A2", "--format", "json"]).stdout;
    let v: serde_json::Value = serde_json::from_slice(&json).unwrap();
    assert!(v.is_object());
}
