use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use wdrd_core::corpus::corpus;
use wdrd_core::family::CATALOG;

fn wdrd(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wdrd"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn gen_family1() {
    let out = wdrd(&["gen", "--family", "1", "--n", "2"], None);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["n"], 12);
}

#[test]
fn verify_builtin() {
    let out = wdrd(&["verify", "--builtin", "cay_z6_12"], None);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["is_wdrd"], true);
    assert_eq!(v["t_set"], serde_json::json!([3, 4]));
    assert!(v["version"].is_string());
}

#[test]
fn classify_c4() {
    let out = wdrd(&["classify", "--builtin", "c4"], None);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["verdict"], "Type-II");
    assert_eq!(v["tournament_params"], serde_json::json!([0, 0, 1]));
}

#[test]
fn gen_round_trips_through_verify() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["--family", "1", "--n", "1"],
        vec!["--family", "2", "--l", "2", "--base", "c3"],
        vec!["--family", "2", "--l", "3", "--base", "cay_z4_12"],
        vec!["--family", "3", "--n", "1", "--base", "paley7"],
        vec!["--family", "4", "--n", "2", "--base", "c4"],
        vec!["--family", "5", "--base", "c4"],
    ];
    let builtins = CATALOG.iter().map(|b| vec!["--builtin", b]);
    for args in cases.into_iter().chain(builtins) {
        let gen = wdrd(&[&["gen"][..], &args].concat(), None);
        assert_eq!(code(&gen), 0, "gen {args:?}");
        let text = String::from_utf8(gen.stdout).unwrap();
        let out = wdrd(&["verify", "--input", "-"], Some(&text));
        let expect_wdrd = !args.contains(&"complete2") && !args.contains(&"complete3");
        assert_eq!(code(&out), if expect_wdrd { 0 } else { 1 }, "verify {args:?}");
        assert_eq!(json(&out)["is_wdrd"], expect_wdrd);
    }
}

#[test]
fn matrix_format_round_trip() {
    let gen = wdrd(&["gen", "--builtin", "paley7", "--format", "matrix"], None);
    assert_eq!(code(&gen), 0);
    let text = String::from_utf8(gen.stdout).unwrap();
    assert!(text.starts_with("7\n"));
    let out = wdrd(&["verify", "--input", "-", "--format", "matrix"], Some(&text));
    assert_eq!(code(&out), 0);
}

#[test]
fn output_is_byte_identical() {
    for args in [&["classify", "--builtin", "paley7"][..], &["search", "--max-order", "8"], &["scheme", "--builtin", "cay_z4_12"]] {
        assert_eq!(wdrd(args, None).stdout, wdrd(args, None).stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    // Not a WDRD: symmetric scheme.
    let out = wdrd(&["verify", "--builtin", "complete3"], None);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["is_wdrd"], false);
    assert_eq!(code(&wdrd(&["verify", "--builtin", "nope"], None)), 2);
    assert_eq!(code(&wdrd(&["gen", "--family", "2", "--l", "1", "--base", "c3"], None)), 2);
    assert_eq!(code(&wdrd(&["verify", "--input", "-"], Some("{\"n\": 2, \"arcs\": [[0,0]]}"))), 2);
    assert_eq!(code(&wdrd(&["verify"], None)), 2);
    assert_eq!(code(&wdrd(&["search", "--budget", "0"], None)), 2);
    assert_eq!(code(&wdrd(&["search", "--max-order", "20"], None)), 2);
}

#[test]
fn transforms() {
    let out = wdrd(&["extend", "--builtin", "cay_z4_12", "--n", "2"], None);
    assert_eq!(json(&out)["n"], 8);
    let out = wdrd(&["product", "--builtin", "c3", "--right-builtin", "c4"], None);
    assert_eq!(json(&out)["n"], 12);
    let g = wdrd(&["gen", "--family", "2", "--l", "2", "--base", "c3"], None);
    let text = String::from_utf8(g.stdout).unwrap();
    let out = wdrd(&["quotient", "--input", "-", "--labels", "3,3"], Some(&text));
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["n"], 3);
}

#[test]
fn search_lines() {
    let out = wdrd(&["search", "--max-order", "6"], None);
    assert_eq!(code(&out), 0);
    let lines: Vec<Value> = out.stdout.split(|&b| b == b'\n').filter(|l| !l.is_empty()).map(|l| serde_json::from_slice(l).unwrap()).collect();
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|h| h["findings"].as_array().is_some_and(Vec::is_empty)));
}

#[test]
fn corpus_never_violates() {
    for (name, g) in corpus().unwrap() {
        let out = wdrd(&["classify", "--input", "-"], Some(&g.to_json()));
        assert_ne!(code(&out), 3, "{name}: {}", String::from_utf8_lossy(&out.stdout));
        assert_ne!(code(&out), 2, "{name}: {}", String::from_utf8_lossy(&out.stderr));
    }
}
