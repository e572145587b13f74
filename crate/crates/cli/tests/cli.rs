use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graph-energy")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_graph-energy"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = run(&a);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn energy_all_routes_agree() {
    let v = json(&["energy", "L:7:6", "--method", "all"]);
    let results = v[0]["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    for r in results {
        assert!((r["value"].as_f64().unwrap() - 8.72057).abs() < 5e-6, "{r}");
    }
    assert!(v[0]["max_route_deviation"].as_f64().unwrap() < 1e-8);
}

#[test]
fn energy_text_and_graph6() {
    assert!(stdout(&run(&["energy", "C:4"])).contains("4.00000"));
    // C_10 in graph6, as written by an independent encoder.
    let o = run(&["energy", "g6:IhCGGC@_G"]);
    assert!(stdout(&o).contains("12.94427"), "{}", stdout(&o));
}

#[test]
fn graph6_batch_from_stdin() {
    let o = run_stdin(&["energy", "g6:-", "--format", "csv"], "IhCGGC@_G\n\nC~\n");
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("g6:IhCGGC@_G,exact,12.9442719"));
    assert!(lines[2].starts_with("g6:C~,exact,6"));
}

#[test]
fn differences() {
    let v = json(&["diff", "L:7:3", "L:7:6", "--method", "coulson"]);
    assert!((v[0]["value"].as_f64().unwrap() - 0.22026).abs() <= 5e-5);
    let v = json(&["diff", "C:7", "L:7:6", "--method", "exact"]);
    assert!((v[0]["value"].as_f64().unwrap() - 0.26735).abs() <= 1e-5);
}

#[test]
fn tables_reproduce() {
    for (id, cells) in [("1", 7), ("2", 47), ("3", 24)] {
        let v = json(&["table", id]);
        assert_eq!(v["cells"].as_array().unwrap().len(), cells);
        assert_eq!(v["passed"], Value::Bool(true));
        assert!(v["max_deviation"].as_f64().unwrap() <= 5e-5);
    }
    let text = stdout(&run(&["table", "1"]));
    let row = text.lines().find(|l| l.starts_with("E(P17^11)")).unwrap();
    assert!(row.contains("-0.12030"), "{row}");
    let csv = stdout(&run(&["table", "3", "--format", "csv"]));
    assert!(csv.lines().any(|l| l.starts_with("E(P11^3),11,3,14.0073")));
    assert!(csv.lines().any(|l| l.starts_with("E(C11),11,3,14.0533")));
    assert_eq!(run(&["table", "4"]).status.code(), Some(2));
}

#[test]
fn search_headline_and_jobs() {
    let text = stdout(&run(&["search", "--n", "4"]));
    assert!(text.lines().next().unwrap().contains("L:4:3"));
    let a = run(&["search", "--n", "9", "--top-k", "4", "--jobs", "1", "--format", "json"]);
    let b = run(&["search", "--n", "9", "--top-k", "4", "--jobs", "4", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["ranked"][0]["code"], "C:9");
    assert_eq!(v["examined"], 240);
}

#[test]
fn enumerate_counts_and_graph6() {
    assert_eq!(stdout(&run(&["enumerate", "--n", "8", "--count-only"])).trim(), "89");
    let g6 = stdout(&run(&["enumerate", "--n", "5", "--emit", "g6"]));
    let lines: Vec<&str> = g6.lines().collect();
    assert_eq!(lines.len(), 5);
    for l in lines {
        let g = energy_core::parse_graph6(l).unwrap();
        assert_eq!((g.order(), g.size()), (5, 5));
        assert!(g.is_connected());
    }
    assert_eq!(run(&["enumerate", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn certify_and_refutation() {
    let o = run(&["certify", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let claims = v.as_array().unwrap();
    assert_eq!(claims.len(), 8);
    assert!(claims.iter().all(|c| c["status"] == "certified"));

    let o = run(&["certify", "C3", "--tampered"]);
    assert_eq!(o.status.code(), Some(5));
    assert!(stdout(&o).contains("refuted by C3/i=2"));
    assert_eq!(run(&["certify", "C1", "--tampered"]).status.code(), Some(0));
    assert_eq!(run(&["certify", "C42"]).status.code(), Some(2));
}

#[test]
fn closed_form_checks() {
    let v = json(&["closed-form-check", "--n", "11", "--t", "5", "--grid=-3.5,-0.4,0.6,2.2"]);
    let checks = v.as_array().unwrap();
    assert_eq!(checks.len(), 3);
    assert!(checks.iter().all(|c| c["passed"] == Value::Bool(true)));
    assert_eq!(run(&["closed-form-check", "--n", "5"]).status.code(), Some(2));
    assert_eq!(run(&["closed-form-check", "--grid", "1,x"]).status.code(), Some(2));
}

#[test]
fn parse_errors_exit_2() {
    for args in [&["energy", "L:7:x"][..], &["energy", "Q:3"], &["energy", "C:2"], &["energy", "g6:@@@"], &["bogus"]] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}
