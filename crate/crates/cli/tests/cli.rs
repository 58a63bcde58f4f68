use std::process::{Command, Output};

use newton_ehrhart::PolytopeHandle;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_newton-ehrhart")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&a)).unwrap()
}

#[test]
fn hstar_examples() {
    assert_eq!(stdout(&["hstar", "--kind", "schur", "--lambda", "2,1", "--m", "3"]).trim(), "1,4,1");
    assert_eq!(stdout(&["hstar", "--kind", "grothendieck", "--h", "2", "--lambda", "2,0,0"]).trim(), "1,19,19,1");
    assert_eq!(stdout(&["hstar", "--lambda", "2,1", "--m", "3", "--format", "csv"]).trim(), "1,4,1");
}

#[test]
fn json_round_trips() {
    let v = json(&["hstar", "--lambda", "2,2,2,2,1", "--m", "9"]);
    let coeffs: Vec<&str> = v["hstar"]["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(coeffs[4], "2112016");
    assert_eq!(v["hstar"]["dim"], 8);
    assert_eq!(v["palindromic"], true);
    let handle: PolytopeHandle = serde_json::from_value(v["handle"].clone()).unwrap();
    assert_eq!(handle.to_string(), "P_(2,2,2,2,1,0,0,0,0)");

    let p = json(&["points", "--kind", "grothendieck", "--lambda", "2,1,0"]);
    assert_eq!(p["count"], 17);
    let handle: PolytopeHandle = serde_json::from_value(p["handle"].clone()).unwrap();
    assert_eq!(handle.h(), Some(1));
}

#[test]
fn points_facets_vertices() {
    let pts = stdout(&["points", "--lambda", "2,1,0"]);
    assert_eq!(pts.lines().count(), 7);
    assert!(pts.lines().any(|l| l == "1,1,1"));
    let csv = stdout(&["points", "--lambda", "2,1,0", "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("x1,x2,x3"));
    let facets = stdout(&["facets", "--kind", "grothendieck", "--lambda", "2,1,0"]);
    assert_eq!(facets.lines().filter(|l| !l.starts_with("span")).count(), 7);
    let csv = stdout(&["facets", "--lambda", "2,1,0", "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("a1,a2,a3,b,eq"));
    assert_eq!(csv.lines().count(), 1 + 1 + 6);
    let a = stdout(&["facets", "--lambda", "3,1,0,0"]);
    let b = stdout(&["facets", "--lambda", "3,1,0,0", "--geometric"]);
    assert_eq!(a.lines().count(), b.lines().count());
    let v = stdout(&["vertices", "--lambda", "2,1,0"]);
    assert_eq!(v.lines().count(), 6);
}

#[test]
fn reflexive_and_gorenstein() {
    let out = stdout(&["reflexive", "--kind", "grothendieck", "--h", "1", "--lambda", "4,4,0", "--m", "3", "--method", "both"]);
    assert!(out.contains("geometric: true") && out.contains("classifier: true"), "{out}");
    let out = stdout(&["reflexive", "--lambda", "3,1,0,0"]);
    assert!(out.contains("geometric: false") && out.contains("classifier: false"));
    let v = json(&["reflexive", "--lambda", "2,2,0,0"]);
    assert_eq!(v["geometric"]["verdict"], "reflexive");
    assert_eq!(v["classifier"]["reflexive"], true);
    let out = stdout(&["gorenstein", "--lambda", "1,1,1,0,0,0"]);
    assert!(out.contains("geometric: true (index 2)") && out.contains("classifier: true"), "{out}");
    let out = stdout(&["gorenstein", "--lambda", "0,0,0"]);
    assert!(out.contains("degenerate"));
}

#[test]
fn idp_snp_formula() {
    let out = stdout(&["idp", "--lambda", "2,1,0", "--tmax", "3"]);
    assert!(out.contains("brute: true") && out.contains("63 certificates"), "{out}");
    let v = json(&["idp", "--kind", "grothendieck", "--lambda", "1,0", "--tmax", "2"]);
    let certs = v["certificates"].as_array().unwrap();
    assert!(certs.iter().any(|c| c["point"] == serde_json::json!([2, 2]) && c["parts"] == serde_json::json!([[1, 1], [1, 1]])));
    let out = stdout(&["snp", "--kind", "grothendieck", "--lambda", "2,1,0"]);
    assert!(out.contains("saturated: true"));
    assert_eq!(stdout(&["formula", "--family", "near-hook", "--n", "5", "--check"]).trim(), "1,16,36,16,1");
}

#[test]
fn tables_and_sweep() {
    let out = stdout(&["tables", "--which", "2", "--max-row", "4"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("m=3 h=1: 1,12,12,1"));
    assert!(lines[1].starts_with("m=3 h>=2: 1,19,19,1"));
    assert!(lines[2].starts_with("m=4 h>=1: 1,61,183,61,1"));
    let out = stdout(&["tables", "--which", "1", "--max-row", "4", "--stability-check"]);
    assert!(out.lines().all(|l| l.contains("ok (stable at h=3)")), "{out}");
    let csv = stdout(&["tables", "--which", "3", "--max-row", "3", "--format", "csv"]);
    assert_eq!(csv.trim(), "21,3,1,4,1\n3,3,1,7,1");
    let a = stdout(&["sweep", "--max-n", "6", "--max-m", "4", "--jobs", "1", "--format", "json"]);
    let b = stdout(&["sweep", "--max-n", "6", "--max-m", "4", "--jobs", "3", "--format", "json"]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schur"]["disagreements"], serde_json::json!([]));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["hstar", "--lambda", "1,2"]).status.code(), Some(1));
    assert_eq!(run(&["hstar", "--lambda", "2,1", "--m", "1"]).status.code(), Some(1));
    assert_eq!(run(&["hstar", "--lambda", "2,1,0", "--h", "2"]).status.code(), Some(1));
    assert_eq!(run(&["hstar", "--kind", "grothendieck", "--h", "0", "--lambda", "2,1,0"]).status.code(), Some(1));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["tables", "--which", "4"]).status.code(), Some(1));
    assert_eq!(run(&["formula", "--family", "nope", "--n", "3"]).status.code(), Some(1));
    assert_eq!(run(&["gorenstein", "--kind", "grothendieck", "--lambda", "2,1,0", "--method", "classifier"]).status.code(), Some(1));
    assert_eq!(run(&["reflexive", "--kind", "grothendieck", "--lambda", "3,2,1", "--method", "classifier"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_newton-ehrhart"))
        .args(["points", "--lambda", "6,3,0,0,0"])
        .env("NEWTON_EHRHART_MAX_POINTS", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NEWTON_EHRHART_MAX_POINTS"));
}
