mod common;

use std::path::Path;
use std::process::Command;

use common::*;
use conceptkit::cli::run;
use conceptkit::io::{write_cxt, ContextDocument};
use conceptkit::laws::{run_all_laws, LawConfig};
use conceptkit::random::{classic_context, Seeded};

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("conceptkit").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

const FILE_COMMANDS: [&str; 7] = ["concepts", "closure", "negation", "sum", "dm", "verify", "dot"];

#[test]
fn concepts_lists_twelve() {
    let (code, out, _) = call(&["concepts", path(&data("planets.cxt"))]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 12);
    assert_eq!(out.lines().next(), Some("0: {Me,V,E,Ma,J,S,U,N,P} / {}"));
    assert_eq!(out.lines().last(), Some("11: {} / {ss,sm,sl,dn,df,my,mn}"));
}

#[test]
fn verify_reports_isomorphism() {
    assert_eq!(call(&["verify", path(&data("planets.cxt"))]), (0, "ISOMORPHIC (12 concepts)\n".into(), String::new()));
}

#[test]
fn negation_prints_pairs() {
    let (code, out, _) = call(&["negation", path(&data("planets.cxt"))]);
    assert_eq!(code, 0);
    assert_eq!(out, "sm U\nsm N\nsl J\nsl S\nmn Me\nmn V\n");
}

#[test]
fn every_command_succeeds_in_both_formats() {
    for cmd in FILE_COMMANDS {
        for format in ["text", "json"] {
            let (code, out, err) = call(&["--format", format, cmd, path(&data("planets.cxt"))]);
            assert_eq!(code, 0, "{cmd} {format}: {err}");
            if format == "json" && cmd != "dot" {
                serde_json::from_str::<serde_json::Value>(&out).unwrap_or_else(|e| panic!("{cmd}: {e}"));
            }
        }
    }
}

#[test]
fn json_concepts_schema() {
    let (_, out, _) = call(&["--format", "json", "concepts", path(&data("t2.cxt"))]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["context"], "t2");
    assert_eq!(v["concepts"][0]["extent"], serde_json::json!(["a", "b"]));
    assert_eq!(v["concepts"][1]["intent"], serde_json::json!(["p", "q"]));
    assert_eq!(v["covers"], serde_json::json!([[1, 0]]));
    let keys: Vec<&str> = out.lines().filter_map(|l| l.trim().strip_prefix('"')?.split_once("\":")).map(|(k, _)| k).collect();
    assert_eq!(keys, ["context", "concepts", "extent", "intent", "extent", "intent", "covers"]);
}

#[test]
fn json_is_deterministic() {
    for cmd in FILE_COMMANDS {
        let a = call(&["--format", "json", cmd, path(&data("planets.cxt"))]);
        let b = call(&["--format", "json", cmd, path(&data("planets.cxt"))]);
        assert_eq!(a, b, "{cmd}");
    }
}

#[test]
fn oracle_gives_identical_json_on_small_contexts() {
    let dir = tempfile::tempdir().unwrap();
    let mut src = Seeded::new(21);
    let mut files = vec![data("planets.cxt"), data("t2.cxt")];
    for k in 0..40 {
        let doc = ContextDocument { name: format!("r{k}"), context: classic_context(&mut src, 6), source: None };
        let p = dir.path().join(format!("r{k}.cxt"));
        std::fs::write(&p, write_cxt(&doc)).unwrap();
        files.push(p);
    }
    for f in &files {
        for cmd in FILE_COMMANDS {
            let fast = call(&["--format", "json", cmd, path(f)]);
            let slow = call(&["--format", "json", "--oracle", cmd, path(f)]);
            assert_eq!(fast, slow, "{cmd} on {}", f.display());
        }
    }
}

#[test]
fn csv_matches_cxt() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("planets.csv");
    let mut text = String::from(",");
    text.push_str(&ATTRIBUTES.join(","));
    text.push('\n');
    let doc = planets();
    let mu = doc.context.incidence();
    for (i, e) in ENTITIES.iter().enumerate() {
        text.push_str(e);
        for j in 0..ATTRIBUTES.len() {
            text.push_str(if mu.get(i, j) { ",X" } else { "," });
        }
        text.push('\n');
    }
    std::fs::write(&csv, text).unwrap();
    for cmd in FILE_COMMANDS {
        assert_eq!(call(&[cmd, path(&csv)]), call(&[cmd, path(&data("planets.cxt"))]), "{cmd}");
    }
}

#[test]
fn parse_errors_exit_2_with_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.cxt");
    std::fs::write(&bad, "B\nt2\n2\n2\n\na\nb\np\nq\nXX\nX\n").unwrap();
    let (code, out, err) = call(&["concepts", path(&bad)]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("line 11"), "{err}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(call(&["laws", "--seed", "x"]).0, 2);
    assert_eq!(call(&["dm"]).0, 2);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn laws_exit_code_follows_the_report() {
    let (code, out, _) = call(&["laws", "--seed", "7", "--size", "4"]);
    let report = run_all_laws(&LawConfig { seed: 7, size: 4, ..LawConfig::default() });
    assert_eq!(out, format!("{report}\n"));
    assert_eq!(code, if report.all_pass() { 0 } else { 1 });
    let failed: Vec<&str> = report.failures().iter().map(|l| l.name.as_str()).collect();
    assert_eq!(failed, ["construction/product: concept count multiplies", "construction/product: extents are products of extents"]);
    assert!(out.ends_with("112 laws, 2 failed (seed 7, size 4)\n"), "{out}");
}

#[test]
fn laws_json_lists_every_law() {
    let (_, out, _) = call(&["--format", "json", "laws", "--size", "3"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["size"], 3);
    assert_eq!(v["laws"].as_array().unwrap().len(), 112);
}

#[test]
fn dot_for_t2() {
    let (code, out, _) = call(&["dot", path(&data("t2.cxt"))]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.contains("[label=")).count(), 2);
    assert_eq!(out.matches(" -> ").count(), 1);
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_conceptkit")).args(["verify", path(&data("planets.cxt"))]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ISOMORPHIC (12 concepts)\n");
    let out = Command::new(env!("CARGO_BIN_EXE_conceptkit")).args(["concepts", "/nonexistent.cxt"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
