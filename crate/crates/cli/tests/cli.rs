use std::fs;
use std::path::PathBuf;
use std::process::Command;

use novikov_cli::{emit, parse};
use novikov_core::fixtures::{exnov1, zinb_deriv, zinb_nonderiv};
use novikov_core::pipeline::ZinbielPipeline;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_str().unwrap().to_string()
}

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn novikov(args: &[&str]) -> Out {
    let o = Command::new(env!("CARGO_BIN_EXE_novikov")).args(args).output().expect("binary runs");
    Out {
        code: o.status.code().expect("exit code"),
        stdout: String::from_utf8(o.stdout).unwrap(),
        stderr: String::from_utf8(o.stderr).unwrap(),
    }
}

fn write_tmp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn exit_codes() {
    assert_eq!(novikov(&["verify", &fixture("exnov1"), "--profile", "diff-asi"]).code, 0);
    let fails = novikov(&["verify", &fixture("exnov1"), "--profile", "zinbiel"]);
    assert_eq!(fails.code, 1, "{}", fails.stdout);
    assert!(fails.stdout.contains("ZINBIEL") && fails.stdout.contains("fails"));
    assert_eq!(novikov(&["verify", "/nonexistent/file", "--profile", "novikov"]).code, 2);
    assert_eq!(novikov(&["verify", &fixture("exnov1"), "--profile", "nonsense"]).code, 2);
    assert_eq!(novikov(&["polywindow", "--N", "3", "--q", "x"]).code, 2);
    assert_eq!(novikov(&[]).code, 2);
}

#[test]
fn locus_exit_code_follows_emptiness() {
    let dir = tempfile::tempdir().unwrap();
    // Not a differential ASI bialgebra: D is not a derivation.
    let bad =
        write_tmp(&dir, "bad", "space e1 e2\nproduct dot\n  e1 e1 -> e1\ncoproduct delta\nmap D\n  e1 -> e1\nmap Q\n");
    assert_eq!(novikov(&["locus", &bad]).code, 1);
    assert_eq!(novikov(&["locus", &fixture("examp2-double")]).code, 0);
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("space e1 e2\nproduct dot\n  e1 e3 -> e1\n", "line 3", "e3"),
        ("space e1 e2\nproduct dot\n  e1 e1 -> e1\n  e1 e1 -> e2\n", "line 4", "duplicate"),
        ("space e1 e2\nproduct dot\n  e1 e1 -> 1//2*e1\n", "line 3", "malformed scalar"),
        ("space e1 q\n", "line 1", "q"),
    ];
    for (i, (text, line, word)) in cases.iter().enumerate() {
        let path = write_tmp(&dir, &format!("f{i}"), text);
        let out = novikov(&["verify", &path, "--profile", "novikov"]);
        assert_eq!(out.code, 2, "{text}");
        assert!(out.stderr.contains(line) && out.stderr.contains(word), "{}", out.stderr);
    }
}

#[test]
fn fixtures_match_the_library_constructions() {
    let load = |n: &str| parse(&fs::read_to_string(fixture(n)).unwrap()).unwrap();
    assert_eq!(load("exnov1"), exnov1());
    assert_eq!(load("zinb-deriv"), zinb_deriv());
    assert_eq!(load("zinb-nonderiv"), zinb_nonderiv());
    assert_eq!(&load("examp2-double"), ZinbielPipeline::new(&zinb_nonderiv()).unwrap().asi_bialgebra());
    assert_eq!(&load("zinb-deriv-double"), ZinbielPipeline::new(&zinb_deriv()).unwrap().asi_bialgebra());
}

#[test]
fn double_regenerates_the_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    for (src, dst) in [("zinb-nonderiv", "examp2-double"), ("zinb-deriv", "zinb-deriv-double")] {
        let out = dir.path().join(dst);
        let run = novikov(&["double", &fixture(src), "--emit", out.to_str().unwrap()]);
        assert_eq!(run.code, 0, "{}{}", run.stdout, run.stderr);
        assert_eq!(fs::read_to_string(out).unwrap(), fs::read_to_string(fixture(dst)).unwrap());
    }
}

#[test]
fn emitted_presentations_parse_back() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("induced");
    let run = novikov(&["induce", &fixture("exnov1"), "--q", "sym", "--emit", out.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}{}", run.stdout, run.stderr);
    let text = fs::read_to_string(&out).unwrap();
    let p = parse(&text).unwrap();
    assert_eq!(emit(&p), text);
    for n in ["exnov1", "zinb-deriv", "examp2-double", "zinb-deriv-double"] {
        let p = parse(&fs::read_to_string(fixture(n)).unwrap()).unwrap();
        assert_eq!(parse(&emit(&p)).unwrap(), p, "{n}");
    }
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let runs = [
        vec!["locus", "FILE"],
        vec!["verify", "FILE", "--profile", "novikov-bialgebra", "--q", "-1"],
        vec!["induce", "FILE", "--q", "sym"],
    ];
    for (k, args) in runs.iter().enumerate() {
        let file = fixture(if k == 2 { "exnov1" } else { "examp2-double" });
        let mut texts = Vec::new();
        for rep in 0..2 {
            let json = dir.path().join(format!("r{k}-{rep}.json"));
            let mut full: Vec<&str> = args.iter().map(|a| if *a == "FILE" { file.as_str() } else { a }).collect();
            full.extend(["--json-out", json.to_str().unwrap()]);
            let out = novikov(&full);
            texts.push((out.code, out.stdout, fs::read(&json).unwrap()));
        }
        assert_eq!(texts[0], texts[1], "{args:?}");
    }
}

#[test]
fn json_sidecar_records_the_result() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("out.json");
    let out = novikov(&[
        "verify",
        &fixture("examp2-double"),
        "--profile",
        "novikov-bialgebra",
        "--q",
        "-1",
        "--json-out",
        json.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 1, "{}", out.stdout);
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&json).unwrap()).unwrap();
    assert_eq!(v["exit_code"], 1);
    assert_eq!(v["result"], "fails");
    let bad = novikov(&["verify", "/nonexistent", "--profile", "novikov", "--json-out", json.to_str().unwrap()]);
    assert_eq!(bad.code, 2);
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&json).unwrap()).unwrap();
    assert_eq!(v["exit_code"], 2);
}

#[test]
fn windows_and_ybe() {
    let w = novikov(&["window", &fixture("exnov1"), "--q", "-1/2", "--min", "-3", "--max", "3"]);
    assert_eq!(w.code, 0, "{}", w.stdout);
    assert_eq!(novikov(&["window", &fixture("exnov1"), "--q", "-1/2", "--min", "2", "--max", "1"]).code, 2);
    let pw = novikov(&["polywindow", "--N", "5", "--q", "sym"]);
    assert_eq!(pw.code, 0, "{}", pw.stdout);

    let dir = tempfile::tempdir().unwrap();
    // r = e1⊗e2 - e2⊗e1 over a zero product solves both equations trivially.
    let z = write_tmp(&dir, "z", "space e1 e2\nproduct dot\nrelement r\n  e1 e2 -> 1\n  e2 e1 -> -1\n");
    assert_eq!(novikov(&["ybe", &z, "--r", "r", "--check", "aybe"]).code, 0);
    assert_eq!(novikov(&["ybe", &z, "--r", "missing", "--check", "aybe"]).code, 2);
    // With e1·e1 = e1 the same r fails AYBE.
    let f = write_tmp(&dir, "f", "space e1 e2\nproduct dot\n  e1 e1 -> e1\nrelement r\n  e1 e2 -> 1\n  e2 e1 -> -1\n");
    let out = novikov(&["ybe", &f, "--r", "r", "--check", "aybe"]);
    assert_eq!(out.code, 1, "{}", out.stdout);
}
