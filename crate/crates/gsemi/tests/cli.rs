use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fx(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gsemi").chain(args.iter().copied());
    let code = gsemi::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = format!("{}/schemas/{name}.schema.json", env!("CARGO_MANIFEST_DIR"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&v).unwrap()
}

fn assert_valid(schema_name: &str, doc: &Value) {
    let v = schema(schema_name);
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema_name}: {errors:?}");
}

fn scratch_dir(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("gsemi-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    d
}

#[test]
fn analyze_loop_algebra() {
    let (code, out, _) = run(&["analyze", &fx("kx2.alg")]);
    assert_eq!(code, 0);
    for line in [
        "m = 1",
        "class 1: xΛ, l = 1",
        "G-semisimple: yes (quadratic monomial)",
        "1-Gorenstein: yes",
        "descriptor: {1}",
    ] {
        assert!(out.lines().any(|l| l == line), "missing `{line}` in\n{out}");
    }
}

#[test]
fn analyze_reports_offending_arrow() {
    let (code, out, _) = run(&["analyze", &fx("path_ba.alg")]);
    assert_eq!(code, 0);
    assert!(out.contains("1-Gorenstein: no (offending: b)"));
    assert!(out.contains("dim Ext^i(bΛ, Λ) for i = 1..2: 1 0"));
}

#[test]
fn sn_count_and_dynkin() {
    assert_eq!(run(&["sn", &fx("kx2.alg"), "--n", "2", "count"]).1, "5\n");
    assert_eq!(run(&["sn", &fx("kx2.alg"), "--n", "3", "count"]).1, "9\n");
    let (code, out, _) = run(&["dynkin", &fx("kx2.alg"), "--quiver", &fx("a3.quiver")]);
    assert_eq!(code, 0);
    assert!(out.ends_with("CM-finite: yes; count = 6\n"));
    let (_, out, _) = run(&[
        "dynkin",
        &fx("kx2.alg"),
        "--quiver",
        &fx("kronecker.quiver"),
    ]);
    assert!(out.ends_with("CM-finite: no; count = infinite\n"));
    assert_eq!(
        run(&["dynkin", &fx("kx2.alg"), "--quiver", "A4"]).1,
        "type: A4\npositive roots: 10\nCM-finite: yes; count = 10\n"
    );
    assert_eq!(run(&["dynkin", &fx("kx2.alg"), "--quiver", "A0"]).0, 1);
    let (_, out, _) = run(&["dynkin", &fx("a2.alg"), "--quiver", &fx("kronecker.quiver")]);
    assert!(out.ends_with("CM-finite: yes; count = 0\n"));
}

#[test]
fn ars_examples() {
    let (code, out, _) = run(&["ars", &fx("kx2.alg"), "--n", "3", "--at", "[3,3,x]"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("0 -> [1,3,x] -> [1,2,x] -> [3,3,x] -> 0\n"));
    let (_, out, _) = run(&["ars", &fx("nakayama3.alg"), "--n", "2", "--at", "[2,2,a2]"]);
    assert!(out.starts_with("0 -> [1,2,a1] -> [1,1,a1] -> [2,2,a2] -> 0\n"));
    let (code, _, err) = run(&["ars", &fx("kx2.alg"), "--n", "2", "--at", "[0,0,P:1]"]);
    assert_eq!(code, 1);
    assert!(err.contains("no almost split sequence"));
}

#[test]
fn json_outputs_match_schemas() {
    let json = |args: &[&str]| -> Value {
        let (code, out, err) = run(args);
        assert_eq!(code, 0, "{err}");
        serde_json::from_str(&out).unwrap()
    };
    for alg in ["kx2", "nakayama3", "two_cycles", "a2", "path_ba"] {
        let a = fx(&format!("{alg}.alg"));
        assert_valid(
            "component",
            &json(&["component", &a, "--n", "2", "--format", "json"]),
        );
        assert_valid(
            "component",
            &json(&["component", &a, "--n", "3", "--format", "json"]),
        );
        assert_valid(
            "sequences",
            &json(&["ars", &a, "--n", "3", "--format", "json"]),
        );
        assert_valid(
            "relation-quiver",
            &json(&["analyze", &a, "--format", "json"])["relation_quiver"],
        );
        assert_valid(
            "dynkin-report",
            &json(&[
                "dynkin",
                &a,
                "--quiver",
                &fx("d4.quiver"),
                "--format",
                "json",
            ]),
        );
        assert_valid(
            "dynkin-report",
            &json(&[
                "dynkin",
                &a,
                "--quiver",
                &fx("kronecker.quiver"),
                "--format",
                "json",
            ]),
        );
    }
    for rep in ["stable_a2.json", "stable_nakayama.json"] {
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(fx(rep)).unwrap()).unwrap();
        assert_valid("stable-rep", &doc);
    }
    for rep in ["gp_a2.json", "not_mono_a2.json"] {
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(fx(rep)).unwrap()).unwrap();
        assert_valid("gp-rep", &doc);
    }
    let lifted = json(&[
        "lift",
        &fx("nakayama3.alg"),
        "--rep",
        &fx("stable_nakayama.json"),
        "--format",
        "json",
    ]);
    assert_valid("gp-rep", &lifted);
}

#[test]
fn lift_output_verifies() {
    let dir = scratch_dir("lift");
    std::fs::create_dir_all(&dir).unwrap();
    let (code, out, _) = run(&[
        "lift",
        &fx("nakayama3.alg"),
        "--rep",
        &fx("stable_nakayama.json"),
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let path = dir.join("lifted.json");
    std::fs::write(&path, out).unwrap();
    let (code, out, _) = run(&[
        "verify",
        &fx("nakayama3.alg"),
        "--rep",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("gorenstein projective: yes\n"));
    let (code, out, _) = run(&[
        "lift",
        &fx("kx2.alg"),
        "--rep",
        &fx("stable_a2.json"),
        "--check",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("a1: 1 -> 2: [emb(1); id(1)]"));
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn verify_rejects_non_monomorphism() {
    let (code, out, _) = run(&["verify", &fx("kx2.alg"), "--rep", &fx("not_mono_a2.json")]);
    assert_eq!(code, 1);
    assert!(out.contains("first failure at vertex 2"));
}

#[test]
fn component_text_and_dot_file() {
    let dir = scratch_dir("dot");
    std::fs::create_dir_all(&dir).unwrap();
    let dot = dir.join("c.dot");
    let (code, out, _) = run(&[
        "component",
        &fx("kx2.alg"),
        "--n",
        "3",
        "--class",
        "x",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("class 1: 6 vertices (knitted, not exact)\n"));
    assert!(out.contains("divisor 2: pass"));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph component {\n"));
    assert_eq!(text.matches("[label=").count(), 6);
    let (code, _, err) = run(&["component", &fx("kx2.alg"), "--n", "2", "--class", "7"]);
    assert_eq!(code, 1);
    assert!(err.contains("class 7 does not exist"));
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn dump_matrices_writes_csv() {
    let dir = scratch_dir("dump");
    let (code, _, _) = run(&[
        "analyze",
        &fx("kx2.alg"),
        "--dump-matrices",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let e = std::fs::read_to_string(dir.join("P_1__x.csv")).unwrap();
    assert_eq!(e, "0,0\n1,0\n");
    assert!(dir.join("I_x__x.csv").exists());
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn user_errors_exit_one() {
    assert_eq!(run(&["analyze", &fx("kx2.alg"), "--prime", "100"]).0, 1);
    assert_eq!(run(&["analyze", &fx("missing.alg")]).0, 1);
    assert_eq!(run(&["sing", &fx("kx2.alg"), "--format", "dot"]).0, 1);
    assert_eq!(run(&["sn", &fx("kx2.alg"), "--n", "0"]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(
        run(&["dynkin", &fx("kx2.alg"), "--quiver", &fx("kx2.alg")]).0,
        1
    );
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["ars", &fx("two_cycles.alg"), "--n", "4", "--format", "json"];
    assert_eq!(run(&args), run(&args));
    let args = ["analyze", &fx("two_cycles.alg"), "--prime", "2"];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn binary_honours_seed_variable() {
    let exe = env!("CARGO_BIN_EXE_gsemi");
    let out = Command::new(exe)
        .args([
            "lift",
            &fx("kx2.alg"),
            "--rep",
            &fx("stable_a2.json"),
            "--check",
        ])
        .env("GSEMI_SEED", "17")
        .output()
        .unwrap();
    assert!(out.status.success());
    let bad = Command::new(exe)
        .args(["sn", &fx("kx2.alg")])
        .env("GSEMI_SEED", "x")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
