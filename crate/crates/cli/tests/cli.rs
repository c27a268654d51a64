use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn semikern(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semikern"))
        .args(args)
        .output()
        .unwrap()
}

fn on(fixture_name: &str, args: &[&str]) -> Output {
    let path = fixture(fixture_name);
    let mut all = vec!["-i", path.to_str().unwrap()];
    all.extend_from_slice(args);
    semikern(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn models_text_and_json() {
    let o = on("delta.gnf", &["models"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "true={a} false={a',b} paradox={c,d,e}\n");
    let v = json(&on("delta.gnf", &["--json", "models"]));
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "models");
    assert_eq!(
        v["result"][0]["paradox"],
        serde_json::json!(["c", "d", "e"])
    );
}

#[test]
fn edge_list_input_matches_theory_input() {
    for cmd in ["models", "paradox", "min", "semikernels"] {
        assert_eq!(
            stdout(&on("delta.gnf", &[cmd])),
            stdout(&on("delta.edges", &[cmd])),
            "{cmd}"
        );
    }
}

#[test]
fn kernels_and_semikernels() {
    assert_eq!(stdout(&on("f1.gnf", &["kernels"])), "{s}\n");
    assert_eq!(stdout(&on("f2.gnf", &["kernels"])), "");
    assert_eq!(stdout(&on("f2.gnf", &["semikernels"])), "{}\n{s}\n");
    assert_eq!(
        stdout(&on("f2.gnf", &["--oracle", "semikernels"])),
        stdout(&on("f2.gnf", &["semikernels"]))
    );
}

#[test]
fn paradox_and_subdiscourse() {
    assert_eq!(stdout(&on("delta.gnf", &["paradox"])), "c d e\n");
    let v = json(&on("delta.gnf", &["--json", "subdiscourse"]));
    let r = &v["result"];
    assert_eq!(r["border"], serde_json::json!(["b"]));
    assert_eq!(r["healthy"], serde_json::json!(["a", "a'", "b"]));
    assert_eq!(
        r["theory"],
        serde_json::json!(["a a'", "a b", "~a ~a'", "~a ~b", "~b"])
    );
    assert_eq!(r["classical_models"][0]["true"], serde_json::json!(["a"]));
}

#[test]
fn closure_engine_and_oracle_agree() {
    let fast = stdout(&on("gamma2.cls", &["closure"]));
    let slow = stdout(&on("gamma2.cls", &["--oracle", "closure"]));
    assert_eq!(fast, slow);
    assert!(fast.starts_with("[]\n"));
    let units = stdout(&on("gamma2.cls", &["closure", "--units"]));
    assert_eq!(units.lines().count(), 6);
}

#[test]
fn decision_exit_codes() {
    let code = |f: &str, args: &[&str]| on(f, args).status.code();
    assert_eq!(code("delta.gnf", &["prove", "~b"]), Some(0));
    assert_eq!(code("delta.gnf", &["prove", "b"]), Some(1));
    assert_eq!(
        code("f1.gnf", &["prove", "s ~f", "--weakening", "awbw"]),
        Some(0)
    );
    assert_eq!(code("f1.gnf", &["prove", "s ~f"]), Some(1));
    assert_eq!(code("delta.gnf", &["entails", "c"]), Some(0));
    assert_eq!(code("delta.gnf", &["entails", "b c"]), Some(1));
    assert_eq!(
        code("delta.gnf", &["entails", "b c", "--semantic"]),
        Some(1)
    );
    assert_eq!(code("delta.gnf", &["entails", "b", "--classical"]), Some(0));
    assert_eq!(code("delta.gnf", &["relevant", "~b"]), Some(0));
    assert_eq!(code("delta.gnf", &["relevant", "~b a"]), Some(1));
    assert_eq!(
        code("lewis.cls", &["prove", "b", "--weakening", "cw"]),
        Some(0)
    );
    assert_eq!(
        code("lewis.cls", &["prove", "b", "--weakening", "awbw"]),
        Some(1)
    );
    assert_eq!(
        code("lewis.cls", &["prove", "b", "--weakening", "none"]),
        Some(1)
    );
}

#[test]
fn proofs_are_printed() {
    let o = on("delta.gnf", &["prove", "~b", "--proof"]);
    let text = stdout(&o);
    assert!(text.starts_with("yes\n"));
    assert!(text.trim_end().ends_with("~b [res 3 7 on e]"), "{text}");
    let v = json(&on("delta.gnf", &["--json", "prove", "~b", "--proof"]));
    assert_eq!(v["result"]["holds"], true);
    assert!(v["result"]["proof"].as_array().unwrap().len() > 1);
}

#[test]
fn semantic_verdicts_carry_a_reason() {
    let v = json(&on("delta.gnf", &["--json", "entails", "a", "--semantic"]));
    assert_eq!(v["result"]["holds"], true);
    assert_eq!(v["result"]["via"]["healthy_witness"], "a");
    let v = json(&on(
        "delta.gnf",
        &["--json", "entails", "c ~d", "--semantic"],
    ));
    assert_eq!(v["result"]["via"], "all_paradox");
    let v = json(&on("delta.gnf", &["--json", "entails", "b", "--semantic"]));
    assert!(v["result"]["via"]["countermodel"].is_object());
}

#[test]
fn reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_semikern"))
        .args(["--format", "gnf", "paradox"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"x : x\ns :\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x\n");
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.gnf");
    std::fs::write(&bad, "a : b\n").unwrap();
    let o = semikern(&["-i", bad.to_str().unwrap(), "models"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("has no formula"));
    let o = semikern(&["-i", bad.to_str().unwrap(), "--complete-loose", "models"]);
    assert_eq!(o.status.code(), Some(0));

    let dup = dir.path().join("dup.gnf");
    std::fs::write(&dup, "a :\na : a\n").unwrap();
    assert_eq!(
        semikern(&["-i", dup.to_str().unwrap(), "models"])
            .status
            .code(),
        Some(2)
    );

    assert_eq!(semikern(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(on("delta.gnf", &["prove", "zz"]).status.code(), Some(2));
    assert_eq!(on("delta.gnf", &["prove", "~"]).status.code(), Some(2));
    assert_eq!(
        on("delta.gnf", &["prove", "a", "--weakening", "xx"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(on("gamma2.cls", &["models"]).status.code(), Some(2));
    assert_eq!(
        semikern(&["-i", "/nonexistent/file.gnf", "models"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn resource_caps_exit_3() {
    assert_eq!(
        on("delta.gnf", &["--max-atoms", "3", "models"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        on("delta.gnf", &["--max-clauses", "10", "closure"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        on("delta.gnf", &["--oracle", "closure"]).status.code(),
        Some(3)
    );
}

#[test]
fn check_random_reports_no_mismatches() {
    let o = semikern(&[
        "check-random",
        "--n",
        "5",
        "--p",
        "0.3",
        "--seed",
        "11",
        "--count",
        "25",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "checked 25 graphs, 0 mismatches\n");
    let o = semikern(&[
        "--json",
        "check-random",
        "--n",
        "4",
        "--p",
        "0.5",
        "--count",
        "5",
    ]);
    assert_eq!(json(&o)["result"]["checked"], 5);
    assert_eq!(
        semikern(&["check-random", "--n", "4", "--p", "2"])
            .status
            .code(),
        Some(2)
    );
}
