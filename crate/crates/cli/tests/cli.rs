use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::{json, Value};
use vbetti_cli::{run, RunResult};

fn vbetti(args: &[&str]) -> RunResult {
    run(std::iter::once("vbetti").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> Value {
    let r = vbetti(args);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    serde_json::from_str(&r.stdout).unwrap()
}

const HEISENBERG: &str = r#"{"type":"free_nilpotent","rank":2,"class":2}"#;
const LAMPLIGHTER: &str = r#"{"nvars":1,"ideal":[]}"#;
const ANOSOV: &str =
    r#"{"type":"action","group":{"type":"free_nilpotent","rank":2,"class":2},"generators":[[[2,1],[1,1]]]}"#;

#[test]
fn betti_heisenberg() {
    let v = ok(&["betti", "--group", HEISENBERG]);
    assert_eq!(v["betti"], json!([1, 2, 2, 1]));
    assert_eq!(v["schema"], "v1");
    assert_eq!(v["command"], "betti");
    assert_eq!(v["config"]["group"], serde_json::from_str::<Value>(HEISENBERG).unwrap());
}

#[test]
fn tame_lamplighter() {
    let v = ok(&["tame", "--module", LAMPLIGHTER, "--m", "2"]);
    assert_eq!(v["tame"], false);
    assert!(v["witness"].is_object());
}

#[test]
fn report_on_empty_complement() {
    let v = ok(&["report", "--c", "2", "--n", "2", "--sigma-complement", "[]"]);
    assert_eq!(v["requirement"], 6);
    assert_eq!(v["holds"], true);
    assert_eq!(v["verdict"], "vb_j finite for j ≤ 2");
}

#[test]
fn report_on_lamplighter_fails_at_two() {
    let v = ok(&["report", "--c", "2", "--n", "1", "--module", LAMPLIGHTER]);
    assert_eq!(v["holds"], false);
    assert_eq!(v["fails_at_m"], 2);
}

#[test]
fn sigma_of_one_plus_t_plus_s() {
    let module =
        r#"{"nvars":2,"ideal":[[{"coeff":"1","exp":[0,0]},{"coeff":"1","exp":[1,0]},{"coeff":"1","exp":[0,1]}]]}"#;
    let v = ok(&["sigma", "--module", module]);
    assert_eq!(v["sigma_complement"]["status"], "exact");
    assert_eq!(v["newton_polytope"].as_array().unwrap().len(), 3);
    assert_eq!(ok(&["tame", "--module", module, "--m", "2"])["tame"], true);
    assert_eq!(ok(&["tame", "--module", module, "--m", "3"])["tame"], false);
    let dir = ok(&["sigma", "--module", module, "--direction", "-1,-1"]);
    assert_eq!(dir["direction"]["in_sigma_complement"], true);
}

#[test]
fn vbscan_anosov_is_constant() {
    let v = ok(&["vbscan", "--group", ANOSOV, "--j", "1", "--m-max", "16"]);
    let totals: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["total"].as_u64().unwrap()).collect();
    assert_eq!(totals, vec![1; 16]);
    assert_eq!(v["verdict"]["bounded"], true);
}

#[test]
fn filtration_and_pages() {
    let v = ok(&["filtration", "--group", HEISENBERG]);
    assert_eq!(v["certificates"].as_array().unwrap().len(), 4);
    let p = ok(&["pages", "--group", HEISENBERG]);
    assert_eq!(p["d_squared_vanishes"], true);
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        vec!["betti", "--group", "{\"type\":\"free_nilpotent\",\"rank\":2"],
        vec!["betti", "--group", r#"{"type":"free_nilpotent","rank":2,"class":2,"extra":1}"#],
        vec!["betti", "--group", r#"{"type":"free_nilpotent","rank":0,"class":2}"#],
        vec!["betti", "--group", r#"{"type":"free_nilpotent","rank":2,"class":3}"#],
        vec!["betti", "--bogus"],
        vec!["tame", "--module", LAMPLIGHTER, "--m", "1"],
        vec!["tame", "--module", "[1]", "--m", "2"],
        vec!["vbscan", "--group", ANOSOV, "--j", "1", "--m-max", "0"],
        vec!["betti", "--input", "/nonexistent/group.json"],
        vec!["betti"],
    ] {
        let r = vbetti(&args);
        assert_eq!(r.code, 2, "{args:?}");
        assert!(r.stdout.is_empty());
        assert!(!r.stderr.is_empty());
    }
}

#[test]
fn strict_turns_unknown_into_three() {
    let module = r#"{"nvars":2,"ideal":[[{"coeff":"1","exp":[1,0]},{"coeff":"-2","exp":[0,0]}],[{"coeff":"1","exp":[0,1]},{"coeff":"-3","exp":[0,0]}]]}"#;
    let loose = vbetti(&["sigma", "--module", module]);
    assert_eq!(loose.code, 0);
    let v: Value = serde_json::from_str(&loose.stdout).unwrap();
    assert_eq!(v["sigma_complement"]["status"], "unresolved");
    assert_eq!(vbetti(&["--strict", "sigma", "--module", module]).code, 3);
    assert_eq!(vbetti(&["sigma", "--strict", "--module", module]).code, 3);
    assert_eq!(vbetti(&["--strict", "betti", "--group", HEISENBERG]).code, 0);
}

#[test]
fn output_is_deterministic_and_round_trips() {
    for args in [
        vec!["betti", "--group", ANOSOV],
        vec!["tame", "--module", LAMPLIGHTER, "--m", "3"],
        vec!["filtration", "--group", r#"{"type":"free_nilpotent","rank":2,"class":3}"#, "--j", "2"],
    ] {
        let a = vbetti(&args);
        let b = vbetti(&args);
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a.stdout).unwrap();
        assert_eq!(v["schema"], "v1");
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(again, a.stdout);
    }
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("vbetti-out-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let r = vbetti(&["--output", p, "betti", "--group", HEISENBERG]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["betti"], json!([1, 2, 2, 1]));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn binary_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_vbetti"))
        .args(["betti", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(HEISENBERG.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["betti"], json!([1, 2, 2, 1]));
}

#[test]
fn binary_exit_codes() {
    let status = |args: &[&str]| Command::new(env!("CARGO_BIN_EXE_vbetti")).args(args).output().unwrap().status.code();
    assert_eq!(status(&["betti", "--group", HEISENBERG]), Some(0));
    assert_eq!(status(&["betti", "--group", "nope"]), Some(2));
    assert_eq!(
        status(&[
            "--strict",
            "tame",
            "--module",
            r#"{"nvars":2,"ideal":[[{"coeff":"1","exp":[1,0]},{"coeff":"-2","exp":[0,0]}],[{"coeff":"1","exp":[0,1]},{"coeff":"-3","exp":[0,0]}]]}"#,
            "--m",
            "2"
        ]),
        Some(3)
    );
}

fn check_golden(name: &str, args: &[&str]) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"));
    let r = vbetti(args);
    assert_eq!(r.code, 0, "{}", r.stderr);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &r.stdout).unwrap();
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}; rerun with UPDATE_GOLDEN=1", path.display()));
    assert_eq!(r.stdout, expected, "golden mismatch for {name}");
}

#[test]
fn golden_outputs() {
    check_golden("betti_heisenberg", &["betti", "--group", HEISENBERG, "--integral"]);
    check_golden("tame_lamplighter", &["tame", "--module", LAMPLIGHTER, "--m", "2"]);
    check_golden("report_empty", &["report", "--c", "2", "--n", "2", "--sigma-complement", "[]"]);
    check_golden("vbscan_anosov", &["vbscan", "--group", ANOSOV, "--j", "2", "--m-max", "4"]);
    check_golden(
        "filtration_r3",
        &["filtration", "--group", r#"{"type":"free_nilpotent","rank":3,"class":2}"#, "--j", "2"],
    );
}
