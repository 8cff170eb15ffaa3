use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

/// Runs the binary; returns exit code and parsed stdout (Null if not JSON).
fn thalg(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_thalg"))
        .arg("--no-timing")
        .args(args)
        .output()
        .expect("binary runs");
    let doc = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), doc)
}

#[test]
fn decide_root_kummer_example() {
    let (code, doc) = thalg(&["decide-root", "--field", "E", "--p", "3", "--poly", "x^5-2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"], false);
    assert_eq!(doc["certificate"]["factors"][0]["group"]["order"], 20);
}

#[test]
fn factor_example() {
    let (code, doc) = thalg(&["factor", "--poly", "x^4+4"]);
    assert_eq!(code, 0);
    let fs = doc["result"]["factors"].as_array().unwrap();
    assert_eq!(fs.len(), 2);
    assert_eq!(fs[0]["factor"], "x^2 - 2*x + 2");
    assert_eq!(fs[1]["factor"], "x^2 + 2*x + 2");
    assert_eq!(doc["certificate"]["matches_input"], true);
}

#[test]
fn totally_real_example() {
    let (code, doc) = thalg(&["totally-real", "--poly", "x^2+x-1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"], true);
    let (code, doc) = thalg(&["totally-real", "--poly", "x^2-4"]);
    assert_eq!(code, 64);
    assert_eq!(doc["error"]["kind"], "not_irreducible");
}

#[test]
fn other_queries() {
    let (_, doc) = thalg(&["irreducible", "--poly", "x^4+1"]);
    assert_eq!(doc["result"], true);
    let (_, doc) = thalg(&["real-roots", "--poly", "x^3 - 2*x"]);
    assert_eq!(doc["result"], 3);
    assert_eq!(doc["certificate"]["intervals"].as_array().unwrap().len(), 3);
    let (_, doc) = thalg(&["galois-group", "--poly", "x^4-2"]);
    assert_eq!(doc["result"], 8);
    let (_, doc) = thalg(&["decide-root", "--field", "qbar", "--poly", "x^2+5"]);
    assert_eq!(doc["result"], true);
    let (_, doc) = thalg(&["decide-root", "--field", "totr", "--poly", "x^2+1"]);
    assert_eq!(doc["result"], false);
    let (_, doc) = thalg(&["decide-root", "--field", "L", "--poly", "x^3-2"]);
    assert_eq!(doc["result"], false);
    let (_, doc) = thalg(&["decide-root", "--field", "L", "--poly", "x^2+1"]);
    assert_eq!(doc["result"], true);
    let (_, doc) = thalg(&["classify", "--p", "3", "--poly", "x^2-2"]);
    assert_eq!(doc["result"]["label"], "IRR_SPLITS_IN_E");
    assert_eq!(doc["result"]["totally_real"], true);
}

#[test]
fn axioms_stream_and_file() {
    let (code, doc) = thalg(&["axioms", "--max-deg", "1", "--max-height", "1", "--p", "5"]);
    assert_eq!(code, 0);
    assert_eq!(doc["certificate"]["records"], 6);
    assert_eq!(doc["certificate"]["all_checked"], true);
    let path = std::env::temp_dir().join(format!("thalg-axioms-{}.tsv", std::process::id()));
    let p = path.to_string_lossy().into_owned();
    let (code, doc) = thalg(&["axioms", "--max-deg", "1", "--max-height", "1", "--p", "5", "--out", &p]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"], p.as_str());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 6);
    for line in text.lines() {
        thalg::axioms::parse_record_line(line).unwrap();
    }
    std::fs::remove_file(path).ok();
}

#[test]
fn embed_solve_files() {
    let (code, doc) = thalg(&["embed-solve", "--problem", &data("s3_sign.problem")]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"], "no_solution");
    let (_, doc) = thalg(&["embed-solve", "--problem", &data("c4_c2.problem")]);
    assert_eq!(doc["result"], "solved");
    assert_eq!(doc["certificate"]["verified"], true);
}

#[test]
fn orbit_verify_files() {
    let (code, doc) = thalg(&["orbit-verify", "--module", &data("neg3.module"), "--blocks", "3", "--sets", "all"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"], true);
    assert_eq!(doc["certificate"]["distinct_orbits"], 7);
    let (_, doc) = thalg(&["orbit-verify", "--module", &data("neg3.module"), "--blocks", "3", "--sets", "-;1;1,2"]);
    assert_eq!(doc["certificate"]["hyperplanes"].as_array().unwrap().len(), 3);
    let (code, doc) = thalg(&["orbit-verify", "--module", &data("swap2.module"), "--blocks", "2", "--sets", "1"]);
    assert_eq!(code, 64);
    assert_eq!(doc["error"]["kind"], "no_invariant_complement");
}

#[test]
fn exit_codes() {
    let (code, doc) = thalg(&["factor", "--poly", "x^2 +* 1"]);
    assert_eq!(code, 3);
    assert_eq!(doc["error"]["kind"], "parse");
    let (code, _) = thalg(&["factor"]);
    assert_eq!(code, 64);
    let (code, _) = thalg(&["decide-root", "--field", "E", "--poly", "x^2-2"]);
    assert_eq!(code, 64);
    let (code, doc) = thalg(&["galois-group", "--max-splitting-degree", "10", "--poly", "x^5-2"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "degree_cap_exceeded");
    let (code, _) = thalg(&["factor", "--max-input-degree", "3", "--poly", "x^4+4"]);
    assert_eq!(code, 2);
}

#[test]
fn config_and_flag_precedence() {
    let conf = data("caps.conf");
    // default_p from the config
    let (code, doc) = thalg(&["--config", &conf, "classify", "--poly", "x^2-2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["label"], "IRR_SPLITS_IN_E");
    // config cap 10 blocks a degree-20 closure; the flag lifts it
    let (code, _) = thalg(&["--config", &conf, "galois-group", "--poly", "x^5-2"]);
    assert_eq!(code, 2);
    let (code, doc) = thalg(&["--config", &conf, "--max-splitting-degree", "100", "galois-group", "--poly", "x^5-2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"], 20);
    let (code, _) = thalg(&["--config", &data("neg3.module"), "factor", "--poly", "x"]);
    assert_eq!(code, 3);
}

#[test]
fn output_is_deterministic() {
    let args = ["decide-root", "--field", "L", "--poly", "x^4-2"];
    let a = Command::new(env!("CARGO_BIN_EXE_thalg")).arg("--no-timing").args(args).output().unwrap();
    let b = Command::new(env!("CARGO_BIN_EXE_thalg")).arg("--no-timing").args(args).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn in_process_run_matches() {
    let out = thalg_cli::run(["thalg", "--no-timing", "irreducible", "--poly", "x^2-1"]);
    assert_eq!(out.code, 0);
    let doc: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["result"], false);
    assert_eq!(thalg_cli::run(["thalg", "--help"]).code, 0);
}
