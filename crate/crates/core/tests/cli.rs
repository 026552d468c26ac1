use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use homlong::cli::RunReport;

fn data() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

fn homlong(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homlong")).args(args).current_dir(data()).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    homlong(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(homlong(args).stdout).unwrap()
}

fn json(args: &[&str]) -> RunReport {
    let mut a = vec!["--format", "json"];
    a.extend_from_slice(args);
    serde_json::from_str(&stdout(&a)).expect("json report")
}

fn verdict_lines(text: &str) -> usize {
    text.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).count()
}

#[test]
fn validate_examples() {
    let out = stdout(&["validate", "kz2.json"]);
    assert_eq!(verdict_lines(&out), 12);
    assert_eq!(code(&["validate", "kz2.json"]), 0);

    let out = stdout(&["validate", "broken.json"]);
    assert_eq!(code(&["validate", "broken.json"]), 1);
    assert!(out.contains("FAIL  alpha-invertible"));
    assert!(out.contains("witness"));

    assert_eq!(code(&["validate", "nosuch.json"]), 2);
}

#[test]
fn every_data_file_validates() {
    let mut names: Vec<_> = std::fs::read_dir(data())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".json"))
        .collect();
    names.sort();
    for name in names {
        let expected = match name.as_str() {
            // matrices only, nothing to validate
            "inv.json" | "id2.json" | "diag12.json" => 2,
            "broken.json" | "op_flip.json" | "ctx_nontriangular.json" => 1,
            _ => 0,
        };
        assert_eq!(code(&["validate", &name]), expected, "{name}");
    }
}

#[test]
fn check_examples() {
    assert_eq!(code(&["check", "ybe", "--ctx", "ctx_z2.json", "-U", "sign.json", "-V", "canonical.json", "-W", "sign.json"]), 0);
    assert_eq!(code(&["check", "hexagon", "--ctx", "ctx_z2.json", "-U", "sign.json", "-V", "canonical.json", "-W", "unit.json"]), 0);
    assert_eq!(
        code(&["check", "hexagon", "--ctx", "ctx_twisted.json", "-U", "tw_module.json", "-V", "tw_comodule.json", "-W", "tw_module.json"]),
        0
    );

    let rep = json(&["check", "longeq", "-R", "op_flip.json"]);
    assert_eq!(rep.exit_code, 1);
    let w = rep.checks[0].witness.as_ref().unwrap();
    assert_eq!(w.inputs.len(), 3);

    let out = homlong(&["check", "symmetry", "--ctx", "ctx_nontriangular.json", "-M", "sign.json", "-N", "canonical.json", "--diagnose"]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("diagnose/C-squared"));
    // without --diagnose only the refusal
    let rep = json(&["check", "symmetry", "--ctx", "ctx_nontriangular.json", "-M", "sign.json", "-N", "canonical.json"]);
    assert_eq!(rep.exit_code, 2);
    assert!(rep.checks.is_empty());
    assert_eq!(code(&["check", "symmetry", "--ctx", "ctx_z2.json", "-M", "sign.json", "-N", "canonical.json"]), 0);

    assert_eq!(code(&["check", "yd", "-Y", "yd_sign.json"]), 0);
    assert_eq!(code(&["check", "yd", "--ctx", "ctx_z2.json", "-M", "canonical.json"]), 0);
    assert_eq!(code(&["check", "snake", "-M", "canonical.json"]), 0);
    assert_eq!(code(&["check", "snake", "-M", "tw_module.json", "--side", "right"]), 0);
    assert_eq!(code(&["check", "roundtrip", "-M", "tw_comodule.json"]), 0);
    assert_eq!(code(&["check", "coherence", "-U", "sign.json", "-V", "canonical.json", "-W", "unit.json"]), 0);
}

#[test]
fn mismatched_bases_exit_2() {
    let rep = json(&["check", "hexagon", "--ctx", "ctx_z2.json", "-U", "sign.json", "-V", "tw_module.json", "-W", "sign.json"]);
    assert_eq!(rep.exit_code, 2);
    assert!(rep.error.is_some());
}

#[test]
fn build_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let p = |n: &str| dir.path().join(n).display().to_string();

    assert_eq!(code(&["build", "braid", "--ctx", "ctx_z2.json", "-M", "sign.json", "-N", "canonical.json", "-o", &p("c.json")]), 0);
    let c: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(p("c.json")).unwrap()).unwrap();
    assert_eq!(c["domain"].as_array().unwrap().len(), 4);
    assert_eq!(c["domain"][1], "v⊗1⊗g");

    assert_eq!(code(&["build", "dimodule-solution", "-D", "halpha_sign.json", "-o", &p("r.json")]), 0);
    assert_eq!(code(&["check", "longeq", "-R", &p("r.json")]), 0);

    assert_eq!(code(&["build", "twist", "--base", "kz4.json", "--phi", "inv.json", "-o", &p("kz4h.json")]), 0);
    let rep = json(&["validate", &p("kz4h.json")]);
    assert_eq!(rep.exit_code, 0);
    assert_eq!(rep.checks.len(), 15);

    // literal module extension breaks the module axioms for twisted kZ4
    assert_eq!(code(&["build", "extension", "--module", "module_kz4.json", "-o", &p("ext.json")]), 1);
    assert_eq!(code(&["build", "extension", "--module", "module_kz4.json", "--corrected", "-o", &p("ext.json")]), 0);
    assert_eq!(code(&["build", "dimodule-solution", "-D", &p("ext.json"), "-o", &p("r2.json")]), 0);
    assert_eq!(code(&["check", "longeq", "-R", &p("r2.json")]), 0);
    assert_eq!(code(&["build", "extension", "--comodule", "comodule_kz4.json", "-o", &p("ext2.json")]), 0);
    assert_eq!(code(&["validate", "--kind", "halpha-dimodule", &p("ext2.json")]), 0);

    assert_eq!(code(&["build", "dual", "-M", "canonical.json", "--side", "right", "-o", &p("dual.json")]), 0);
    assert_eq!(code(&["validate", &p("dual.json")]), 0);
    assert_eq!(code(&["build", "tensor", "-M", "sign.json", "-N", "canonical.json", "-o", &p("t.json")]), 0);
    assert_eq!(code(&["validate", &p("t.json")]), 0);
    assert_eq!(code(&["build", "smash", "-M", "tw_module.json", "-o", &p("s.json")]), 0);
    assert_eq!(code(&["validate", &p("s.json")]), 0);
}

#[test]
fn failed_builds_write_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.json");
    // sign is not a twisted-context object
    let rep = json(&["build", "braid", "--ctx", "ctx_twisted.json", "-M", "sign.json", "-N", "sign.json", "-o", out.to_str().unwrap()]);
    assert_eq!(rep.exit_code, 2);
    assert!(!out.exists());
    // not an automorphism
    assert_eq!(code(&["build", "twist", "--base", "kz4.json", "--phi", "diag12.json", "-o", out.to_str().unwrap()]), 2);
    assert!(!out.exists());
}

#[test]
fn search_examples() {
    let rep = json(&["search", "--mu", "id2.json", "--set", "0,1", "--shape", "diagonal"]);
    assert_eq!(rep.count, Some(16));
    assert_eq!(rep.exit_code, 0);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sols.json");
    let rep = json(&["search", "--mu", "diag12.json", "--set", "0,1", "--shape", "full", "-o", out.to_str().unwrap()]);
    assert_eq!(rep.count, Some(18));
    let sols: Vec<homlong::longeq::OperatorOnTensorSquare> = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(sols.len(), 18);
    assert!(sols.iter().all(|s| homlong::longeq::check_long_equation(s).all_passed()));

    assert_eq!(json(&["search", "--set", ""]).count, Some(0));
    let rep = json(&["search", "--n", "3", "--set", "0,1", "--shape", "full"]);
    assert_eq!(rep.exit_code, 2);
    assert!(rep.error.unwrap().contains("2417851639229258349412352"));
    assert_eq!(code(&["search", "--set", "0,1", "--shape", "sideways"]), 2);
}

#[test]
fn json_reports_roundtrip_and_output_is_deterministic() {
    for args in [
        vec!["--format", "json", "validate", "broken.json"],
        vec!["--format", "json", "check", "longeq", "-R", "op_flip.json"],
        vec!["--format", "json", "check", "symmetry", "--ctx", "ctx_nontriangular.json", "-M", "sign.json", "-N", "sign.json", "--diagnose"],
        vec!["--format", "json", "search", "--set", "0,1/2", "--shape", "diagonal"],
    ] {
        let first = stdout(&args);
        assert_eq!(first, stdout(&args), "{args:?}");
        let rep: RunReport = serde_json::from_str(&first).unwrap();
        assert_eq!(serde_json::to_string_pretty(&rep).unwrap() + "\n", first);
    }
    assert_eq!(stdout(&["validate", "sweedler_twisted.json"]), stdout(&["validate", "sweedler_twisted.json"]));
}

#[test]
fn parse_errors_carry_positions() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"kind\": \"hom-algebra\",\n  \"dim\": 1,\n  \"gamma\": [[1]],,\n}").unwrap();
    let rep = json(&["validate", bad.to_str().unwrap()]);
    assert_eq!(rep.exit_code, 2);
    assert!(rep.error.unwrap().contains("line 4"));
    std::fs::write(&bad, r#"{"kind":"hom-algebra","dim":2,"mult":[[[1]]],"unit":[1,0],"gamma":[[1,0],[0,1]]}"#).unwrap();
    assert_eq!(code(&["validate", bad.to_str().unwrap()]), 2);
}
