use std::path::Path;
use std::process::Command;

use clap::Parser;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use nilschur::catalog::{self, random_basis_change};
use nilschur_cli::file::{resolve, AlgebraFile};
use nilschur_cli::report::AnalysisDocument;
use nilschur_cli::{run, Cli, CliError, EXIT_INPUT, EXIT_INTERNAL, EXIT_OK};

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["nilschur"];
    argv.extend_from_slice(args);
    let parsed = Cli::try_parse_from(argv).expect("arguments parse");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(parsed, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    format!("@{}", path.display())
}

const H1: &str = r#"{"dim": 3, "brackets": [{"i": 1, "j": 2, "value": [{"k": 3, "c": "1"}]}]}"#;
const JACOBI_BROKEN: &str = r#"{"dim": 3, "brackets": [
    {"i": 1, "j": 2, "value": [{"k": 3, "c": "1"}]},
    {"i": 1, "j": 3, "value": [{"k": 1, "c": "1"}]}
]}"#;

#[test]
fn l6_26_analysis() {
    let (code, out, _) = cli(&["analyze", "L6_26", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["structure"]["n"], 6);
    assert_eq!(v["structure"]["m"], 3);
    assert_eq!(v["structure"]["class"], 2);
    assert_eq!(v["multiplier"]["dim_M"], 8);
    assert_eq!(v["bounds"][0]["bound_name"], "theorem15");
    assert_eq!(v["bounds"][0]["verdict"], "attained");
    assert_eq!(v["classification"]["family"], "L_6_26");
}

#[test]
fn abelian_notice() {
    let (code, out, _) = cli(&["analyze", "A(1)"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("abelian algebra"));
    assert!(out.contains("dim M(L) = 0"));
}

#[test]
fn heisenberg_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "h1.json", H1);
    let (code, out, _) = cli(&["analyze", &spec, "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["multiplier"]["dim_M"], 2);
    assert_eq!(v["bounds"][0]["bound_value"], 2);
    assert_eq!(v["bounds"][0]["verdict"], "attained");
    assert_eq!(v["classification"]["family"], "H1_plus_abelian");
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(dir.path(), "broken.json", JACOBI_BROKEN);
    let (code, _, err) = cli(&["validate", &broken]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("Jacobi identity fails on basis triple (1, 2, 3)"), "{err}");

    let not_nilpotent = write(
        dir.path(),
        "nn.json",
        r#"{"dim": 2, "brackets": [{"i": 1, "j": 2, "value": [{"k": 2, "c": "1"}]}]}"#,
    );
    assert_eq!(cli(&["analyze", &not_nilpotent]).0, EXIT_INPUT);

    let unknown_key = write(dir.path(), "extra.json", r#"{"dim": 1, "brackets": [], "x": 0}"#);
    assert_eq!(cli(&["analyze", &unknown_key]).0, EXIT_INPUT);
    let float = write(
        dir.path(),
        "float.json",
        r#"{"dim": 3, "brackets": [{"i": 1, "j": 2, "value": [{"k": 3, "c": "0.5"}]}]}"#,
    );
    assert_eq!(cli(&["analyze", &float]).0, EXIT_INPUT);
    let malformed = write(dir.path(), "bad.json", "{");
    assert_eq!(cli(&["analyze", &malformed]).0, EXIT_INPUT);
    let missing = format!("@{}", dir.path().join("missing.json").display());
    assert_eq!(cli(&["analyze", &missing]).0, EXIT_INPUT);

    for spec in ["Q(1)", "A(0)", "H(1)++A(1)", "H(1"] {
        assert_eq!(cli(&["bounds", spec]).0, EXIT_INPUT, "{spec}");
    }
}

#[test]
fn internal_failures_exit_two() {
    assert_eq!(CliError::Violation("x".into()).exit_code(), EXIT_INTERNAL);
    let internal = nilschur::Error::TheoremViolation("x".into());
    assert_eq!(CliError::from(internal).exit_code(), EXIT_INTERNAL);
    let internal = nilschur::Error::InternalInconsistency("x".into());
    assert_eq!(CliError::from(internal).exit_code(), EXIT_INTERNAL);
    let input = nilschur::Error::UnknownName("x".into());
    assert_eq!(CliError::from(input).exit_code(), EXIT_INPUT);
}

#[test]
fn json_output_is_deterministic_and_round_trips() {
    for spec in ["L5_9", "L6_26", "H(1)+A(2)"] {
        let args = ["audit", spec, "--json", "--cover"];
        let (code, first, _) = cli(&args);
        assert_eq!(code, EXIT_OK);
        assert_eq!(cli(&args).1, first);
        let doc: AnalysisDocument = serde_json::from_str(&first).unwrap();
        assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", first);
    }
}

#[test]
fn ingestion_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, l) in catalog::corpus() {
        for (tag, algebra) in [("plain", l.clone()), ("moved", random_basis_change(&l, &mut rng))] {
            let file = AlgebraFile::from_algebra(&algebra);
            let text = serde_json::to_string(&file).unwrap();
            let spec = write(dir.path(), "a.json", &text);
            assert_eq!(resolve(&spec).unwrap(), algebra, "{name} {tag}");
            let (_, from_file, _) = cli(&["analyze", &spec, "--json"]);
            let (_, from_name, _) = cli(&["analyze", &name, "--json"]);
            let a: Value = serde_json::from_str(&from_file).unwrap();
            let b: Value = serde_json::from_str(&from_name).unwrap();
            assert_eq!(a["structure"], b["structure"], "{name} {tag}");
            assert_eq!(a["multiplier"]["dim_M"], b["multiplier"]["dim_M"], "{name} {tag}");
        }
    }
}

#[test]
fn cover_text_lists_relations() {
    let (code, out, _) = cli(&["multiplier", "L6_26", "--cover"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("dim M(L) = 8"));
    for line in ["s5 - s8 + s10 = 0", "s13 = 0", "s14 = 0", "s15 = 0", "absorbed into L²: {s1, s2, s6}"] {
        assert!(out.contains(line), "missing {line:?} in\n{out}");
    }
    let (_, json, _) = cli(&["multiplier", "L6_26", "--cover", "--json"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["cover"]["relation_rank"], 4);
    assert_eq!(v["cover"]["absorbed_pairs"], serde_json::json!([[1, 2], [1, 3], [2, 3]]));
}

#[test]
fn lenient_controls_gamma3() {
    let (_, strict, _) = cli(&["audit", "H(1)", "--json"]);
    let (_, lenient, _) = cli(&["audit", "H(1)", "--json", "--lenient"]);
    let strict: Value = serde_json::from_str(&strict).unwrap();
    let lenient: Value = serde_json::from_str(&lenient).unwrap();
    assert_eq!(strict["audits"]["dim_im_gamma3"], Value::Null);
    assert_eq!(lenient["audits"]["dim_im_gamma3"], 0);
    let (_, l59, _) = cli(&["audit", "L5_9", "--json"]);
    let l59: Value = serde_json::from_str(&l59).unwrap();
    assert_eq!(l59["audits"]["dim_im_gamma3"], 1);
}

#[test]
fn bounds_and_validate_commands() {
    let (code, out, _) = cli(&["bounds", "L5_8+A(1)", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    let refined = v
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["bound_name"] == "theorem212")
        .unwrap();
    assert_eq!(refined["bound_value"], 9);
    assert_eq!(refined["verdict"], "attained");
    let (_, out, _) = cli(&["bounds", "A(3)", "--json"]);
    assert_eq!(out.trim(), "[]");
    let (code, out, _) = cli(&["validate", "L5_7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("valid: n = 5, m = 3, class 4"));
}

#[test]
fn catalog_listing() {
    let (code, out, _) = cli(&["catalog", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), catalog::list_all().len());
    let l626 = v.as_array().unwrap().iter().find(|e| e["name"] == "L6_26").unwrap();
    assert_eq!(l626["dim_M"], 8);
}

#[test]
fn batch_over_exported_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let dir_arg = dir.path().to_str().unwrap();
    let (code, _, _) = cli(&["catalog", "--export", dir_arg]);
    assert_eq!(code, EXIT_OK);
    let (code, out, err) = cli(&["batch", dir_arg, "--json", "--audit"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let rows: Vec<Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.len(), catalog::list_all().len());
    let files: Vec<&str> = rows.iter().map(|r| r["file"].as_str().unwrap()).collect();
    let mut sorted = files.clone();
    sorted.sort();
    assert_eq!(files, sorted);
    for r in &rows {
        assert_eq!(r["exit_code"], 0);
        assert_eq!(r["document"]["classification"]["consistent_with_theorem220"], true);
    }
    let (_, text, _) = cli(&["batch", dir_arg]);
    assert!(text.contains(&format!("{} files, 0 failed", rows.len())));
}

#[test]
fn batch_reports_the_broken_file() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "good.json", H1);
    write(dir.path(), "broken.json", JACOBI_BROKEN);
    std::fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
    let (code, out, _) = cli(&["batch", dir.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.contains("broken.json"));
    assert!(out.contains("triple (1, 2, 3)"));
    assert!(out.contains("2 files, 1 failed"));
}

#[test]
fn batch_on_empty_directory() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = cli(&["batch", dir.path().to_str().unwrap(), "--json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "[]");
    let missing = dir.path().join("nope");
    assert_eq!(cli(&["batch", missing.to_str().unwrap()]).0, EXIT_INPUT);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_nilschur");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["analyze", "L5_8"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("family L_5_8"));
    assert_eq!(status(&["analyze", "L9_9"]).status.code(), Some(1));
    assert_eq!(status(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(status(&["--help"]).status.code(), Some(0));
}
