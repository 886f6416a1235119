//! End-to-end runs of the command line over the example files.

use std::path::PathBuf;
use std::process::Command;

use bicat_cli::format::Document;
use bicat_cli::run_args;

fn example(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name);
    p.to_str().unwrap().to_string()
}

fn run(file: &str, args: &[&str]) -> (i32, String) {
    let mut v = vec!["-f".to_string(), example(file), "--no-timing".to_string()];
    v.extend(args.iter().map(|s| s.to_string()));
    run_args(v)
}

#[test]
fn coherent_cocycle_passes() {
    let (code, out) = run("cocycles.bicat", &["validate", "Z2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("result: pass"));
}

#[test]
fn corrupted_cocycles_fail_with_pentagon_witnesses() {
    for name in ["broken", "skewed"] {
        let (code, out) = run("cocycles.bicat", &["validate", name]);
        assert_eq!(code, 1, "{out}");
        assert!(out.contains("pentagon at"), "{out}");
    }
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(run("cocycles.bicat", &["validate", "missing"]).0, 2);
    assert_eq!(run("arrow.bicat", &["costrict", "still"]).0, 2);
    assert_eq!(run("arrow.bicat", &["fibration", "W", "nothing"]).0, 2);
    assert_eq!(run("nonexistent.bicat", &["validate", "W"]).0, 2);
    assert_eq!(run_args(["frobnicate"]).0, 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.bicat");
    std::fs::write(&bad, "category C\n  object x\n  morphism f : x -> nowhere\nend\n").unwrap();
    let (code, out) = run_args(["-f", bad.to_str().unwrap(), "validate", "C"]);
    assert_eq!(code, 2);
    assert!(out.contains("bad.bicat:3"), "{out}");

    std::fs::write(&bad, "category C\n  object x\n").unwrap();
    assert_eq!(run_args(["-f", bad.to_str().unwrap(), "validate", "C"]).0, 2);
}

#[test]
fn reports_are_deterministic_and_timing_comes_last() {
    let a = run("arrow.bicat", &["costrict", "alpha"]);
    let b = run("arrow.bicat", &["costrict", "alpha"]);
    assert_eq!(a, b);
    assert!(!a.1.contains("timing:"));

    let (_, timed) = run_args(["-f", &example("arrow.bicat"), "costrict", "alpha"]);
    let at = timed.find("timing:").expect("timing section");
    assert_eq!(&timed[..at], a.1);
    assert!(timed[at..].lines().skip(1).all(|l| l.starts_with("  elapsed-ms: ")));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let (code, out) = run("arrow.bicat", &["-o", path.to_str().unwrap(), "cylinder", "W"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), out);
}

#[test]
fn corpus_directory_from_flag_and_environment() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let (code, out) = run_args(["--corpus", dir.to_str().unwrap(), "--no-timing", "fibration", "P", "p"]);
    assert_eq!(code, 0, "{out}");

    let status = Command::new(env!("CARGO_BIN_EXE_bicat"))
        .env("BICAT_CORPUS", &dir)
        .args(["--no-timing", "validate", "broken"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&status.stdout).contains("pentagon at"));
}

#[test]
fn interchange_failure_names_a_witness() {
    let (code, out) = run("arrow.bicat", &["interchange", "Cyl.crossing", "alpha"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("witness:"), "{out}");
}

#[test]
fn strict_non_icon_is_refuted_by_replayable_crossing() {
    let (code, out) = run("arrow.bicat", &["strictness", "alpha"]);
    assert_eq!(code, 0, "{out}");
    let (code, out) = run("arrow.bicat", &["costrict", "alpha"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("replayed: true"), "{out}");
}

#[test]
fn fibration_verdicts() {
    assert_eq!(run("fibration.bicat", &["fibration", "P", "p"]).0, 0);
    let (code, out) = run("fibration.bicat", &["fibration", "U", "p"]);
    assert_eq!(code, 1);
    assert!(out.contains("clause (i)"), "{out}");
}

#[test]
fn composite_output_parses_back() {
    let (code, out) = run("arrow.bicat", &["compose", "still", "still"]);
    assert_eq!(code, 0, "{out}");
    let start = out.find("output:\n").unwrap() + "output:\n".len();
    let text: String = out[start..].lines().map(|l| format!("{}\n", l.strip_prefix("  ").unwrap_or(l))).collect();
    let mut doc = Document::new();
    doc.parse_str(&text, "composite").unwrap();
    assert!(doc.icon("still.still").is_ok(), "{:?}", doc.names());
}

#[test]
fn other_verbs_pass_on_examples() {
    for args in [
        &["classify", "arrow"][..],
        &["check-oplax", "alpha"],
        &["check-icon", "still"],
        &["nerve", "W", "--level", "3"],
        &["equivalence", "arrow"],
    ] {
        let (code, out) = run("arrow.bicat", args);
        assert_eq!(code, 0, "{args:?}\n{out}");
    }
    assert_eq!(run("cocycles.bicat", &["nerve", "Z2"]).0, 0);
    assert_eq!(run("cocycles.bicat", &["validate", "Z2mon"]).0, 0);
}
