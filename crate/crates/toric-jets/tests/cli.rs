//! End-to-end tests of the toricjet binary: exit-code contract, report
//! round-trips, and the machine-readable error object.

use std::io::Write;
use std::process::{Command, Output, Stdio};
use toric_jets::io::{InputDocument, ReportBody, ReportDocument};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_toricjet"))
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn gen(args: &[&str]) -> String {
    let out = bin().args(args).output().unwrap();
    assert!(out.status.success(), "gen failed: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn gen_certify_pipeline_exit_codes() {
    let doc = gen(&["gen", "example31", "--n", "3", "--r", "2", "--k", "1"]);
    // the sharp divisor is not 1-jet ample: exit 1 with slack -1/2
    let out = run_with_stdin(&["certify", "--k", "1", "--format", "json"], &doc);
    assert_eq!(out.status.code(), Some(1));
    let report: ReportDocument = serde_json::from_slice(&out.stdout).expect("json report parses");
    match &report.report {
        ReportBody::Certify {
            certified, rows, ..
        } => {
            assert!(!certified);
            assert_eq!(toric_jets::arith::format_rational(&rows[0].slack.0), "-1/2");
        }
        other => panic!("unexpected report {other:?}"),
    }
    // k = 0 is certified: exit 0
    let out = run_with_stdin(&["certify", "--k", "0"], &doc);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn oracle_exit_codes_and_witness() {
    let doc = gen(&["gen", "example31", "--n", "3", "--r", "10", "--k", "1"]);
    let out = run_with_stdin(&["oracle", "--k", "1", "--format", "json"], &doc);
    assert_eq!(out.status.code(), Some(1));
    let report: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    match &report.report {
        ReportBody::Oracle {
            jet_ample, failure, ..
        } => {
            assert!(!jet_ample);
            assert!(failure.is_some());
        }
        other => panic!("unexpected report {other:?}"),
    }
    let doc = gen(&["gen", "simplex", "--dim", "2", "--m", "2"]);
    let out = run_with_stdin(&["oracle", "--k", "1"], &doc);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn max_k_on_weighted_projective_space() {
    let doc = gen(&["gen", "wps", "--weights", "2,3,5"]);
    let out = run_with_stdin(&["max-k", "--format", "json"], &doc);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stderr.is_empty(), "stderr must stay silent on success");
    let report: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    match &report.report {
        ReportBody::MaxK { max_k, .. } => assert_eq!(*max_k, 2),
        other => panic!("unexpected report {other:?}"),
    }
}

#[test]
fn seshadri_of_unit_simplex() {
    let doc = gen(&["gen", "simplex", "--dim", "2", "--m", "1"]);
    let out = run_with_stdin(&["seshadri", "--format", "json"], &doc);
    assert_eq!(out.status.code(), Some(0));
    let report: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    match &report.report {
        ReportBody::Seshadri { per_point, global } => {
            assert_eq!(per_point.len(), 3);
            for row in per_point {
                assert_eq!(toric_jets::arith::format_rational(&row.seshadri.0), "1");
            }
            assert_eq!(toric_jets::arith::format_rational(&global.0), "1");
        }
        other => panic!("unexpected report {other:?}"),
    }
}

#[test]
fn report_echo_reproduces_the_computation() {
    let doc = gen(&["gen", "cube", "--sides", "3,2"]);
    let out = run_with_stdin(&["concavity", "--format", "json"], &doc);
    assert_eq!(out.status.code(), Some(0));
    let report: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    let first = match &report.report {
        ReportBody::Concavity { max_concavity } => max_concavity.0.clone(),
        other => panic!("unexpected report {other:?}"),
    };
    // feed the echoed input back in; the verdict must be identical
    let echoed = report.input.to_json();
    let again = run_with_stdin(&["concavity", "--format", "json"], &echoed);
    let report2: ReportDocument = serde_json::from_slice(&again.stdout).unwrap();
    match &report2.report {
        ReportBody::Concavity { max_concavity } => assert_eq!(max_concavity.0, first),
        other => panic!("unexpected report {other:?}"),
    }
}

#[test]
fn malformed_input_gives_exit_two_and_error_object() {
    let out = run_with_stdin(&["certify", "--k", "1"], "{ not json }");
    assert_eq!(out.status.code(), Some(2));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(
        value.get("error").is_some(),
        "stdout carries the error object"
    );
    assert!(!out.stderr.is_empty(), "stderr carries a diagnostic");

    // semantically invalid input (non-ample divisor for certify)
    let input = r#"{
        "fan": {"rays": [[1],[-1]], "maximal_cones": [[0],[1]]},
        "divisor": {"local_data": [[1],[0]]}
    }"#;
    let out = run_with_stdin(&["certify", "--k", "0"], input);
    assert_eq!(out.status.code(), Some(2));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["error"]["kind"], "not-ample");
}

#[test]
fn reads_input_from_file() {
    let doc = gen(&["gen", "hirzebruch", "--a", "1", "--b", "3", "--c", "1"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("input.json");
    std::fs::write(&path, &doc).unwrap();
    let out = bin()
        .args(["intersections", "--in", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("wall"), "table header expected: {text}");
}

#[test]
fn gamma_q_accepts_cone_documents() {
    let input = r#"{"cone": {"generators": [[1,0,0],[0,1,0],[1,1,2]]}}"#;
    let out = run_with_stdin(&["gamma-q", "--format", "json"], input);
    assert_eq!(out.status.code(), Some(0));
    let report: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    match &report.report {
        ReportBody::GammaQ { gamma } => {
            assert_eq!(toric_jets::arith::format_rational(&gamma.0), "1/2")
        }
        other => panic!("unexpected report {other:?}"),
    }
}

#[test]
fn gamma_x_lists_per_cone_values() {
    let doc = gen(&["gen", "example31", "--n", "3", "--r", "2", "--k", "1"]);
    let out = run_with_stdin(&["gamma-x", "--format", "json"], &doc);
    assert_eq!(out.status.code(), Some(0));
    let report: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    match &report.report {
        ReportBody::GammaX { gamma, per_cone } => {
            assert_eq!(toric_jets::arith::format_rational(&gamma.0), "1/2");
            assert_eq!(per_cone.len(), 4);
        }
        other => panic!("unexpected report {other:?}"),
    }
}

#[test]
fn fujita_command_with_canonical_default() {
    // 2x the blown-up simplex: all adjoint hypotheses hold at k = 0
    let input =
        InputDocument::parse(r#"{"polytope": {"dim": 2, "vertices": [[2,0],[6,0],[0,6],[0,2]]}}"#)
            .unwrap()
            .to_json();
    let out = run_with_stdin(
        &[
            "fujita",
            "--k",
            "0",
            "--dprime",
            "canonical",
            "--oracle",
            "--format",
            "json",
        ],
        &input,
    );
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let report: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    match &report.report {
        ReportBody::Fujita {
            all_pass,
            certified,
            oracle_confirmed,
            ..
        } => {
            assert!(all_pass);
            assert_eq!(*certified, Some(true));
            assert_eq!(*oracle_confirmed, Some(true));
        }
        other => panic!("unexpected report {other:?}"),
    }
    // on projective space the first hypothesis fails: exit 1
    let simplex = gen(&["gen", "simplex", "--dim", "2", "--m", "5"]);
    let out = run_with_stdin(&["fujita", "--k", "0", "--dprime", "canonical"], &simplex);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn input_documents_round_trip_via_gen() {
    for args in [
        vec!["gen", "example31", "--n", "3", "--r", "2", "--k", "1"],
        vec!["gen", "wps", "--weights", "1,1,2"],
        vec!["gen", "simplex", "--dim", "3", "--m", "2"],
        vec!["gen", "cube", "--sides", "2,3"],
        vec!["gen", "hirzebruch", "--a", "2", "--b", "5", "--c", "2"],
    ] {
        let text = gen(&args);
        let doc = InputDocument::parse(&text).unwrap();
        let round = InputDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(doc, round);
        assert!(doc.build_divisor().unwrap().is_ample());
    }
}
