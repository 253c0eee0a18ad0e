use std::process::Command;

use sectio::cli::doc::{DocValue, ResultDocument};

fn sectio(args: &[&str]) -> (i32, ResultDocument, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sectio")).args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let doc = ResultDocument::from_json(&stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{stdout}"));
    (out.status.code().unwrap(), doc, String::from_utf8(out.stderr).unwrap())
}

#[test]
fn sigma_of_klein_group() {
    let (code, doc, text) = sectio(&["sigma", "Z(2)xZ(2)"]);
    assert_eq!(code, 0);
    assert_eq!(doc.value, Some(DocValue::Int(3)));
    assert_eq!(doc.witness, vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
    assert!(text.contains("value      3"));
    doc.revalidate().unwrap();
}

#[test]
fn json_flag_suppresses_text() {
    let (_, _, text) = sectio(&["--json", "sigma", "Q8"]);
    assert!(text.is_empty());
}

#[test]
fn non_locally_sectionable_quotient() {
    let (code, doc, text) = sectio(&["sec", "quot(Q8,[4])"]);
    assert_eq!(code, 0);
    assert!(doc.value.unwrap().is_infinite());
    assert_eq!(doc.reason.as_deref(), Some("NotLocallySectionable"));
    assert!(text.contains("NotLocallySectionable (element"));
}

#[test]
fn parse_errors_exit_two_and_carry_offsets() {
    let (code, doc, _) = sectio(&["sigma", "Z("]);
    assert_eq!(code, 2);
    let e = doc.error.unwrap();
    assert_eq!(e.kind, "Syntax");
    assert_eq!(e.offset, Some(2));
    let (code, doc, _) = sectio(&["frobnicate"]);
    assert_eq!(code, 2);
    assert_eq!(doc.error.unwrap().kind, "Usage");
}

#[test]
fn limits_exit_one() {
    let (code, doc, _) = sectio(&["--max-order", "8", "sigma", "Z(2)xZ(2)xZ(2)xZ(2)"]);
    assert_eq!(code, 1);
    assert_eq!(doc.error.unwrap().kind, "OrderCapExceeded");
    let (code, doc, _) = sectio(&["--budget-nodes", "1", "sigma-cyclic", "E(3,3)"]);
    assert_eq!(code, 1);
    assert!(doc.budget.exhausted);
}

#[test]
fn every_command_emits_a_valid_document() {
    for args in [
        vec!["sigma-cyclic", "E(2,3)"],
        vec!["sec", "proj(E(2,3),[0,1])"],
        vec!["sigma-hom", "quot(D(4),[2])"],
        vec!["poset", "proj(Z(2)xZ(2)xZ(2),[1,2])"],
        vec!["cocycle", "quot(Q8,[4])", "--subgroup", "1"],
        vec!["hpoint", "Z(2)xZ(2)", "Z(2)xZ(2)", "2"],
        vec!["covers", "Q8"],
        vec!["verify", "proj(Z(2)xZ(4),[1])"],
        vec!["--max-order", "8", "verify-batch"],
        vec!["--max-order", "8", "search", "--predicate", "finite-sec-no-global-section"],
        vec!["describe", "S(3)"],
    ] {
        let (code, doc, _) = sectio(&args);
        assert_eq!(code, 0, "{args:?}: {:?}", doc.error);
        assert_eq!(doc.schema, "sectio/1");
        doc.revalidate().unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn hpoint_reports_evaluation_sec() {
    let (_, doc, _) = sectio(&["hpoint", "Z(2)xZ(2)", "Z(2)xZ(2)", "2"]);
    assert_eq!(doc.value, Some(DocValue::Bool(true)));
    assert_eq!(doc.extra["sec_ev"], "3");
}

#[test]
fn catalog_runs_are_deterministic() {
    let strip = |mut d: ResultDocument| {
        d.timing_ms = 0.0;
        d.to_json()
    };
    let (_, a, _) = sectio(&["--max-order", "8", "verify-batch"]);
    let (_, b, _) = sectio(&["--max-order", "8", "--jobs", "2", "verify-batch"]);
    assert_eq!(strip(a), strip(b));
}
