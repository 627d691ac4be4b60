//! End-to-end checks of the `zetaone` binary: report schemas, byte-level
//! determinism, exit codes, and file output.

use std::process::{Command, Output};

use zetaone::cli::{Envelope, EvalReport, SelftestReport, TableReport};
use zetaone::{ContourReport, IdentityReport};

fn zetaone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetaone"))
        .args(args)
        .env_remove("ZETAONE_TERM_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn eval_json_matches_library() {
    let out = zetaone(&[
        "eval", "--fn", "zp1", "--s", "4", "--method", "closed", "--format", "json",
    ]);
    assert!(out.status.success());
    let envelope: Envelope<EvalReport> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(envelope.schema_version, "1");
    assert_eq!(envelope.kind, "eval");
    assert_eq!(envelope.report.function, "zp1");
    assert_eq!(envelope.report.s, 4);
    let expect = zetaone::closed::zeta_plus_one_even(2).unwrap();
    assert_eq!(envelope.report.result, expect);
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let args = [
        "eval", "--fn", "zm1", "--s", "6", "--method", "series", "--tol", "1e-8", "--format",
        "json",
    ];
    let first = zetaone(&args);
    let second = zetaone(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn eval_text_carries_value_method_and_residual() {
    let out = zetaone(&["eval", "--fn", "zp1", "--s", "4", "--method", "closed"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("zp1(4)"));
    assert!(text.contains("method=closed_form"));
    assert!(text.contains("value=5.78477579667e-1"));
    assert!(text.contains("residual_imag="));
}

#[test]
fn verify_json_passes() {
    let out = zetaone(&[
        "verify", "--fn", "g", "--m", "2", "--N", "5", "--format", "json",
    ]);
    assert!(out.status.success());
    let envelope: Envelope<ContourReport> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(envelope.kind, "contour");
    assert!(envelope.report.passed);
    assert_eq!(envelope.report.n, 5);
    let recomputed = zetaone::residue::verify(zetaone::Kernel::G, 2, 5).unwrap();
    assert_eq!(envelope.report, recomputed);
}

#[test]
fn identity_json_reports_tail_bound() {
    let out = zetaone(&[
        "identity",
        "--id",
        "euler_goldbach",
        "--limit",
        "100000",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let envelope: Envelope<IdentityReport> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(envelope.kind, "identity");
    assert!(envelope.report.residual <= envelope.report.tail_bound);
    assert_eq!(envelope.report.target, 1.0);
}

#[test]
fn table_json_matches_library() {
    let out = zetaone(&["table", "--s-max", "6", "--tol", "1e-7", "--format", "json"]);
    assert!(out.status.success());
    let envelope: Envelope<TableReport> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(envelope.kind, "table");
    assert_eq!(envelope.report.tol, 1e-7);
    for row in &envelope.report.rows {
        let closed = zetaone::closed::zeta_plus_one_even(row.s / 2)
            .unwrap()
            .value;
        assert_eq!(row.zp1_closed, closed);
        let series = zetaone::series::zeta_minus_one_series(row.s, 1e-7)
            .unwrap()
            .value;
        assert_eq!(row.zm1_series, series);
    }
}

#[test]
fn selftest_json_schema() {
    let out = zetaone(&["selftest", "--criterion", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let envelope: Envelope<SelftestReport> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(envelope.kind, "selftest");
    assert!(envelope.report.passed);
    assert_eq!(envelope.report.criteria.len(), 1);
    assert_eq!(envelope.report.criteria[0].id, 1);
}

#[test]
fn unknown_subcommand_exits_1() {
    let out = zetaone(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_0() {
    let out = zetaone(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn domain_error_exits_1() {
    // odd s has no closed form
    let out = zetaone(&["eval", "--fn", "zp1", "--s", "3", "--method", "closed"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));
}

#[test]
fn capacity_error_exits_2() {
    // s = 2 at tol 1e-10 needs ~1e10 terms, over the default cap
    let out = zetaone(&[
        "eval", "--fn", "zm1", "--s", "2", "--method", "series", "--tol", "1e-10",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = zetaone(&["bernoulli", "--n", "70"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn term_cap_env_override() {
    // needs ~1.02e8 terms: above the 1e8 default, fine with a raised cap
    let args = [
        "eval", "--fn", "zp1", "--s", "2", "--method", "series", "--tol", "1e-8",
    ];
    let blocked = zetaone(&args);
    assert_eq!(blocked.status.code(), Some(2));

    let out = Command::new(env!("CARGO_BIN_EXE_zetaone"))
        .args(args)
        .env("ZETAONE_TERM_CAP", "200000000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn csv_is_for_tables_and_bernoulli_only() {
    let out = zetaone(&[
        "eval", "--fn", "zp1", "--s", "4", "--method", "closed", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let out = zetaone(&["table", "--s-max", "8", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "s,zp1_closed,zp1_series,zm1_closed,zm1_series"
    );
    assert_eq!(lines.count(), 4); // s = 2, 4, 6, 8

    let out = zetaone(&["bernoulli", "--upto", "12", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("n,value\n"));
    assert!(text.contains("12,-691/2730"));
}

#[test]
fn bernoulli_text_output() {
    let out = zetaone(&["bernoulli", "--n", "12"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "B_12 = -691/2730\n");

    let out = zetaone(&["bernoulli"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("zetaone-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = zetaone(&[
        "eval",
        "--fn",
        "zeta",
        "--s",
        "2",
        "--method",
        "closed",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let envelope: Envelope<EvalReport> = serde_json::from_str(&text).unwrap();
    assert!((envelope.report.result.value - 1.644_934_066_848_226_4).abs() < 1e-12);
    std::fs::remove_file(&path).ok();
}

#[test]
fn selftest_single_criterion() {
    let out = zetaone(&["selftest", "--criterion", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("criterion  1 [PASS]"));
    assert!(text.contains("all criteria passed"));
}

#[test]
fn selftest_unknown_criterion_exits_2() {
    let out = zetaone(&["selftest", "--criterion", "11"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("FAILED"));
}
