//! Acceptance suite: one test per criterion, each printing its pass/fail
//! line. Run with `cargo test -p zetaone --test acceptance -- --nocapture`
//! to see every line; the two deep s = 2 series oracles are computed once
//! per process and shared across criteria.

use zetaone::selftest::run_criterion;

fn check(id: u32) {
    let report = run_criterion(id);
    println!("{}", report.line());
    assert!(report.passed, "{}", report.line());
}

#[test]
fn criterion_01_exact_table_pins() {
    check(1);
}

#[test]
fn criterion_02_zm1_at_2_is_three_quarters() {
    check(2);
}

#[test]
fn criterion_03_zp1_at_2_closed_vs_series() {
    check(3);
}

#[test]
fn criterion_04_zp1_4_and_6_three_way() {
    check(4);
}

#[test]
fn criterion_05_zm1_4_and_6_three_way() {
    check(5);
}

#[test]
fn criterion_06_closed_vs_series_m_1_to_6() {
    check(6);
}

#[test]
fn criterion_07_residue_theorem_grid() {
    check(7);
}

#[test]
fn criterion_08_residue_formula_cross_checks() {
    check(8);
}

#[test]
fn criterion_09_summation_identities() {
    check(9);
}

#[test]
fn criterion_10_property_suites() {
    check(10);
}
