//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! and enforcing its runtime budget. `cargo test --test acceptance --
//! --nocapture` shows the lines; the same checks back the CLI `verify`
//! command.

use std::time::Duration;

use kacmod::report::CheckResult;
use kacmod::verify;
use kacmod::Caps;

fn assert_check(criterion: &str, check: CheckResult, budget: Duration) {
    let elapsed = Duration::from_millis(check.millis as u64);
    let line = format!(
        "{} criterion {criterion}: {} ({} ms)",
        if check.passed() { "PASS" } else { "FAIL" },
        check.name,
        check.millis
    );
    println!("{line}");
    assert!(
        check.passed(),
        "criterion {criterion} failed\n  claim:    {}\n  expected: {}\n  actual:   {}",
        check.anchor,
        check.expected,
        check.actual
    );
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its budget: {elapsed:?} > {budget:?}"
    );
}

#[test]
fn criterion_1_gl45_profile() {
    assert_check("1", verify::check_gl45_profile(), Duration::from_secs(1));
}

#[test]
fn criterion_2_gl45_theta_table() {
    assert_check(
        "2",
        verify::check_gl45_theta_table(),
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_3_gl22_rows() {
    assert_check(
        "3",
        verify::check_gl22_rows(&Caps::default()),
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_4_kl_row_at_zero() {
    assert_check(
        "4",
        verify::check_kl_row_at_zero(&Caps::default()),
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_5_identity_suites() {
    assert_check(
        "5",
        verify::check_identity_suites(&Caps::default(), None),
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_6_mu_zero_dual() {
    assert_check("6", verify::check_mu_zero_dual(), Duration::from_secs(60));
}

#[test]
fn criterion_7_gl22_characters() {
    assert_check(
        "7",
        verify::check_gl22_characters(&Caps::default()),
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_8_kac_decomposition() {
    assert_check(
        "8",
        verify::check_kac_consistency(&Caps::default()),
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_9_gl11_simple_characters() {
    assert_check(
        "9",
        verify::check_gl11_simple(&Caps::default()),
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_10_window_stability() {
    assert_check(
        "10",
        verify::check_window_stability(&Caps::default()),
        Duration::from_secs(30),
    );
}
