//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measured quantities and asserting the stated tolerance and runtime
//! budget. Criterion 8 checks the printed decay statements as stated; see the
//! decay reports themselves for the measured values.

use ball_prolate::report::{tally, BoundReport};
use ball_prolate::suite;
use std::time::Instant;

fn assert_group(criterion: &str, reports: &[BoundReport], budget_s: f64, elapsed: f64) {
    let (pass, fail, skip) = tally(reports);
    let failures: Vec<&BoundReport> = reports.iter().filter(|r| r.gating_failure()).collect();
    assert!(
        fail == 0,
        "ACCEPTANCE {criterion}: FAIL ({fail} of {} gated reports)\nfirst failures: {:#?}",
        pass + fail,
        &failures[..failures.len().min(4)]
    );
    assert!(
        elapsed <= budget_s,
        "ACCEPTANCE {criterion}: runtime {elapsed:.1} s exceeded the {budget_s} s budget"
    );
    println!("ACCEPTANCE {criterion}: PASS ({pass} checks, {skip} hypothesis-gated, {elapsed:.2} s)");
}

#[test]
fn criterion_01_zero_bandwidth_degeneration() {
    let t0 = Instant::now();
    let reports = suite::chi_limit_suite().unwrap();
    assert_eq!(
        reports.len(),
        2 * 3 * 4 * 11,
        "grid d in 1..=3, m in 0..=3, k in 0..=10, two checks each"
    );
    assert_group("1 (zero-bandwidth degeneration)", &reports, 10.0, t0.elapsed().as_secs_f64());
}

#[test]
fn criterion_02_chi_sandwich() {
    let t0 = Instant::now();
    let reports = suite::chi_sandwich_suite(&[1.0, 5.0, 10.0]).unwrap();
    assert_group("2 (chi sandwich)", &reports, 30.0, t0.elapsed().as_secs_f64());
}

#[test]
fn criterion_03_galerkin_matrix_oracle() {
    let t0 = Instant::now();
    let reports = suite::galerkin_oracle_suite().unwrap();
    assert_group("3 (Galerkin matrix oracle)", &reports, 5.0, t0.elapsed().as_secs_f64());
}

#[test]
fn criterion_04_hankel_commutation() {
    let t0 = Instant::now();
    let reports = suite::commutation_suite(&[1.0, 5.0], 8).unwrap();
    assert_group("4 (Hankel commutation)", &reports, 60.0, t0.elapsed().as_secs_f64());
}

#[test]
fn criterion_05_trace_identity() {
    let t0 = Instant::now();
    let reports = suite::trace_suite(&[(1, 1.0), (1, 5.0), (2, 1.0), (2, 5.0), (3, 2.0)], 1e-6).unwrap();
    assert_eq!(reports.len(), 5);
    assert_group("5 (Mercer trace identity)", &reports, 300.0, t0.elapsed().as_secs_f64());
}

#[test]
fn criterion_06_hs_identity_and_landau_brackets() {
    let t0 = Instant::now();
    let reports =
        suite::hs_counting_suite(&[(1, 1.0), (1, 2.0), (2, 1.0), (2, 2.0)], &[0.1, 0.5, 0.9]).unwrap();
    // gate only the exact statements; the leading-order count and the
    // asymptote ratio are desk-scale trend lines at c <= 2
    let gated: Vec<BoundReport> = reports
        .into_iter()
        .filter(|r| r.name == "hs-identity" || r.name.contains("bracket"))
        .collect();
    assert!(gated.iter().filter(|r| r.name == "hs-identity").count() == 4);
    assert_group("6 (HS identity + Landau brackets)", &gated, 300.0, t0.elapsed().as_secs_f64());
}

#[test]
fn criterion_07_counting_leading_order() {
    let t0 = Instant::now();
    let reports = suite::counting_suite(2, 10.0, 0.5).unwrap();
    let leading = reports.iter().find(|r| r.name == "counting-leading").unwrap();
    assert!(
        (leading.lhs - 25.0).abs() <= 4.0,
        "M(0.5) = {} outside [21, 29]",
        leading.lhs
    );
    assert_group("7 (counting leading order)", &reports, 600.0, t0.elapsed().as_secs_f64());
}

#[test]
fn criterion_08_decay_bounds() {
    // The lower bound with the stated explicit constant, and the upper-decay
    // slope window [-1.1, -0.9], evaluated on the concentration eigenvalues
    // exactly as stated. Both are asserted as written; the measured values are
    // printed either way. The `decay-lower-hankel` diagnostic rows record the
    // same bound against the finite-Hankel eigenvalues.
    let t0 = Instant::now();
    let reports = suite::decay_suite(1, 0, 1.0, 8).unwrap();
    let elapsed = t0.elapsed().as_secs_f64();
    assert!(elapsed <= 30.0, "runtime {elapsed:.1} s over budget");
    for r in reports.iter().filter(|r| r.name == "decay-lower-hankel") {
        assert!(r.pass, "diagnostic form failed unexpectedly: {r:?}");
    }
    let slope = reports.iter().find(|r| r.name == "decay-upper-slope").unwrap();
    println!("measured slope deviation |slope+1| = {:.4} (window allows 0.1)", slope.lhs);
    let gated: Vec<BoundReport> = reports
        .into_iter()
        .filter(|r| r.name == "decay-lower" || r.name == "decay-upper-slope")
        .collect();
    assert_group("8 (decay bounds)", &gated, 30.0, elapsed);
}

#[test]
fn criterion_09_supnorm_machinery() {
    let t0 = Instant::now();
    let reports = suite::supnorm_suite(&[1.0, 5.0], 10).unwrap();
    // the intro-variant theorem is evaluated and recorded without gating
    let (a_pass, a_fail, a_skip) = tally(
        &reports
            .iter()
            .filter(|r| r.name == "supnorm-theorem-a")
            .cloned()
            .collect::<Vec<_>>(),
    );
    println!("intro-variant theorem recorded: {a_pass} pass, {a_fail} fail, {a_skip} gated");
    let gated: Vec<BoundReport> = reports
        .into_iter()
        .filter(|r| r.name != "supnorm-theorem-a")
        .collect();
    assert_group("9 (sup-norm machinery)", &gated, 60.0, t0.elapsed().as_secs_f64());
}

#[test]
fn criterion_10_coefficient_decay() {
    let t0 = Instant::now();
    let reports = suite::coeff_decay_suite(2, 5.0, &[0, 1], 2).unwrap();
    let gated = reports.iter().filter(|r| r.condition_met).count();
    assert!(gated >= 60, "expected a substantial gated j-range, got {gated}");
    assert_group("10 (coefficient decay)", &reports, 30.0, t0.elapsed().as_secs_f64());
}

#[test]
fn criterion_11_identity_suite() {
    let t0 = Instant::now();
    let reports = suite::identity_suite(0).unwrap();
    assert!(reports.len() > 300);
    assert_group("11 (identity suite)", &reports, 120.0, t0.elapsed().as_secs_f64());
}

#[test]
fn criterion_12_approximation_theorems() {
    let t0 = Instant::now();
    let mut reports = suite::theorem_b_suite(2, &[0, 1], 1.0, 5.0, 12).unwrap();
    reports.extend(suite::theorem_c_suite(2, &[0, 1], 1.0, 5.0, 12).unwrap());
    // every projection row under its hypothesis, plus the per-coefficient
    // bound rows for the band-limited inputs
    let ib = reports.iter().filter(|r| r.name == "ineq-ball" && r.condition_met).count();
    assert!(ib >= 10, "band-limited coefficient rows missing");
    let tc_gated = reports
        .iter()
        .filter(|r| r.name == "theorem-c" && r.condition_met)
        .count();
    println!("theorem-c rows with both hypotheses satisfiable: {tc_gated} (the stated gates are incompatible at this bandwidth)");
    assert_group("12 (approximation theorems)", &reports, 300.0, t0.elapsed().as_secs_f64());
}
