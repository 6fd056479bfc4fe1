//! Acceptance suite: one test per validation criterion, each printing a
//! single PASS/FAIL line (visible with `cargo test -- --nocapture`).

use esl_core::validation::{self, CheckOutcome};

fn check(outcome: CheckOutcome) {
    println!("{}", outcome.line());
    assert!(outcome.passed, "{}", outcome.line());
}

#[test]
fn criterion_01_mean_photon_bound() {
    check(validation::criterion_mean_photon_bound());
}

#[test]
fn criterion_02_fluctuation_endpoints() {
    check(validation::criterion_fluctuation_endpoints());
}

#[test]
fn criterion_03_interference_zero() {
    check(validation::criterion_interference_zero());
}

#[test]
fn criterion_04_orthogonality() {
    check(validation::criterion_orthogonality());
}

#[test]
fn criterion_05_vacuum_limit() {
    check(validation::criterion_vacuum_limit());
}

#[test]
fn criterion_06_numeric_vs_closed() {
    check(validation::criterion_numeric_vs_closed());
}

#[test]
fn criterion_07_squeezing() {
    check(validation::criterion_squeezing());
}

#[test]
fn criterion_08_wigner_cross_validation() {
    check(validation::criterion_wigner_cross_validation());
}

#[test]
fn criterion_09_husimi_ring() {
    check(validation::criterion_husimi_ring());
}

#[test]
fn criterion_10_phase_distribution() {
    check(validation::criterion_phase_distribution());
}

#[test]
fn criterion_11_eigen_equation() {
    check(validation::criterion_eigen_equation());
}

#[test]
fn criterion_12_necessary_condition() {
    check(validation::criterion_necessary_condition());
}
