//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Tolerances and trial counts are pinned inside
//! `zetalab_core::verify`; the runtime ceilings are asserted here.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::time::Instant;

use zetalab_core::verify;

const SEED: u64 = 0;

fn report(criterion: &str, r: &verify::SuiteResult, elapsed_limit: Option<f64>, started: Instant) {
    let dt = started.elapsed().as_secs_f64();
    let status = if r.pass { "PASS" } else { "FAIL" };
    println!("{criterion} [{}]: {status} ({:.2}s) — {}", r.name, dt, r.detail);
    assert!(r.pass, "{criterion} failed: {}", r.detail);
    if let Some(limit) = elapsed_limit {
        assert!(dt < limit, "{criterion} took {dt:.2}s, limit {limit}s");
    }
}

#[test]
fn criterion_01_lerch_determinant() {
    // det(a_n = n+κ) vs √(2π)/Γ(κ), κ ∈ {0.5,1,1.5,2,3}, within 1e-8,
    // under 5 seconds total.
    let t = Instant::now();
    let r = verify::criterion_lerch_determinant();
    report("criterion 1", &r, Some(5.0), t);
}

#[test]
fn criterion_02_finite_reduction() {
    // 50 random finite lists: determinant == plain product within 1e-12
    // relative; zeros detected at λ = -a_j with correct multiplicity.
    let t = Instant::now();
    let r = verify::criterion_finite_reduction(SEED);
    report("criterion 2", &r, None, t);
}

#[test]
fn criterion_03_graph_rationality() {
    // C₃, C₅, K₄, K₃₃, Petersen: truncated Euler product (L = 16) equals
    // det(I - T·B) with exact integer equality, under 30 seconds.
    let t = Instant::now();
    let r = verify::criterion_graph_rationality();
    report("criterion 3", &r, Some(30.0), t);
}

#[test]
fn criterion_04_oracle_agreement() {
    // zeta_polynomial == bass_polynomial exactly on 20 random graphs.
    let t = Instant::now();
    let r = verify::criterion_oracle_agreement(SEED);
    report("criterion 4", &r, None, t);
}

#[test]
fn criterion_05_cycle_count_log_derivative() {
    // Σ_{d|m} d·P_d = tr(B^m) for m ≤ 12 and log-derivative to degree 12.
    let t = Instant::now();
    let r = verify::criterion_cycle_counts(SEED);
    report("criterion 5", &r, None, t);
}

#[test]
fn criterion_06_divisor() {
    // multiplicities sum to 2|E|; |Z(r)| ≤ 1e-8·(1+|r|)^{2|E|}.
    let t = Instant::now();
    let r = verify::criterion_divisor(SEED);
    report("criterion 6", &r, None, t);
}

#[test]
fn criterion_07_ruelle_decomposition() {
    // residual ≤ 1e-9 on 5 synthetic spectra × 10 points, under 10 s.
    let t = Instant::now();
    let r = verify::criterion_ruelle_decomposition(SEED);
    report("criterion 7", &r, Some(10.0), t);
}

#[test]
fn criterion_08_exterior_identity() {
    // residual ≤ 1e-12 on 200 random eigenvalue lists in the unit disk.
    let t = Instant::now();
    let r = verify::criterion_exterior_identity(SEED);
    report("criterion 8", &r, None, t);
}

#[test]
fn criterion_09_tail_bound_soundness() {
    // doubling the caps never moves log_selberg by more than the
    // previously reported tail bound, over 100 trials.
    let t = Instant::now();
    let r = verify::criterion_tail_bound_soundness(SEED);
    report("criterion 9", &r, None, t);
}

#[test]
fn criterion_10_trace_formula() {
    // residual ≤ 1e-10 for every subgroup of every corpus group of order
    // ≤ 24, three twist kinds, 50 random test functions each, under 60 s.
    let t = Instant::now();
    let r = verify::criterion_trace_formula(SEED);
    report("criterion 10", &r, Some(60.0), t);
}
