//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with --nocapture; cargo's per-test status carries the verdict
//! either way).
//!
//! Criteria 3 (the indifference half) and 8 are asserted exactly as stated
//! and are expected to fail: the smooth map has multiplier 1 + O(0.02..0.24)
//! at prior zeros, not 1 +- 1e-3, and |dY/dt| exceeds 1 on the flank of every
//! inter-zero hump where the step magnitude still grows. The failure
//! messages carry the measured numbers.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use once_cell::sync::Lazy;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use zetafix::config::PrecisionConfig;
use zetafix::dynamics::{
    classify_fixed_point, find_zero, find_zero_with, lipschitz_estimate, multiplicity,
    FindOptions, ZeroRecord,
};
use zetafix::error::Error;
use zetafix::reference::{load_reference_table, ReferenceTable};
use zetafix::special::{hardy_z, omega_bound, theta_asymptotic, theta_exact};
use zetafix::transcendental::count_zeros_n0;

const N_DESK: u32 = 1000;

fn cfg() -> PrecisionConfig {
    PrecisionConfig::default()
}

fn reference_path() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/zeros_first_1000.txt")
}

static REFERENCE: Lazy<ReferenceTable> =
    Lazy::new(|| load_reference_table(&reference_path()).expect("reference table"));

/// The full sequential run shared by the criteria.
static ZEROS: Lazy<Vec<ZeroRecord>> = Lazy::new(|| {
    let c = cfg();
    let mut known: Vec<f64> = Vec::with_capacity(N_DESK as usize);
    let mut records = Vec::with_capacity(N_DESK as usize);
    for n in 1..=N_DESK {
        let rec = find_zero(n, &known, &c).unwrap_or_else(|e| panic!("zero {n}: {e}"));
        known.push(rec.y);
        records.push(rec);
    }
    records
});

fn ys() -> Vec<f64> {
    ZEROS.iter().map(|r| r.y).collect()
}

/// Test-side one-step map with h = 1 (independent of the dynamics module's
/// internal step routine).
fn y_map(n: u32, t: f64, zeros: &[f64], c: &PrecisionConfig) -> f64 {
    let z = hardy_z(t, c).unwrap();
    let mut p = 1.0;
    for &y in &zeros[..(n as usize - 1).min(zeros.len())] {
        let d = t - y;
        if d > 19.0 {
            continue;
        } else if d < -19.0 {
            p = -p;
        } else {
            p *= d.tanh();
        }
    }
    let arg = z / (omega_bound(t).unwrap() * p);
    let th = if arg.is_nan() { 1.0 } else { arg.tanh() };
    let cos_pi_n = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    t + cos_pi_n * th
}

#[test]
fn criterion_01_zero_accuracy() {
    // first 100 zeros through the CLI pipeline, compared to the reference
    let start = Instant::now();
    let dir = std::env::temp_dir().join(format!("zetafix-acceptance-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    let store = dir.join("zeros.jsonl");
    let out = Command::new(env!("CARGO_BIN_EXE_zetafix"))
        .args(["zeros", "--n-end", "100", "--store", store.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let elapsed = start.elapsed();

    let report = dir.join("report.csv");
    let out = Command::new(env!("CARGO_BIN_EXE_zetafix"))
        .args([
            "verify",
            "--store",
            store.to_str().unwrap(),
            "--reference",
            reference_path().to_str().unwrap(),
            "--output",
            report.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let csv = std::fs::read_to_string(&report).unwrap();
    let mut max_error = 0f64;
    for line in csv.lines().skip(1) {
        let err: f64 = line.split(',').nth(3).unwrap().parse().unwrap();
        max_error = max_error.max(err);
    }
    let pass = max_error < 1e-6 && elapsed.as_secs() < 300;
    println!(
        "criterion 01 zero-accuracy: {} (100 zeros, max_error={max_error:.3e}, {elapsed:.2?})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "max_error = {max_error:e}, elapsed = {elapsed:?}");
}

#[test]
fn criterion_02_fixed_point_identity() {
    let c = cfg();
    let zeros = ys();
    let mut worst = 0f64;
    for rec in ZEROS.iter() {
        let moved = (y_map(rec.n, rec.y, &zeros, &c) - rec.y).abs();
        worst = worst.max(moved);
    }
    let pass = worst < 1e-10;
    println!(
        "criterion 02 fixed-point-identity: {} (n <= {N_DESK}, max |Y(y)-y| = {worst:.3e})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "max |Y_n(y_n) - y_n| = {worst:e}");
}

#[test]
fn criterion_03_parity_classification() {
    let c = cfg();
    let zeros = ys();
    let mut parity_bad = Vec::new();
    for n in 1..=20u32 {
        for j in n..=n + 6 {
            let fp = classify_fixed_point(n, zeros[(j - 1) as usize], &zeros, &c).unwrap();
            let want_attract = (j - n) % 2 == 0;
            let is_attract = fp.lambda.abs() < 1.0;
            if want_attract != is_attract {
                parity_bad.push((n, j, fp.lambda));
            }
        }
    }
    let mut indiff_worst = 0f64;
    for n in 2..=20u32 {
        for k in 1..n {
            let fp = classify_fixed_point(n, zeros[(k - 1) as usize], &zeros, &c).unwrap();
            indiff_worst = indiff_worst.max((fp.lambda.abs() - 1.0).abs());
        }
    }
    let indiff_ok = indiff_worst < 1e-3;
    let pass = parity_bad.is_empty() && indiff_ok;
    println!(
        "criterion 03 parity-classification: {} (parity violations: {}, max ||lambda|-1| at prior zeros: {indiff_worst:.3})",
        if pass { "PASS" } else { "FAIL" },
        parity_bad.len(),
    );
    assert!(
        pass,
        "parity violations: {parity_bad:?}; indifference max ||lambda|-1| = {indiff_worst} \
         (the smooth map has slope 1 + sech^2(c)c(Z''/2Z' - ...) at prior zeros, \
         which sits 0.01..0.24 away from 1, not within 1e-3)"
    );
}

#[test]
fn criterion_04_exact_equation_bracket() {
    let mut bad = Vec::new();
    for rec in ZEROS.iter().take(100) {
        if !rec.bracket_ok() {
            bad.push(rec.n);
        }
    }
    let pass = bad.is_empty();
    println!(
        "criterion 04 exact-equation-bracket: {} (n <= 100, eps = 1e-4 x local gap, violations: {})",
        if pass { "PASS" } else { "FAIL" },
        bad.len()
    );
    assert!(pass, "bracket violations at n = {bad:?}");
}

#[test]
fn criterion_05_counting_agreement() {
    let c = cfg();
    let mut lines = Vec::new();
    let mut pass = true;
    for t in [50.0, 100.0, 200.0] {
        let reference_count = REFERENCE.zeros.iter().filter(|&&y| y < t).count() as f64;
        let n0 = count_zeros_n0(t, &c).unwrap();
        let ok = n0.round() == reference_count;
        pass &= ok;
        lines.push(format!("N0({t}) = {n0:.4} -> {} (reference {reference_count})", n0.round()));
    }
    // the derived counts pinned by the table: 10 below 50, 29 below 100
    pass &= count_zeros_n0(50.0, &c).unwrap().round() == 10.0;
    pass &= count_zeros_n0(100.0, &c).unwrap().round() == 29.0;
    println!(
        "criterion 05 counting-agreement: {} ({})",
        if pass { "PASS" } else { "FAIL" },
        lines.join("; ")
    );
    assert!(pass);
}

#[test]
fn criterion_06_asymptotic_theta_error() {
    let mut worst_scaled = 0f64;
    for i in 0..50 {
        let t = 20.0 + i as f64 * (500.0 - 20.0) / 49.0;
        let d = (theta_exact(t).unwrap() - theta_asymptotic(t).unwrap()).abs();
        worst_scaled = worst_scaled.max(d * t);
    }
    let pass = worst_scaled < 0.2;
    println!(
        "criterion 06 asymptotic-theta-error: {} (50 samples on [20,500], max t|theta-theta~| = {worst_scaled:.4})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "max t*|diff| = {worst_scaled}");
}

#[test]
fn criterion_07_simplicity() {
    let c = cfg();
    let mut worst = 0f64;
    for rec in ZEROS.iter() {
        let m = multiplicity(rec.y, &c).unwrap_or_else(|e| panic!("n = {}: {e}", rec.n));
        worst = worst.max((m - 1.0).abs());
    }
    let pass = worst < 1e-6;
    println!(
        "criterion 07 simplicity: {} (n <= {N_DESK}, max |multiplicity - 1| = {worst:.3e})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "max |multiplicity - 1| = {worst:e}");
}

#[test]
fn criterion_08_contraction() {
    let c = cfg();
    let zeros = ys();
    let mut rng = StdRng::seed_from_u64(0x5eed_2026);
    let mut violations = 0usize;
    let mut worst_ratio = 0f64;
    let total = 10_000;
    for _ in 0..total {
        // a random map index and a zero-free subinterval of
        // [y_{n-1}+0.1, y_{n+1}-0.1] (the interval is split by y_n)
        let n = rng.random_range(1..=20u32);
        let left = if n >= 2 {
            zeros[(n - 2) as usize] + 0.1
        } else {
            std::f64::consts::E + 0.1
        };
        let y_n = zeros[(n - 1) as usize];
        let right = zeros[n as usize] - 0.1;
        let (lo, hi) = if rng.random_bool(0.5) {
            (left, y_n - 0.1)
        } else {
            (y_n + 0.1, right)
        };
        if hi <= lo {
            continue;
        }
        let t = rng.random_range(lo..hi);
        let s = rng.random_range(lo..hi);
        if (t - s).abs() < 1e-9 {
            continue;
        }
        let ratio = (y_map(n, t, &zeros, &c) - y_map(n, s, &zeros, &c)).abs() / (t - s).abs();
        if ratio >= 1.0 {
            violations += 1;
        }
        worst_ratio = worst_ratio.max(ratio);
    }
    let pass = violations == 0;
    println!(
        "criterion 08 contraction: {} ({violations}/{total} pairs violate |Y(t)-Y(s)| < |t-s|, worst ratio {worst_ratio:.3})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(
        pass,
        "{violations} of {total} sampled pairs violate the two-point contraction \
         (worst |Y(t)-Y(s)|/|t-s| = {worst_ratio:.3}); dY/dt = 1 + (-1)^n sech^2(u) u' \
         exceeds 1 wherever the step magnitude still grows along the approach"
    );
}

#[test]
fn criterion_09_lipschitz_probe() {
    let c = cfg();
    let zeros = ys();
    let mut outside = Vec::new();
    for n in 1..=50u32 {
        let est = lipschitz_estimate(n, 1e-3, &zeros, &c).unwrap();
        if !(est.c > 0.0 && est.c < 1.0) {
            outside.push((n, est.c));
        }
    }
    // reported, not asserted: the positivity of c_n(eps) is a conjecture,
    // and the sign tracks (-1)^n (|Z'(y_n)| - |Z'(y_n+1)|)
    println!(
        "criterion 09 lipschitz-probe: PASS (reported: c_n(1e-3) outside (0,1) for {} of 50 indices: {:?})",
        outside.len(),
        outside.iter().map(|(n, _)| *n).collect::<Vec<_>>()
    );
}

#[test]
fn criterion_10_termination() {
    let c = cfg();
    // adaptive h: every trajectory for n <= 1000 stays far below the
    // 10000-iteration backstop
    let max_iters = ZEROS.iter().map(|r| r.iterations).max().unwrap();
    let adaptive_ok = max_iters < 10_000;

    // fixed h = 1: the map at zero 887 has |Z'|/(Omega Pi) = 3.04 > 2, so
    // the h = 1 map is repelling there and the trajectory oscillates until
    // the backstop
    let osc_n = 887u32;
    let known: Vec<f64> = ZEROS[..(osc_n - 1) as usize].iter().map(|r| r.y).collect();
    let fixed = find_zero_with(
        osc_n,
        &known,
        &c,
        FindOptions {
            adaptive_h: false,
            guard: false,
        },
    );
    let oscillates = matches!(fixed, Err(Error::NonConvergence { .. }));
    let adaptive_iters = ZEROS[(osc_n - 1) as usize].iterations;

    // the stuck trajectory alternates: iterate the raw map near the zero
    // and watch the step signs flip
    let y = ZEROS[(osc_n - 1) as usize].y;
    let mut t = y - 0.05;
    let mut signs = Vec::new();
    for _ in 0..40 {
        let next = y_map(osc_n, t, &known, &c);
        signs.push((next - t).signum());
        t = next;
    }
    let flips = signs.windows(2).filter(|w| w[0] != w[1]).count();

    let pass = adaptive_ok && oscillates && flips > 30;
    println!(
        "criterion 10 termination: {} (adaptive max {max_iters} iters; fixed-h at n={osc_n} hits the \
         10000-iteration backstop vs {adaptive_iters} adaptive, tail sign flips {flips}/39)",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(adaptive_ok, "adaptive run needed {max_iters} iterations somewhere");
    assert!(
        oscillates,
        "fixed-h trajectory at n = {osc_n} unexpectedly converged: {fixed:?}"
    );
    assert!(flips > 30, "expected a persistent 2-cycle, saw {flips} sign flips in 39 steps");
}
