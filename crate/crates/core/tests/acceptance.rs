//! One pass/fail line per acceptance criterion. Runs without the libtest
//! harness so the lines always reach stdout; exits non-zero on any failure.
#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use gammalog::quad::{integrate_halfline, integrate_unit, EndpointHint, FarEnd, NearEnd};
use gammalog::registry::{evaluate_identity, to_json, verify_all, Binding, Catalog, ToleranceConfig};
use gammalog::sfcore::{digamma, gamma, log_gamma, EULER_GAMMA};
use gammalog::sumacc::{feq_residual, l_series, sin_log_series, characters, FeqFamily, SeriesError};
use gammalog::transcendent::{l_closed, l_integral, RationalAngle};

// Tolerances and budgets, pinned.
const VARDI_TOL: f64 = 1e-10;
const VARDI_TIME: Duration = Duration::from_millis(100);
const EQ8_TOL: f64 = 1e-10;
const SWEEP_TOL: f64 = 1e-8;
const SWEEP_TIME: Duration = Duration::from_secs(10);
const FEQ_TOL: f64 = 1e-9;
const FEQ_TIME: Duration = Duration::from_secs(20);
const SINLOG_TOL: f64 = 1e-9;
const EXAMPLE_TOL: f64 = 1e-9;
const CATALOG_TIME: Duration = Duration::from_secs(60);

// Frozen with mpmath at 30 digits (quad / nsum of the defining expressions,
// independent of this crate).
const VARDI_MPMATH: f64 = -0.2604428063009884_54;
const EQ8_MPMATH: f64 = 0.24156447527049044_69;
const SINLOG_MPMATH: [(f64, f64); 4] = [
    (PI / 4.0, -0.15948090281335167_61),
    (PI / 3.0, -0.1928318031973323_78),
    (PI / 2.0, -0.19290131679691244_36),
    (2.0 * PI / 3.0, -0.02273259134406429_48),
];
const L_MPMATH: [(u32, u32, f64, f64); 4] = [
    (1, 2, 0.5, -0.16813618897073565_97),
    (1, 3, 1.5, 0.2945082730808207_07),
    (2, 5, 0.25, -0.3765364124939701_87),
    (1, 6, 3.0, 0.30159209992976127_61),
];

struct Line {
    ok: bool,
    text: String,
}

fn line(n: u32, ok: bool, text: String) -> Line {
    println!("criterion {n}: {} | {text}", if ok { "PASS" } else { "FAIL" });
    Line { ok, text }
}

fn vardi() -> Line {
    let start = Instant::now();
    let hint = EndpointHint::new(NearEnd::LogLogSingular, FarEnd::LogLogSingular);
    let q = integrate_unit(|y| (-y.ln()).ln() / (1.0 + y * y), hint, 1e-12).expect("quadrature");
    let elapsed = start.elapsed();
    let closed = PI / 2.0 * ((2.0 * PI).sqrt() * gamma(0.75).unwrap() / gamma(0.25).unwrap()).ln();
    let res = (q.value - closed).abs();
    let oracle = (closed - VARDI_MPMATH).abs();
    let ok = res <= VARDI_TOL && oracle <= 1e-14 && elapsed <= VARDI_TIME;
    line(1, ok, format!("Vardi integral residual {res:.2e} (tol {VARDI_TOL:e}), closed form vs mpmath {oracle:.2e}, {elapsed:.2?}"))
}

fn log_four_over_pi() -> Line {
    let f = |u: f64| (u * u).ln_1p() * (-PI * u / 2.0).exp() / (1.0 + (-PI * u).exp());
    let q = integrate_halfline(f, EndpointHint::exp_decay(NearEnd::Smooth, PI / 2.0), 1e-12).expect("quadrature");
    let res = (q.value - (4.0 / PI).ln()).abs();
    let oracle = (q.value - EQ8_MPMATH).abs();
    line(2, res <= EQ8_TOL && oracle <= EQ8_TOL, format!("log(4/pi) residual {res:.2e}, vs mpmath {oracle:.2e}"))
}

fn closed_vs_integral() -> Line {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut count = 0;
    for angle in RationalAngle::all_up_to(6) {
        for x in [0.0, 0.25, 0.5, 1.0, 1.5, 3.0] {
            let q = l_integral(angle.value(), x, 1e-12).expect("integral");
            let c = l_closed(angle, x).expect("closed form");
            worst = worst.max((q.value - c).abs());
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    let mut oracle = 0.0f64;
    for (m, n, x, v) in L_MPMATH {
        oracle = oracle.max((l_closed(RationalAngle::new(m, n).unwrap(), x).unwrap() - v).abs());
    }
    let ok = worst <= SWEEP_TOL && oracle <= SWEEP_TOL && elapsed <= SWEEP_TIME;
    line(3, ok, format!("max |closed - integral| {worst:.2e} over {count} points, spot values vs mpmath {oracle:.2e}, {elapsed:.2?}"))
}

fn functional_equations() -> Line {
    let start = Instant::now();
    let (mut worst, mut checked, mut singular, mut errors) = (0.0f64, 0, 0, Vec::new());
    for family in FeqFamily::all() {
        for k in 1..=9 {
            let s = k as f64 / 10.0;
            match feq_residual(family, s) {
                Ok(r) => {
                    worst = worst.max(r);
                    checked += 1;
                }
                Err(SeriesError::SingularPrefactor(_)) => singular += 1,
                Err(e) => errors.push(format!("{family} s={s}: {e}")),
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = worst <= FEQ_TOL && errors.is_empty() && elapsed <= FEQ_TIME;
    line(4, ok, format!("12 families, {checked} points, {singular} singular skipped, worst {worst:.2e}, {elapsed:.2?} {errors:?}"))
}

fn sine_log_family() -> Line {
    let mut worst = 0.0f64;
    let mut oracle = 0.0f64;
    for (a, frozen) in SINLOG_MPMATH {
        let h = a / (2.0 * PI);
        let closed = PI / 2.0 * (log_gamma(0.5 - h).unwrap() - log_gamma(0.5 + h).unwrap()) - 0.5 * a * (EULER_GAMMA + (2.0 * PI).ln());
        let v = sin_log_series(a).expect("series").value;
        worst = worst.max((v - closed).abs());
        oracle = oracle.max((v - frozen).abs());
    }
    line(5, worst <= SINLOG_TOL && oracle <= SINLOG_TOL, format!("worst |series - closed form| {worst:.2e}, vs mpmath {oracle:.2e}"))
}

fn worked_examples() -> Line {
    let ids = [
        "eq55_ex1", "eq55_ex1_product", "eq55_ex2a", "eq55_ex2a_product", "eq55_ex2b", "eq55_ex2b_product", "eq55_ex3a",
        "eq56_ex3b", "eq64_ex1", "eq64_ex1_product", "eq64_ex2a", "eq64_ex2a_product", "eq65_ex2b", "eq65_ex2b_product",
        "eq66_ex2c", "eq66_ex2c_product", "eq66_ex3", "eq66_ex3_product", "eq101_ex", "eq101_ex_product", "eq101_ex3a",
        "eq101_ex3a_product", "eq101_ex3b", "eq101_ex3b_product",
    ];
    let tol = ToleranceConfig::default();
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for id in ids {
        match evaluate_identity(id, &Binding::new(), tol) {
            Ok(r) => {
                let res = r.abs_residual.unwrap_or(f64::INFINITY);
                worst = worst.max(res);
                if res > EXAMPLE_TOL || !r.pass {
                    bad.push(id);
                }
            }
            Err(e) => bad.push(Box::leak(format!("{id}: {e}").into_boxed_str())),
        }
    }
    // the period-4 value also through the plain series, as a cross-engine check
    let beta = gammalog::sumacc::log_l_series(&characters::beta(), 1.0).unwrap().value;
    let twisted = sin_log_series(PI / 2.0).unwrap().value;
    let cross = (beta - twisted).abs();
    let flagged = ids.iter().filter(|id| Catalog::builtin().get(id).unwrap().corrected_from_paper).count();
    let ok = bad.is_empty() && cross <= EXAMPLE_TOL;
    line(6, ok, format!("{} examples, {flagged} with in-catalog corrections, worst residual {worst:.2e}, lattice vs twisted {cross:.2e} {bad:?}", ids.len()))
}

fn full_catalog() -> Line {
    let tol = ToleranceConfig::default();
    let start = Instant::now();
    let first = verify_all(tol);
    let elapsed = start.elapsed();
    let second = verify_all(tol);
    let passed = first.iter().filter(|r| r.pass).count();
    let same = to_json(&first).unwrap() == to_json(&second).unwrap();
    let cat = Catalog::builtin();
    let flagged: Vec<_> = cat.records().iter().filter(|r| r.corrected_from_paper).collect();
    let noted = flagged.iter().all(|r| !r.correction_note.trim().is_empty());
    // a flagged record passes only if its corrected RHS matched numerically
    let confirmed = flagged.iter().all(|r| first.iter().filter(|x| x.identity_id == r.id).all(|x| x.pass));
    let ok = passed == first.len() && same && noted && confirmed && elapsed <= CATALOG_TIME;
    line(
        7,
        ok,
        format!(
            "{passed}/{} entries over {} records pass, deterministic {same}, {} corrected records noted and confirmed, {elapsed:.2?}",
            first.len(),
            cat.records().len(),
            flagged.len()
        ),
    )
}

fn property_spot_checks() -> Line {
    let mut fails = Vec::new();
    // sfcore invariants on a fixed grid
    for i in 1..50 {
        let x = i as f64 / 50.0;
        let refl = gamma(x).unwrap() * gamma(1.0 - x).unwrap() * (PI * x).sin() / PI - 1.0;
        let rec = digamma(x + 1.0).unwrap() - digamma(x).unwrap() - 1.0 / x;
        let dup = log_gamma(x).unwrap() + log_gamma(x + 0.5).unwrap() - log_gamma(2.0 * x).unwrap() - 0.5 * PI.ln() + (2.0 * x - 1.0) * 2f64.ln();
        if refl.abs() > 1e-13 || rec.abs() > 1e-11 || dup.abs() > 1e-12 {
            fails.push(format!("sfcore x={x}"));
        }
    }
    // quadrature honesty: |error| <= 3 * estimate
    for i in 0..20 {
        let p = -0.9 + 0.2 * i as f64;
        let near = if p < 0.0 { NearEnd::LogSingular } else { NearEnd::Smooth };
        let r = integrate_unit(|y| y.powf(p), EndpointHint::new(near, FarEnd::Smooth), 1e-10).unwrap();
        let err = (r.value - 1.0 / (p + 1.0)).abs();
        if err > 3.0 * r.abs_error_estimate.max(4.0 * f64::EPSILON) {
            fails.push(format!("quad p={p}"));
        }
    }
    // acceleration against brute force at s = 3
    let chi = characters::mod3();
    let fast = l_series(&chi, 3.0).unwrap().value;
    let slow: f64 = (1..=300_000u64).map(|k| chi.at(k) * (k as f64).powi(-3)).sum();
    if (fast - slow).abs() > 1e-10 {
        fails.push("sumacc".into());
    }
    // independence audit
    let shared = Catalog::builtin().records().iter().filter(|r| r.lhs_pipeline == r.rhs_pipeline).count();
    if shared > 0 {
        fails.push(format!("{shared} records share a pipeline"));
    }
    line(8, fails.is_empty(), format!("sfcore/quad/sumacc/independence spot checks (full suites in tests/properties.rs, tests/registry.rs) {fails:?}"))
}

fn main() {
    let lines = [
        vardi(),
        log_four_over_pi(),
        closed_vs_integral(),
        functional_equations(),
        sine_log_family(),
        worked_examples(),
        full_catalog(),
        property_spot_checks(),
    ];
    let failed: Vec<&str> = lines.iter().filter(|l| !l.ok).map(|l| l.text.as_str()).collect();
    println!("acceptance: {} of {} criteria pass", lines.len() - failed.len(), lines.len());
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
