use std::f64::consts::PI;

use proptest::prelude::*;

use gammalog::quad::{integrate_halfline, integrate_unit, EndpointHint, FarEnd, NearEnd};
use gammalog::sfcore::{digamma, gamma, log_gamma};
use gammalog::sumacc::{alternating_sum, l_series, log_l_series, twisted_sum, PeriodicCoefficients, TwistedSeries};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

/// Honest estimate: the true error is within three times the estimate,
/// allowing a few ulps where the estimate bottoms out.
fn honest(value: f64, estimate: f64, exact: f64) -> bool {
    (value - exact).abs() <= 3.0 * estimate.max(4.0 * f64::EPSILON * exact.abs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gamma_reflection(x in 0.01f64..0.99) {
        let lhs = gamma(x).unwrap() * gamma(1.0 - x).unwrap();
        prop_assert!(rel(lhs, PI / (PI * x).sin()) < 1e-13);
    }

    #[test]
    fn gamma_recurrence(x in 0.05f64..60.0) {
        prop_assert!(rel(gamma(x + 1.0).unwrap(), x * gamma(x).unwrap()) < 1e-13);
        let d = log_gamma(x + 1.0).unwrap() - log_gamma(x).unwrap() - x.ln();
        prop_assert!(d.abs() < 1e-12 * log_gamma(x + 1.0).unwrap().abs().max(1.0));
    }

    #[test]
    fn gauss_multiplication(x in 0.05f64..40.0, k in 2u32..6) {
        // prod_{j<k} G(x + j/k) = (2 pi)^((k-1)/2) k^(1/2 - kx) G(kx)
        let kf = k as f64;
        let lhs: f64 = (0..k).map(|j| log_gamma(x + j as f64 / kf).unwrap()).sum();
        let rhs = 0.5 * (kf - 1.0) * (2.0 * PI).ln() + (0.5 - kf * x) * kf.ln() + log_gamma(kf * x).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-12 * rhs.abs().max(1.0), "{} {}", lhs, rhs);
    }

    #[test]
    fn digamma_recurrence_and_reflection(x in 0.02f64..0.98) {
        prop_assert!((digamma(x + 1.0).unwrap() - digamma(x).unwrap() - 1.0 / x).abs() < 1e-12 / x);
        let refl = digamma(1.0 - x).unwrap() - digamma(x).unwrap();
        prop_assert!((refl - PI / (PI * x).tan()).abs() < 1e-11 / (x * (1.0 - x)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn unit_quadrature_is_honest(p in -0.9f64..4.0, target in prop::sample::select(vec![1e-6, 1e-9, 1e-12])) {
        // int_0^1 y^p dy
        let near = if p < 0.0 { NearEnd::LogSingular } else { NearEnd::Smooth };
        let r = integrate_unit(|y| y.powf(p), EndpointHint::new(near, FarEnd::Smooth), target).unwrap();
        let exact = 1.0 / (p + 1.0);
        prop_assert!(honest(r.value, r.abs_error_estimate, exact), "{:?} vs {}", r, exact);
        prop_assert!((r.value - exact).abs() <= 3.0 * target.max(4.0 * f64::EPSILON));
    }

    #[test]
    fn loglog_quadrature_is_honest(c in 0.2f64..3.0) {
        // int_0^1 y^(c-1) log log(1/y) dy = -(C + log c)/c
        let hint = EndpointHint::new(NearEnd::LogLogSingular, FarEnd::LogLogSingular);
        let r = integrate_unit(|y| y.powf(c - 1.0) * (-y.ln()).ln(), hint, 1e-11).unwrap();
        let exact = -(gammalog::sfcore::EULER_GAMMA + c.ln()) / c;
        prop_assert!(honest(r.value, r.abs_error_estimate, exact), "{:?} vs {}", r, exact);
    }

    #[test]
    fn halfline_quadrature_is_honest(p in -0.8f64..3.0, c in 0.3f64..4.0) {
        // int t^p e^(-ct) dt = G(p+1) / c^(p+1)
        let near = if p < 0.0 { NearEnd::LogSingular } else { NearEnd::Smooth };
        let r = integrate_halfline(|t| t.powf(p) * (-c * t).exp(), EndpointHint::exp_decay(near, c), 1e-11).unwrap();
        let exact = gamma(p + 1.0).unwrap() / c.powf(p + 1.0);
        prop_assert!(honest(r.value, r.abs_error_estimate, exact), "{:?} vs {}", r, exact);
    }

    #[test]
    fn oscillatory_quadrature_is_honest(u in 0.5f64..4.0, c in 0.05f64..1.0) {
        // int e^(-ct) cos(ut) dt = c/(c^2+u^2), tail accelerated
        let hint = EndpointHint::new(NearEnd::Smooth, FarEnd::Oscillatory { first_zero: PI / (2.0 * u), half_period: PI / u });
        let r = integrate_halfline(|t| (-c * t).exp() * (u * t).cos(), hint, 1e-11).unwrap();
        let exact = c / (c * c + u * u);
        prop_assert!(honest(r.value, r.abs_error_estimate, exact), "{:?} vs {}", r, exact);
    }
}

/// Mean-zero coefficients over a period of 2..=6.
fn coefficients() -> impl Strategy<Value = Vec<f64>> {
    (2usize..=6).prop_flat_map(|p| prop::collection::vec(-1.0f64..1.0, p)).prop_map(|mut c| {
        let mean = c.iter().sum::<f64>() / c.len() as f64;
        c.iter_mut().for_each(|x| *x -= mean);
        c
    })
}

/// Partial sums averaged over one period past a long head, which cancels
/// the periodic part of the remainder.
fn brute(c: &[f64], s: f64, log: bool, n: usize) -> f64 {
    let p = c.len();
    let mut sum = 0.0;
    let mut avg = 0.0;
    for k in 1..=n + p {
        let kf = k as f64;
        let w = if log { kf.ln() * kf.powf(-s) } else { kf.powf(-s) };
        sum += c[(k - 1) % p] * w;
        if k > n {
            avg += sum;
        }
    }
    avg / p as f64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lattice_matches_brute_force(c in coefficients(), s in 1.5f64..4.0, log in any::<bool>()) {
        let chi = PeriodicCoefficients::new(c.clone()).unwrap();
        let fast = if log { log_l_series(&chi, s) } else { l_series(&chi, s) }.unwrap();
        let slow = brute(&c, s, log, 200_000);
        prop_assert!((fast.value - slow).abs() < 1e-9, "{} vs {}", fast.value, slow);
    }

    #[test]
    fn twisted_matches_brute_force(theta in 0.3f64..6.0, s in 1.5f64..3.0, shift in 0.0f64..1.0) {
        let spec = TwistedSeries { theta, stride: 1.0, shift, start: 1, s, log_weight: false };
        let fast = twisted_sum(&spec).unwrap();
        // average the partial sums over the last 2000 terms
        let (mut re, mut im, mut avg_re, mut avg_im) = (0.0, 0.0, 0.0, 0.0);
        let n = 400_000u64;
        let window = 2000u64;
        for k in 1..=n {
            let w = (k as f64 + shift).powf(-s);
            re += w * (theta * k as f64).cos();
            im += w * (theta * k as f64).sin();
            if k > n - window {
                avg_re += re;
                avg_im += im;
            }
        }
        let tol = 1e-8;
        prop_assert!((fast.value.re - avg_re / window as f64).abs() < tol, "{} {}", fast.value.re, avg_re / window as f64);
        prop_assert!((fast.value.im - avg_im / window as f64).abs() < tol);
    }

    #[test]
    fn alternating_matches_brute_force(s in 0.5f64..3.0, shift in 0.0f64..2.0) {
        // sum (-1)^(i-1) / (i + shift)^s
        let term = |i: u64| if i % 2 == 1 { 1.0 } else { -1.0 } * (i as f64 + shift).powf(-s);
        let fast = alternating_sum(term, 1e-13).unwrap();
        // mean of two consecutive partial sums, plus one Euler step
        let n = 2_000_000u64;
        let mut sum = 0.0;
        for i in 1..=n {
            sum += term(i);
        }
        let slow = sum + 0.5 * term(n + 1);
        let err_bound = 2.0 * s * (n as f64 + shift).powf(-s - 1.0);
        prop_assert!((fast.value - slow).abs() < 1e-11 + err_bound, "{} vs {}", fast.value, slow);
    }
}
