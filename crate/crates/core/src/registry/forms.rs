//! Gamma/elementary closed forms shared by several records, and the
//! coefficient patterns of the log-weighted series they evaluate.

use std::f64::consts::PI;

use crate::sfcore::{lgamma, EULER_GAMMA};
use crate::sumacc::{PeriodicCoefficients, SeriesError};
use crate::transcendent::{Parity, RationalAngle};

/// sum over i of w_i [lgG(top(i)) - lgG(bottom(i))] for the sine family:
/// the full range 1..n-1 with denominators 2n (m+n odd) or the half range
/// with denominators n (m+n even).
fn sine_gamma_sum(angle: RationalAngle, parity: Parity, weight: impl Fn(u32) -> f64) -> f64 {
    let n = angle.n() as f64;
    match parity {
        Parity::Odd => (1..angle.n())
            .map(|i| {
                let t = i as f64;
                weight(i) * (lgamma((n + t) / (2.0 * n)) - lgamma(t / (2.0 * n)))
            })
            .sum(),
        Parity::Even => (1..=angle.half_range())
            .map(|i| {
                let t = i as f64;
                weight(i) * (lgamma(1.0 - t / n) - lgamma(t / n))
            })
            .sum(),
    }
}

/// Same with half-integer nodes i - 1/2, for the cosine family.
fn cosine_gamma_sum(angle: RationalAngle, parity: Parity, weight: impl Fn(u32) -> f64) -> f64 {
    let n = angle.n() as f64;
    match parity {
        Parity::Odd => (1..=angle.n())
            .map(|i| {
                let h = i as f64 - 0.5;
                weight(i) * (lgamma(0.5 + h / (2.0 * n)) - lgamma(h / (2.0 * n)))
            })
            .sum(),
        Parity::Even => (1..=angle.half_range())
            .map(|i| {
                let h = i as f64 - 0.5;
                weight(i) * (lgamma(1.0 - h / n) - lgamma(h / n))
            })
            .sum(),
    }
}

fn log_base(parity: Parity) -> f64 {
    match parity {
        Parity::Odd => (2.0 * PI).ln(),
        Parity::Even => PI.ln(),
    }
}

fn parity_of(k: u32) -> Parity {
    if k % 2 == 1 {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// int_1^inf (y^{m-1} - y^{-m-1})/(y^n - y^{-n}) log log y dy.
pub fn sinh_loglog_integral(angle: RationalAngle) -> f64 {
    let p = angle.parity();
    let n = angle.n() as f64;
    let lead = PI / (2.0 * n) * (0.5 * angle.value()).tan() * log_base(p);
    lead + PI / n * sine_gamma_sum(angle, p, |i| angle.s(i))
}

/// int_1^inf (y^{m-1} + y^{-m-1})/(y^n + y^{-n}) log log y dy.
pub fn cosh_loglog_integral(angle: RationalAngle) -> f64 {
    let p = angle.parity();
    let n = angle.n() as f64;
    let lead = PI / (2.0 * n) / (0.5 * angle.value()).cos() * log_base(p);
    lead + PI / n * cosine_gamma_sum(angle, p, |i| angle.c(i))
}

/// sum chi(k) log k / k with chi = +1 at n-m, -1 at n+m (period 2n).
pub fn alternating_log_series(angle: RationalAngle) -> f64 {
    let p = angle.parity();
    let n = angle.n() as f64;
    let lead = -PI / (2.0 * n) * (0.5 * angle.value()).tan() * (EULER_GAMMA + log_base(p));
    lead - PI / n * sine_gamma_sum(angle, p, |i| angle.s(i))
}

/// sum chi(k) log k / k with chi = +1 at m, -1 at 2n-m (period 2n).
/// The branch follows the parity of m.
pub fn sine_log_series(angle: RationalAngle) -> f64 {
    let p = parity_of(angle.m());
    let n = angle.n() as f64;
    let a = angle.value();
    let lead = -PI / (2.0 * n) / (0.5 * a).tan() * (EULER_GAMMA + log_base(p));
    lead - PI / n * sine_gamma_sum(angle, p, |i| (i as f64 * a).sin())
}

/// sum chi(k) log k / k with chi = +1 at n-m, n+m and -1 at 3n-m, 3n+m
/// (period 4n).
pub fn cosine_twisted_log_series(angle: RationalAngle) -> f64 {
    let p = angle.parity();
    let n = angle.n() as f64;
    let lead = -PI / (2.0 * n) / (0.5 * angle.value()).cos() * (EULER_GAMMA + log_base(p));
    lead - PI / n * cosine_gamma_sum(angle, p, |i| angle.c(i))
}

/// sum chi(k) log k / k with chi = +1 at m, 2n-m and -1 at 2n+m, 4n-m
/// (period 4n). The branch follows the parity of m.
pub fn sine_twisted_log_series(angle: RationalAngle) -> f64 {
    let p = parity_of(angle.m());
    let n = angle.n() as f64;
    let a = angle.value();
    let lead = -PI / (2.0 * n) / (0.5 * a).sin() * (EULER_GAMMA + log_base(p));
    lead - PI / n * cosine_gamma_sum(angle, p, |i| ((i as f64 - 0.5) * a).sin())
}

/// Coefficient patterns matching the four series above.
pub mod patterns {
    use super::*;

    fn build(period: u32, pairs: &[(u32, f64)]) -> Result<PeriodicCoefficients, SeriesError> {
        let pairs: Vec<(usize, f64)> = pairs.iter().map(|&(r, c)| (r as usize, c)).collect();
        PeriodicCoefficients::from_residues(period as usize, &pairs)
    }

    pub fn alternating(a: RationalAngle) -> Result<PeriodicCoefficients, SeriesError> {
        let (m, n) = (a.m(), a.n());
        build(2 * n, &[(n - m, 1.0), (n + m, -1.0)])
    }

    pub fn sine(a: RationalAngle) -> Result<PeriodicCoefficients, SeriesError> {
        let (m, n) = (a.m(), a.n());
        build(2 * n, &[(m, 1.0), (2 * n - m, -1.0)])
    }

    pub fn cosine_twisted(a: RationalAngle) -> Result<PeriodicCoefficients, SeriesError> {
        let (m, n) = (a.m(), a.n());
        build(4 * n, &[(n - m, 1.0), (n + m, 1.0), (3 * n - m, -1.0), (3 * n + m, -1.0)])
    }

    pub fn sine_twisted(a: RationalAngle) -> Result<PeriodicCoefficients, SeriesError> {
        let (m, n) = (a.m(), a.n());
        build(4 * n, &[(m, 1.0), (2 * n - m, 1.0), (2 * n + m, -1.0), (4 * n - m, -1.0)])
    }
}
