//! Real special functions on the positive axis: Gamma, log-Gamma, digamma
//! and the Euler-Mascheroni constant.

use std::f64::consts::PI;

use thiserror::Error;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

// B_2k / (2k (2k-1)), k = 1..8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

// B_2k / 2k, k = 1..8
const DIGAMMA_ASYM: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum SfError {
    #[error("{function} is defined here only for finite x > 0, got {x}")]
    Domain { function: &'static str, x: f64 },
}

/// Relative accuracy a caller asks of the special functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialFunctionAccuracy {
    target_relative_error: f64,
}

impl SpecialFunctionAccuracy {
    pub fn new(target_relative_error: f64) -> Option<Self> {
        (1e-15..=1e-6)
            .contains(&target_relative_error)
            .then_some(Self { target_relative_error })
    }

    pub fn target_relative_error(&self) -> f64 {
        self.target_relative_error
    }

    /// Whether the built-in evaluators are at least this accurate on their
    /// documented ranges.
    pub fn is_met_by_builtin(&self) -> bool {
        self.target_relative_error >= 1e-13
    }
}

impl Default for SpecialFunctionAccuracy {
    fn default() -> Self {
        Self { target_relative_error: 1e-13 }
    }
}

fn check(function: &'static str, x: f64) -> Result<(), SfError> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(SfError::Domain { function, x })
    }
}

fn lanczos_sum(z: f64) -> f64 {
    // z = x - 1
    let mut acc = LANCZOS[0];
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + k as f64);
    }
    acc
}

fn gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma_unchecked(1.0 - x));
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    // split the power so that large x overflows only when Gamma itself does
    let half = t.powf(0.5 * (z + 0.5));
    (2.0 * PI).sqrt() * half * (-t).exp() * half * lanczos_sum(z)
}

/// Gamma function for positive real arguments.
///
/// Returns `+inf` once the result leaves the binary64 range (x > ~171.6).
pub fn gamma(x: f64) -> Result<f64, SfError> {
    check("gamma", x)?;
    if x > 171.7 {
        return Ok(f64::INFINITY);
    }
    Ok(gamma_unchecked(x))
}

fn stirling_tail(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut acc = 0.0;
    for c in STIRLING {
        acc += c * pow;
        pow *= inv2;
    }
    acc
}

/// Natural logarithm of Gamma for positive real arguments.
pub fn log_gamma(x: f64) -> Result<f64, SfError> {
    check("log_gamma", x)?;
    if x < 15.0 {
        return Ok(gamma_unchecked(x).abs().ln());
    }
    Ok((x - 0.5) * x.ln() - x + LN_SQRT_2PI + stirling_tail(x))
}

/// Digamma, the logarithmic derivative of Gamma.
pub fn digamma(x: f64) -> Result<f64, SfError> {
    check("digamma", x)?;
    let mut x = x;
    let mut shift = 0.0;
    while x < 10.0 {
        shift -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    let mut pow = inv2;
    let mut series = 0.0;
    for c in DIGAMMA_ASYM {
        series += c * pow;
        pow *= inv2;
    }
    Ok(shift + x.ln() - 0.5 / x - series)
}

pub fn euler_gamma() -> f64 {
    EULER_GAMMA
}

/// `log_gamma` for arguments the caller has already proven positive.
pub(crate) fn lgamma(x: f64) -> f64 {
    log_gamma(x).expect("positive log_gamma argument")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn small_factorials() {
        assert_relative_eq!(gamma(1.0).unwrap(), 1.0, max_relative = 1e-14);
        assert_relative_eq!(gamma(6.0).unwrap(), 120.0, max_relative = 1e-14);
        assert_relative_eq!(gamma(0.5).unwrap(), PI.sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
        assert!(digamma(f64::NAN).is_err());
        assert!(gamma(f64::INFINITY).is_err());
    }

    #[test]
    fn overflow_is_infinite() {
        assert_eq!(gamma(200.0).unwrap(), f64::INFINITY);
        assert!(gamma(171.0).unwrap().is_finite());
        assert!(log_gamma(200.0).unwrap().is_finite());
    }

    #[test]
    fn log_gamma_continuous_at_switch() {
        let below = log_gamma(15.0 - 1e-12).unwrap();
        let above = log_gamma(15.0).unwrap();
        assert!((below - above).abs() < 1e-10);
    }

    #[test]
    fn digamma_at_one_is_minus_euler() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-15);
    }

    #[test]
    fn accuracy_bounds() {
        assert!(SpecialFunctionAccuracy::new(1e-16).is_none());
        assert!(SpecialFunctionAccuracy::new(1e-5).is_none());
        assert!(SpecialFunctionAccuracy::new(1e-9).unwrap().is_met_by_builtin());
        assert!(!SpecialFunctionAccuracy::new(1e-14).unwrap().is_met_by_builtin());
    }
}
