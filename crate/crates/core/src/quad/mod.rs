//! Double-exponential quadrature on (0,1) and (0,inf), with endpoint hints
//! and an oscillatory-tail mode.
//!
//! Integrands are never evaluated at an endpoint: nodes whose abscissa rounds
//! onto an endpoint are dropped and their omitted mass is bounded in the
//! error estimate.

mod de;
mod gauss;
mod oscillatory;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use gauss::gauss_legendre;

/// Default absolute error target.
pub const DEFAULT_TARGET: f64 = 1e-12;
/// Hard cap on integrand evaluations per call.
pub const WORK_BUDGET: u64 = 1 << 20;

/// A computed value with an a-posteriori absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: u64,
    pub converged: bool,
}

impl EvalResult {
    /// An exactly known value, e.g. a closed form evaluated with elementary
    /// functions. The estimate carries a few ulps of rounding.
    pub fn exact(value: f64) -> Self {
        Self {
            value,
            abs_error_estimate: 4.0 * f64::EPSILON * value.abs(),
            evaluations: 0,
            converged: true,
        }
    }

    /// Scales the value and its estimate.
    pub fn scale(self, k: f64) -> Self {
        Self {
            value: self.value * k,
            abs_error_estimate: self.abs_error_estimate * k.abs(),
            ..self
        }
    }

    /// Sum of two independent results.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Self) -> Self {
        Self {
            value: self.value + other.value,
            abs_error_estimate: self.abs_error_estimate + other.abs_error_estimate,
            evaluations: self.evaluations + other.evaluations,
            converged: self.converged && other.converged,
        }
    }

    /// Adds a constant.
    pub fn shift(self, c: f64) -> Self {
        Self {
            value: self.value + c,
            abs_error_estimate: self.abs_error_estimate + 2.0 * f64::EPSILON * c.abs(),
            ..self
        }
    }
}

/// Behavior of the integrand near 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NearEnd {
    Smooth,
    LogSingular,
    LogLogSingular,
}

/// Behavior of the integrand near 1 (unit interval) or at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FarEnd {
    Smooth,
    LogSingular,
    LogLogSingular,
    /// |f(u)| eventually bounded by C e^{-rate u}.
    ExpDecay { rate: f64 },
    /// Conditionally convergent tail whose sign changes at
    /// `first_zero + k * half_period`. Any non-oscillating part of the
    /// integrand must be negligible beyond u = 40.
    Oscillatory { first_zero: f64, half_period: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndpointHint {
    pub at_zero: NearEnd,
    pub at_one_or_infinity: FarEnd,
}

impl EndpointHint {
    pub const SMOOTH: Self = Self { at_zero: NearEnd::Smooth, at_one_or_infinity: FarEnd::Smooth };

    pub fn new(at_zero: NearEnd, at_one_or_infinity: FarEnd) -> Self {
        Self { at_zero, at_one_or_infinity }
    }

    pub fn exp_decay(at_zero: NearEnd, rate: f64) -> Self {
        Self { at_zero, at_one_or_infinity: FarEnd::ExpDecay { rate } }
    }

    fn validate(&self) -> Result<(), QuadError> {
        match self.at_one_or_infinity {
            FarEnd::ExpDecay { rate } if !(rate > 0.0 && rate.is_finite()) => {
                Err(QuadError::InvalidArgument(format!("decay rate must be positive, got {rate}")))
            }
            FarEnd::Oscillatory { first_zero, half_period }
                if !(first_zero > 0.0 && half_period > 0.0 && first_zero.is_finite() && half_period.is_finite()) =>
            {
                Err(QuadError::InvalidArgument("oscillation zeros must be positive and finite".into()))
            }
            _ => Ok(()),
        }
    }

    fn is_loglog(&self) -> bool {
        self.at_zero == NearEnd::LogLogSingular || self.at_one_or_infinity == FarEnd::LogLogSingular
    }
}

impl Default for EndpointHint {
    fn default() -> Self {
        Self::SMOOTH
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("integrand returned {value} at interior point {at}")]
    NonFiniteIntegrand { at: f64, value: f64 },
}

fn check_target(target: f64) -> Result<(), QuadError> {
    if target > 0.0 && target.is_finite() {
        Ok(())
    } else {
        Err(QuadError::InvalidArgument(format!("target_abs_error must be positive, got {target}")))
    }
}

/// Integrates `f` over the open interval (0,1).
pub fn integrate_unit<F>(f: F, hint: EndpointHint, target_abs_error: f64) -> Result<EvalResult, QuadError>
where
    F: Fn(f64) -> f64,
{
    check_target(target_abs_error)?;
    hint.validate()?;
    match hint.at_one_or_infinity {
        FarEnd::ExpDecay { .. } | FarEnd::Oscillatory { .. } => {
            return Err(QuadError::InvalidArgument("decay hints apply to half-line integrals only".into()))
        }
        _ => {}
    }
    if hint.is_loglog() {
        // y = e^{-t}: both endpoints become mild
        let g = |t: f64| {
            let y = (-t).exp();
            if y <= 0.0 || y >= 1.0 {
                return 0.0;
            }
            f(y) * y
        };
        return Ok(de::integrate(de::Map::ExpSinh, g, target_abs_error, WORK_BUDGET)?.result);
    }
    Ok(de::integrate(de::Map::TanhSinh, f, target_abs_error, WORK_BUDGET)?.result)
}

/// Integrates `f` over the open half-line (0,inf).
pub fn integrate_halfline<F>(f: F, hint: EndpointHint, target_abs_error: f64) -> Result<EvalResult, QuadError>
where
    F: Fn(f64) -> f64,
{
    check_target(target_abs_error)?;
    hint.validate()?;
    match hint.at_one_or_infinity {
        FarEnd::Oscillatory { first_zero, half_period } => {
            oscillatory::integrate(&f, hint.at_zero, first_zero, half_period, target_abs_error)
        }
        FarEnd::ExpDecay { rate } => {
            let out = de::integrate(de::Map::ExpSinh, &f, target_abs_error, WORK_BUDGET)?;
            let mut r = out.result;
            // |f| <= |f(u*)| e^{-rate (u - u*)} beyond the last node u*
            if out.far_f.is_finite() {
                r.abs_error_estimate += out.far_f / rate;
                r.converged = r.converged && r.abs_error_estimate <= target_abs_error;
            }
            Ok(r)
        }
        _ => Ok(de::integrate(de::Map::ExpSinh, &f, target_abs_error, WORK_BUDGET)?.result),
    }
}

/// Integrates `f` over the open interval (a,b) by mapping onto (0,1).
pub fn integrate_interval<F>(f: F, a: f64, b: f64, hint: EndpointHint, target_abs_error: f64) -> Result<EvalResult, QuadError>
where
    F: Fn(f64) -> f64,
{
    if !(a.is_finite() && b.is_finite() && b > a) {
        return Err(QuadError::InvalidArgument(format!("need finite a < b, got ({a}, {b})")));
    }
    let len = b - a;
    let r = integrate_unit(|y| f(a + len * y), hint, target_abs_error / len)?;
    let mut r = r.scale(len);
    r.converged = r.converged && r.abs_error_estimate <= target_abs_error;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_on_unit() {
        let r = integrate_unit(|_| 1.0, EndpointHint::SMOOTH, 1e-13).unwrap();
        assert!((r.value - 1.0).abs() < 1e-14, "{r:?}");
        assert!(r.converged);
    }

    #[test]
    fn exponential_on_halfline() {
        let r = integrate_halfline(|u| (-u).exp(), EndpointHint::exp_decay(NearEnd::Smooth, 1.0), 1e-13).unwrap();
        assert!((r.value - 1.0).abs() < 1e-14, "{r:?}");
    }

    #[test]
    fn rejects_bad_target_and_hints() {
        assert!(integrate_unit(|_| 1.0, EndpointHint::SMOOTH, 0.0).is_err());
        assert!(integrate_unit(|_| 1.0, EndpointHint::exp_decay(NearEnd::Smooth, 1.0), 1e-10).is_err());
        assert!(integrate_halfline(|u| (-u).exp(), EndpointHint::exp_decay(NearEnd::Smooth, -1.0), 1e-10).is_err());
    }

    #[test]
    fn nan_integrand_is_an_error() {
        let e = integrate_unit(|y| if y > 0.5 { f64::NAN } else { 1.0 }, EndpointHint::SMOOTH, 1e-10);
        assert!(matches!(e, Err(QuadError::NonFiniteIntegrand { .. })));
    }

    #[test]
    fn endpoints_never_sampled() {
        let r = integrate_unit(
            |y| {
                assert!(y > 0.0 && y < 1.0);
                (1.0 / y).ln().ln()
            },
            EndpointHint::new(NearEnd::LogLogSingular, FarEnd::LogLogSingular),
            1e-12,
        )
        .unwrap();
        // int_0^1 log log(1/y) dy = -C
        assert!((r.value + crate::sfcore::EULER_GAMMA).abs() < 1e-12, "{r:?}");
    }

    #[test]
    fn budget_exhaustion_is_not_an_error() {
        let r = integrate_unit(|y| (1.0 / y).sin() / y.sqrt(), EndpointHint::SMOOTH, 1e-15).unwrap();
        assert!(!r.converged);
        assert!(r.evaluations <= WORK_BUDGET + 4096);
    }
}
