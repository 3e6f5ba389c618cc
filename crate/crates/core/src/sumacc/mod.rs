//! Accelerated sums: alternating series, periodic-coefficient Dirichlet
//! series with optional log weight, unit-modulus twisted series, and the
//! functional-equation residuals built on them.

mod alternating;
mod feq;
mod lattice;
mod twisted;

use thiserror::Error;

use crate::quad::{integrate_halfline, EndpointHint, EvalResult, NearEnd, QuadError};
use crate::sfcore::{self, SfError};

pub use alternating::alternating_sum;
pub use feq::{feq_residual, feq_sides, FeqFamily};
pub use lattice::{shifted_lattice_sum, LatticeTerm, LATTICE_TARGET};
pub use twisted::{sin_log_series, twisted_sum, TwistedSeries, TwistedValue};

/// Same shape as a quadrature result.
pub type SeriesValue = EvalResult;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("term {index} is {value}")]
    NonFiniteTerm { index: u64, value: f64 },
    #[error("terms do not alternate with strictly decreasing magnitude")]
    NotAlternating,
    #[error("singular prefactor: {0}")]
    SingularPrefactor(String),
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Special(#[from] SfError),
}

/// Coefficients chi(k) of a periodic Dirichlet series, 1-indexed by residue.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicCoefficients {
    coeffs: Vec<f64>,
}

impl PeriodicCoefficients {
    /// `coeffs[r-1]` multiplies 1/k^s for k = r mod period.
    pub fn new(coeffs: Vec<f64>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() || coeffs.iter().all(|c| *c == 0.0) {
            return Err(SeriesError::InvalidArgument("need at least one nonzero coefficient".into()));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(SeriesError::InvalidArgument("coefficients must be finite".into()));
        }
        let total: f64 = coeffs.iter().sum();
        let scale: f64 = coeffs.iter().map(|c| c.abs()).sum();
        if total.abs() > 1e-12 * scale {
            return Err(SeriesError::InvalidArgument(format!("coefficients must sum to zero, got {total}")));
        }
        Ok(Self { coeffs })
    }

    /// Builds a period-`period` pattern from (residue, coefficient) pairs.
    pub fn from_residues(period: usize, pairs: &[(usize, f64)]) -> Result<Self, SeriesError> {
        let mut coeffs = vec![0.0; period];
        for &(r, c) in pairs {
            if r == 0 || r > period {
                return Err(SeriesError::InvalidArgument(format!("residue {r} outside 1..={period}")));
            }
            coeffs[r - 1] += c;
        }
        Self::new(coeffs)
    }

    pub fn period(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// chi(k) for k >= 1.
    pub fn at(&self, k: u64) -> f64 {
        self.coeffs[((k - 1) % self.coeffs.len() as u64) as usize]
    }

    pub fn scaled(&self, factor: f64) -> Result<Self, SeriesError> {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    fn lattice_terms(&self) -> Vec<LatticeTerm> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(|(r, c)| LatticeTerm { coeff: *c, offset: (r + 1) as f64 })
            .collect()
    }

    /// sum_k chi(k) e^{-k t}, evaluated without cancellation at both ends.
    pub fn generating(&self, t: f64) -> f64 {
        let p = self.coeffs.len() as f64;
        if t <= 1.0 {
            // mean-zero lets each e^{-rt} be replaced by e^{-rt} - 1
            let num: f64 = self.coeffs.iter().enumerate().map(|(r, c)| c * (-((r + 1) as f64) * t).exp_m1()).sum();
            num / -(-p * t).exp_m1()
        } else {
            let num: f64 = self.coeffs.iter().enumerate().map(|(r, c)| c * (-((r + 1) as f64) * t).exp()).sum();
            num / (1.0 - (-p * t).exp())
        }
    }
}

fn check_s(s: f64) -> Result<(), SeriesError> {
    if s > 0.0 && s.is_finite() {
        Ok(())
    } else {
        Err(SeriesError::Domain(format!("s must be positive and finite, got {s}")))
    }
}

/// sum_{k>=1} chi(k)/k^s.
pub fn l_series(chi: &PeriodicCoefficients, s: f64) -> Result<SeriesValue, SeriesError> {
    check_s(s)?;
    shifted_lattice_sum(&chi.lattice_terms(), chi.period() as f64, s, false)
}

/// sum_{k>=1} chi(k) log(k)/k^s.
pub fn log_l_series(chi: &PeriodicCoefficients, s: f64) -> Result<SeriesValue, SeriesError> {
    check_s(s)?;
    shifted_lattice_sum(&chi.lattice_terms(), chi.period() as f64, s, true)
}

/// sum_{k>=1} chi(k)/k^s through its Mellin integral
/// Gamma(s) L(s) = int_0^inf t^{s-1} sum_k chi(k) e^{-kt} dt.
///
/// Shares no code with the lattice engine; used as an independent check.
pub fn l_series_by_quadrature(chi: &PeriodicCoefficients, s: f64, target_abs_error: f64) -> Result<SeriesValue, SeriesError> {
    check_s(s)?;
    let g = sfcore::gamma(s)?;
    let r = integrate_halfline(
        |t| t.powf(s - 1.0) * chi.generating(t),
        EndpointHint::exp_decay(NearEnd::LogSingular, 1.0),
        target_abs_error * g,
    )?;
    let mut out = r.scale(1.0 / g);
    out.converged = r.converged;
    Ok(out)
}

/// Common characters.
pub mod characters {
    use super::PeriodicCoefficients;

    fn pattern(coeffs: &[f64]) -> PeriodicCoefficients {
        PeriodicCoefficients::new(coeffs.to_vec()).expect("static pattern is mean-zero")
    }

    /// 1 - 1/3^s + 1/5^s - ...
    pub fn beta() -> PeriodicCoefficients {
        pattern(&[1.0, 0.0, -1.0, 0.0])
    }

    /// 1 - 1/2^s + 1/4^s - 1/5^s + ...
    pub fn mod3() -> PeriodicCoefficients {
        pattern(&[1.0, -1.0, 0.0])
    }

    /// 1 - 1/5^s + 1/7^s - 1/11^s + ...
    pub fn mod6() -> PeriodicCoefficients {
        pattern(&[1.0, 0.0, 0.0, 0.0, -1.0, 0.0])
    }

    /// 1 + 1/2^s - 1/4^s - 1/5^s + ...
    pub fn mod6_pair() -> PeriodicCoefficients {
        pattern(&[1.0, 1.0, 0.0, -1.0, -1.0, 0.0])
    }

    /// 1 + 1/3^s - 1/5^s - 1/7^s + ...
    pub fn mod8() -> PeriodicCoefficients {
        pattern(&[1.0, 0.0, 1.0, 0.0, -1.0, 0.0, -1.0, 0.0])
    }

    /// 1 + 1/5^s - 1/7^s - 1/11^s + ...
    pub fn mod12() -> PeriodicCoefficients {
        pattern(&[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, -1.0, 0.0, 0.0, 0.0, -1.0, 0.0])
    }

    /// 1 - 1/2^s + 1/3^s - ...
    pub fn eta() -> PeriodicCoefficients {
        pattern(&[1.0, -1.0])
    }
}
