//! The transcendents
//!
//! L(a,x) = int_0^inf sinh(au)/sinh(pi u) log(x^2+u^2) du
//! FL(a,x) = int_0^inf cosh(au)/cosh(pi u) log(x^2+u^2) du
//!
//! as integrals for any 0 < a < pi, as finite sums of log-Gamma values for
//! a = m pi/n, and the recurrence, reflection and multiplication relations
//! between those closed forms.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::quad::{integrate_halfline, EndpointHint, EvalResult, NearEnd, QuadError};
use crate::sfcore::{lgamma, SfError};

/// Distance to a cotangent or sine pole below which arguments are refused.
pub const POLE_GUARD: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TranscendentError {
    #[error("invalid angle: {0}")]
    InvalidAngle(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("relation {kind} needs m+n {needed}, angle {angle} has m+n {actual}")]
    BranchMismatch { kind: RelationKind, angle: RationalAngle, needed: Parity, actual: Parity },
    #[error("singular argument: {0}")]
    SingularArgument(String),
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Special(#[from] SfError),
}

/// Parity of m+n, which selects the closed-form branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

/// a = m pi / n with 0 < m < n coprime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    m: u32,
    n: u32,
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl RationalAngle {
    pub fn new(m: u32, n: u32) -> Result<Self, TranscendentError> {
        if m == 0 || m >= n {
            return Err(TranscendentError::InvalidAngle(format!("need 0 < m < n, got m={m}, n={n}")));
        }
        if gcd(m, n) != 1 {
            return Err(TranscendentError::InvalidAngle(format!("m={m} and n={n} are not coprime")));
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn value(&self) -> f64 {
        self.m as f64 * PI / self.n as f64
    }

    pub fn parity(&self) -> Parity {
        if (self.m + self.n) % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Every angle with denominator at most `n_max`.
    pub fn all_up_to(n_max: u32) -> Vec<RationalAngle> {
        (2..=n_max).flat_map(|n| (1..n).filter_map(move |m| RationalAngle::new(m, n).ok())).collect()
    }

    /// (-1)^{i-1} sin(i a)
    pub(crate) fn s(&self, i: u32) -> f64 {
        sign(i) * (i as f64 * self.value()).sin()
    }

    /// (-1)^{i-1} cos((i - 1/2) a)
    pub(crate) fn c(&self, i: u32) -> f64 {
        sign(i) * ((i as f64 - 0.5) * self.value()).cos()
    }

    /// Upper index of the odd-branch sums for L and FL, and of both even-branch sums.
    pub(crate) fn half_range(&self) -> u32 {
        (self.n - 1) / 2
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

fn sign(i: u32) -> f64 {
    if i % 2 == 1 {
        1.0
    } else {
        -1.0
    }
}

fn check_integral_args(a: f64, x: f64) -> Result<(), TranscendentError> {
    if !(a > 0.0 && a < PI) {
        return Err(TranscendentError::Domain(format!("a must lie in (0, pi), got {a}")));
    }
    check_x(x)
}

fn check_x(x: f64) -> Result<(), TranscendentError> {
    if !(x >= 0.0 && x.is_finite()) {
        return Err(TranscendentError::Domain(format!("x must be finite and >= 0, got {x}")));
    }
    Ok(())
}

fn log_sq(x: f64, u: f64) -> f64 {
    2.0 * x.hypot(u).ln()
}

fn hint(x: f64, a: f64) -> EndpointHint {
    let near = if x == 0.0 { NearEnd::LogSingular } else { NearEnd::Smooth };
    EndpointHint::exp_decay(near, PI - a)
}

/// L(a,x) by quadrature.
pub fn l_integral(a: f64, x: f64, target_abs_error: f64) -> Result<EvalResult, TranscendentError> {
    check_integral_args(a, x)?;
    // sinh(au)/sinh(pi u) = e^{-(pi-a)u} (1 - e^{-2au})/(1 - e^{-2 pi u})
    let f = |u: f64| {
        let ratio = if u == 0.0 { a / PI } else { (-2.0 * a * u).exp_m1() / (-2.0 * PI * u).exp_m1() };
        (-(PI - a) * u).exp() * ratio * log_sq(x, u)
    };
    Ok(integrate_halfline(f, hint(x, a), target_abs_error)?)
}

/// FL(a,x) by quadrature.
pub fn frakl_integral(a: f64, x: f64, target_abs_error: f64) -> Result<EvalResult, TranscendentError> {
    check_integral_args(a, x)?;
    let f = |u: f64| {
        let ratio = (1.0 + (-2.0 * a * u).exp()) / (1.0 + (-2.0 * PI * u).exp());
        (-(PI - a) * u).exp() * ratio * log_sq(x, u)
    };
    Ok(integrate_halfline(f, hint(x, a), target_abs_error)?)
}

/// L(m pi/n, x) as a finite sum of log-Gamma values.
pub fn l_closed(angle: RationalAngle, x: f64) -> Result<f64, TranscendentError> {
    check_x(x)?;
    let n = angle.n as f64;
    let t = (0.5 * angle.value()).tan();
    Ok(match angle.parity() {
        Parity::Odd => {
            let sum: f64 = (1..angle.n)
                .map(|i| {
                    let i_f = i as f64;
                    angle.s(i) * (lgamma((x + n + i_f) / (2.0 * n)) - lgamma((x + i_f) / (2.0 * n)))
                })
                .sum();
            t * (2.0 * n).ln() + 2.0 * sum
        }
        Parity::Even => {
            let sum: f64 = (1..=angle.half_range())
                .map(|i| {
                    let i_f = i as f64;
                    angle.s(i) * (lgamma((x + n - i_f) / n) - lgamma((x + i_f) / n))
                })
                .sum();
            t * n.ln() + 2.0 * sum
        }
    })
}

/// FL(m pi/n, x) as a finite sum of log-Gamma values.
pub fn frakl_closed(angle: RationalAngle, x: f64) -> Result<f64, TranscendentError> {
    check_x(x)?;
    let n = angle.n as f64;
    let sec = 1.0 / (0.5 * angle.value()).cos();
    Ok(match angle.parity() {
        Parity::Odd => {
            let sum: f64 = (1..=angle.n)
                .map(|i| {
                    let h = i as f64 - 0.5;
                    angle.c(i) * (lgamma((x + n + h) / (2.0 * n)) - lgamma((x + h) / (2.0 * n)))
                })
                .sum();
            sec * (2.0 * n).ln() + 2.0 * sum
        }
        Parity::Even => {
            let sum: f64 = (1..=angle.half_range())
                .map(|i| {
                    let h = i as f64 - 0.5;
                    angle.c(i) * (lgamma((x + n - h) / n) - lgamma((x + h) / n))
                })
                .sum();
            sec * n.ln() + 2.0 * sum
        }
    })
}

/// Structural relations satisfied by the closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationKind {
    /// L(x+2) + L(x) at a = pi/2
    RightAngleRecurrence,
    /// L(x) + L(2-x) at a = pi/2
    RightAngleReflection,
    /// L(x+n) + L(x), m+n odd
    Recurrence,
    /// L(x) + L(n-x), m+n odd
    Reflection,
    /// L(x+n) - L(x), m+n even
    EvenRecurrence,
    /// L(x) - L(n-x), m+n even
    EvenReflection,
    /// sum_k L(x + k n'/r), n' = 2n or n by parity
    Multiplication,
    /// L(n/2) in elementary terms, m+n odd
    HalfPoint,
    /// FL(x+n) + FL(x), m+n odd
    CoshRecurrence,
    /// FL(x) + FL(n-x), m+n odd
    CoshReflection,
    /// FL(x+n) - FL(x), m+n even
    CoshEvenRecurrence,
    /// FL(x) - FL(n-x), m+n even
    CoshEvenReflection,
    /// FL(n/2) in elementary terms, m+n odd
    CoshHalfPoint,
    /// sum_k FL(x + k n'/r)
    CoshMultiplication,
    /// tan(a/2) = sum_{i<n} (-1)^{i-1} sin(ia), m+n odd
    TangentSum,
}

impl RelationKind {
    pub const ALL: [RelationKind; 15] = [
        RelationKind::RightAngleRecurrence,
        RelationKind::RightAngleReflection,
        RelationKind::Recurrence,
        RelationKind::Reflection,
        RelationKind::EvenRecurrence,
        RelationKind::EvenReflection,
        RelationKind::Multiplication,
        RelationKind::HalfPoint,
        RelationKind::CoshRecurrence,
        RelationKind::CoshReflection,
        RelationKind::CoshEvenRecurrence,
        RelationKind::CoshEvenReflection,
        RelationKind::CoshHalfPoint,
        RelationKind::CoshMultiplication,
        RelationKind::TangentSum,
    ];

    pub fn wire_name(&self) -> &'static str {
        match self {
            RelationKind::RightAngleRecurrence => "rec_L_eq14",
            RelationKind::RightAngleReflection => "refl_L_eq15",
            RelationKind::Recurrence => "rec_L_eq21",
            RelationKind::Reflection => "refl_L_eq22",
            RelationKind::EvenRecurrence => "rec_L_eq24",
            RelationKind::EvenReflection => "refl_L_eq25",
            RelationKind::Multiplication => "mult_L_eq26",
            RelationKind::HalfPoint => "halfpoint_L_eq23",
            RelationKind::CoshRecurrence => "rec_frakL_eq75",
            RelationKind::CoshReflection => "refl_frakL_eq76",
            RelationKind::CoshEvenRecurrence => "rec_frakL_eq77",
            RelationKind::CoshEvenReflection => "refl_frakL_eq78",
            RelationKind::CoshHalfPoint => "halfpoint_frakL_eq79",
            RelationKind::CoshMultiplication => "mult_frakL_eq80",
            RelationKind::TangentSum => "identity_eq19",
        }
    }

    /// Required parity of m+n; None when both branches apply.
    pub fn parity(&self) -> Option<Parity> {
        use RelationKind::*;
        match self {
            Multiplication | CoshMultiplication => None,
            EvenRecurrence | EvenReflection | CoshEvenRecurrence | CoshEvenReflection => Some(Parity::Even),
            _ => Some(Parity::Odd),
        }
    }

    pub fn needs_multiplier(&self) -> bool {
        matches!(self, RelationKind::Multiplication | RelationKind::CoshMultiplication)
    }

    /// Whether the residual depends on x.
    pub fn uses_x(&self) -> bool {
        !matches!(self, RelationKind::HalfPoint | RelationKind::CoshHalfPoint | RelationKind::TangentSum)
    }

    /// Whether the relation is stated for a single angle only.
    pub fn fixed_angle(&self) -> Option<RationalAngle> {
        match self {
            RelationKind::RightAngleRecurrence | RelationKind::RightAngleReflection => Some(RationalAngle { m: 1, n: 2 }),
            _ => None,
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.wire_name())
    }
}

impl FromStr for RelationKind {
    type Err = TranscendentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RelationKind::ALL
            .into_iter()
            .find(|k| k.wire_name() == s)
            .ok_or_else(|| TranscendentError::Domain(format!("unknown relation kind {s:?}")))
    }
}

/// log of a positive elementary factor; poles and zeros are refused.
fn log_factor(v: f64, what: &str) -> Result<f64, TranscendentError> {
    if !v.is_finite() || v == 0.0 {
        return Err(TranscendentError::SingularArgument(format!("{what} is {v}")));
    }
    Ok(v.abs().ln())
}

/// Distance of t to the nearest multiple of p.
fn off_lattice(t: f64, p: f64) -> f64 {
    let r = t.rem_euclid(p);
    r.min(p - r)
}

/// log[t cot(t pi/2n)], with poles of cot and zeros of either factor refused.
fn log_t_cot(t: f64, n: f64) -> Result<f64, TranscendentError> {
    if off_lattice(t, n) < POLE_GUARD {
        return Err(TranscendentError::SingularArgument(format!("cot({t} pi/{}) at a pole or zero", 2.0 * n)));
    }
    log_factor(t / (t * PI / (2.0 * n)).tan(), "t cot(t pi/2n)")
}

/// log[((t)/(n-x-i')) sin(u pi/n)/sin(t pi/n)] used by the even reflections.
fn log_sine_ratio(t: f64, other: f64, u: f64, n: f64) -> Result<f64, TranscendentError> {
    if off_lattice(t, n) < POLE_GUARD || off_lattice(u, n) < POLE_GUARD || other.abs() < POLE_GUARD {
        return Err(TranscendentError::SingularArgument(format!("sine ratio at t={t}, u={u}")));
    }
    log_factor((t / other) * (u * PI / n).sin() / (t * PI / n).sin(), "sine ratio")
}

/// Which transcendent a relation term refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transcendent {
    /// L(a,x)
    Sinh,
    /// FL(a,x)
    Cosh,
}

/// A relation split into sum_j coeff_j T_j(a, |arg_j|) + lhs_constant on the
/// left and an elementary (or log-Gamma) right side.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationTerms {
    pub lhs: Vec<(f64, Transcendent, f64)>,
    pub lhs_constant: f64,
    pub rhs: f64,
}

impl RelationTerms {
    /// Left side with each transcendent value supplied by `eval`.
    pub fn lhs_with<E>(&self, mut eval: impl FnMut(Transcendent, f64) -> Result<f64, E>) -> Result<f64, E> {
        let mut acc = self.lhs_constant;
        for &(c, t, arg) in &self.lhs {
            acc += c * eval(t, arg.abs())?;
        }
        Ok(acc)
    }
}

/// Both sides of a relation. Transcendent values on the left are left
/// unevaluated so that callers can pick the closed form or the integral.
///
/// L and FL are even in x, so arguments such as n - x enter by absolute
/// value. `r` is required (>= 2) for the multiplication kinds only.
pub fn relation_terms(kind: RelationKind, angle: RationalAngle, x: f64, r: Option<u32>) -> Result<RelationTerms, TranscendentError> {
    if let Some(needed) = kind.parity() {
        if angle.parity() != needed {
            return Err(TranscendentError::BranchMismatch { kind, angle, needed, actual: angle.parity() });
        }
    }
    if let Some(fixed) = kind.fixed_angle() {
        if angle != fixed {
            return Err(TranscendentError::Domain(format!("{kind} holds at the angle {fixed} only")));
        }
    }
    if kind.uses_x() {
        check_x(x)?;
    }
    let r = match (kind.needs_multiplier(), r) {
        (true, Some(r)) if r >= 2 => r,
        (true, _) => return Err(TranscendentError::Domain(format!("{kind} needs a multiplier r >= 2"))),
        (false, _) => 0,
    };
    use Transcendent::{Cosh, Sinh};
    let n = angle.n as f64;
    let full = 1..angle.n;
    let cos_full = 1..=angle.n;
    let half = 1..=angle.half_range();
    let terms = |lhs: Vec<(f64, Transcendent, f64)>, rhs: f64| RelationTerms { lhs, lhs_constant: 0.0, rhs };

    Ok(match kind {
        RelationKind::RightAngleRecurrence => terms(vec![(1.0, Sinh, x + 2.0), (1.0, Sinh, x)], 2.0 * (x + 1.0).ln()),
        RelationKind::RightAngleReflection => terms(vec![(1.0, Sinh, x), (1.0, Sinh, 2.0 - x)], 2.0 * log_t_cot(x - 1.0, 2.0)?),
        RelationKind::Recurrence => {
            let rhs: f64 = full.map(|i| angle.s(i) * (x + i as f64).ln()).sum();
            terms(vec![(1.0, Sinh, x + n), (1.0, Sinh, x)], 2.0 * rhs)
        }
        RelationKind::Reflection => {
            let mut rhs = 0.0;
            for i in full {
                rhs += angle.s(i) * log_t_cot(x - i as f64, n)?;
            }
            terms(vec![(1.0, Sinh, x), (1.0, Sinh, n - x)], 2.0 * rhs)
        }
        RelationKind::EvenRecurrence => {
            let rhs: f64 = half.map(|i| angle.s(i) * ((x + n - i as f64) / (x + i as f64)).ln()).sum();
            terms(vec![(1.0, Sinh, x + n), (-1.0, Sinh, x)], 2.0 * rhs)
        }
        RelationKind::EvenReflection => {
            let mut rhs = 0.0;
            for i in half {
                let t = i as f64;
                rhs += angle.s(i) * log_sine_ratio(x - t, n - x - t, x + t, n)?;
            }
            terms(vec![(1.0, Sinh, x), (-1.0, Sinh, n - x)], 2.0 * rhs)
        }
        RelationKind::HalfPoint => {
            let mut rhs = 0.0;
            for i in full {
                let term = if 2 * i == angle.n {
                    (2.0 * n / PI).ln()
                } else {
                    let t = i as f64;
                    log_factor((0.5 * n - t) / (PI / 4.0 - t * PI / (2.0 * n)).tan(), "half-point factor")?
                };
                rhs += angle.s(i) * term;
            }
            terms(vec![(1.0, Sinh, 0.5 * n)], rhs)
        }
        RelationKind::Multiplication => multiplication(angle, x, r, Sinh),
        RelationKind::CoshRecurrence => {
            let rhs: f64 = cos_full.map(|i| angle.c(i) * (x + i as f64 - 0.5).ln()).sum();
            terms(vec![(1.0, Cosh, x + n), (1.0, Cosh, x)], 2.0 * rhs)
        }
        RelationKind::CoshReflection => {
            let mut rhs = 0.0;
            for i in cos_full {
                rhs += angle.c(i) * log_t_cot(x - i as f64 + 0.5, n)?;
            }
            terms(vec![(1.0, Cosh, x), (1.0, Cosh, n - x)], 2.0 * rhs)
        }
        RelationKind::CoshEvenRecurrence => {
            let rhs: f64 = half.map(|i| angle.c(i) * ((x + n + 0.5 - i as f64) / (x + i as f64 - 0.5)).ln()).sum();
            terms(vec![(1.0, Cosh, x + n), (-1.0, Cosh, x)], 2.0 * rhs)
        }
        RelationKind::CoshEvenReflection => {
            let mut rhs = 0.0;
            for i in half {
                let h = i as f64 - 0.5;
                rhs += angle.c(i) * log_sine_ratio(x - h, n - x - h, x + h, n)?;
            }
            terms(vec![(1.0, Cosh, x), (-1.0, Cosh, n - x)], 2.0 * rhs)
        }
        RelationKind::CoshHalfPoint => {
            let mut rhs = 0.0;
            for i in cos_full {
                let term = if 2 * i == angle.n + 1 {
                    (2.0 * n / PI).ln()
                } else {
                    let h = i as f64 - 0.5;
                    log_factor((0.5 * (n + 1.0) - i as f64) / (PI / 4.0 - h * PI / (2.0 * n)).tan(), "half-point factor")?
                };
                rhs += angle.c(i) * term;
            }
            terms(vec![(1.0, Cosh, 0.5 * n)], rhs)
        }
        RelationKind::CoshMultiplication => multiplication(angle, x, r, Cosh),
        RelationKind::TangentSum => RelationTerms {
            lhs: Vec::new(),
            lhs_constant: (0.5 * angle.value()).tan(),
            rhs: full.map(|i| angle.s(i)).sum(),
        },
    })
}

/// |LHS - RHS| of a relation, all transcendent values from the closed forms.
pub fn relation_residual(kind: RelationKind, angle: RationalAngle, x: f64, r: Option<u32>) -> Result<f64, TranscendentError> {
    let terms = relation_terms(kind, angle, x, r)?;
    let lhs = terms.lhs_with(|t, arg| match t {
        Transcendent::Sinh => l_closed(angle, arg),
        Transcendent::Cosh => frakl_closed(angle, arg),
    })?;
    Ok((lhs - terms.rhs).abs())
}

/// Gauss multiplication applied to the closed forms:
/// sum_{k<r} T(x + k w/r) with w = 2n (odd) or n (even).
fn multiplication(angle: RationalAngle, x: f64, r: u32, which: Transcendent) -> RelationTerms {
    let cosh = which == Transcendent::Cosh;
    let n = angle.n as f64;
    let rf = r as f64;
    let ln_r = rf.ln();
    let odd = angle.parity() == Parity::Odd;
    let width = if odd { 2.0 * n } else { n };
    let lhs = (0..r).map(|k| (1.0, which, x + k as f64 * width / rf)).collect();
    let half_a = 0.5 * angle.value();
    let lead = if cosh { 1.0 / half_a.cos() } else { half_a.tan() };
    let rhs = if odd {
        let top = if cosh { angle.n } else { angle.n - 1 };
        let sum: f64 = (1..=top)
            .map(|i| {
                let (coeff, shift) = if cosh { (angle.c(i), 0.5) } else { (angle.s(i), 0.0) };
                let q = rf * (x + i as f64 - shift) / (2.0 * n);
                coeff * (lgamma(0.5 * rf + q) - 0.5 * rf * ln_r - lgamma(q))
            })
            .sum();
        lead * rf * (2.0 * n).ln() + 2.0 * sum
    } else {
        let sum: f64 = (1..=angle.half_range())
            .map(|i| {
                let t = i as f64;
                if cosh {
                    angle.c(i) * (lgamma(rf + rf * (x - t + 0.5) / n) - (rf - rf * (2.0 * t - 1.0) / n) * ln_r - lgamma(rf * (x + t - 0.5) / n))
                } else {
                    angle.s(i) * (lgamma(rf * (x + n - t) / n) - (rf - 2.0 * rf * t / n) * ln_r - lgamma(rf * (x + t) / n))
                }
            })
            .sum();
        lead * rf * n.ln() + 2.0 * sum
    };
    RelationTerms { lhs, lhs_constant: 0.0, rhs }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_validation() {
        assert!(RationalAngle::new(2, 4).is_err());
        assert!(RationalAngle::new(0, 3).is_err());
        assert!(RationalAngle::new(3, 3).is_err());
        let a = RationalAngle::new(2, 3).unwrap();
        assert_eq!(a.parity(), Parity::Odd);
        assert_eq!(RationalAngle::new(1, 3).unwrap().parity(), Parity::Even);
        assert_eq!(RationalAngle::all_up_to(6).len(), 1 + 2 + 2 + 4 + 2);
    }

    #[test]
    fn right_angle_at_one() {
        let a = RationalAngle::new(1, 2).unwrap();
        let v = l_closed(a, 1.0).unwrap();
        assert!((v - (4.0 / PI).ln()).abs() < 1e-14);
        let q = l_integral(PI / 2.0, 1.0, 1e-13).unwrap();
        assert!((q.value - v).abs() < 1e-12, "{q:?}");
    }

    #[test]
    fn relation_wire_names_round_trip() {
        for k in RelationKind::ALL {
            assert_eq!(k.wire_name().parse::<RelationKind>().unwrap(), k);
        }
    }

    #[test]
    fn branch_mismatch_is_reported() {
        let a = RationalAngle::new(1, 3).unwrap();
        let e = relation_residual(RelationKind::Recurrence, a, 0.3, None);
        assert!(matches!(e, Err(TranscendentError::BranchMismatch { .. })));
    }

    #[test]
    fn cot_pole_is_refused() {
        let a = RationalAngle::new(1, 2).unwrap();
        let e = relation_residual(RelationKind::Reflection, a, 1.0, None);
        assert!(matches!(e, Err(TranscendentError::SingularArgument(_))));
    }
}
