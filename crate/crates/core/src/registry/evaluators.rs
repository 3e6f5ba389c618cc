//! Evaluator bodies, keyed by catalog id. Each returns (LHS, RHS) computed
//! through the pipelines named in the record.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

use num_complex::Complex64;

use super::forms::{self, patterns};
use super::{Binding, RegistryError, Sides};
use crate::quad::{integrate_halfline, integrate_unit, EndpointHint, EvalResult, FarEnd, NearEnd};
use crate::sfcore::{digamma, gamma, lgamma, EULER_GAMMA as C};
use crate::sumacc::{
    characters, feq_sides, l_series, l_series_by_quadrature, log_l_series, shifted_lattice_sum, sin_log_series, twisted_sum,
    FeqFamily, LatticeTerm, PeriodicCoefficients, TwistedSeries, TwistedValue,
};
use crate::transcendent::{
    frakl_closed, frakl_integral, l_closed, l_integral, relation_terms, Parity, RationalAngle, RelationKind, Transcendent,
};

type Out = Result<Sides, RegistryError>;
type Value = Result<EvalResult, RegistryError>;

fn exact(v: f64) -> Value {
    if v.is_finite() {
        Ok(EvalResult::exact(v))
    } else {
        Err(RegistryError::BindingOutOfDomain(format!("closed form evaluates to {v}")))
    }
}

/// Typed access to a validated binding.
struct Params<'a>(&'a Binding);

impl Params<'_> {
    fn f(&self, name: &str) -> f64 {
        self.0[name]
    }

    fn u(&self, name: &str) -> u32 {
        self.0[name] as u32
    }

    fn angle(&self) -> Result<RationalAngle, RegistryError> {
        RationalAngle::new(self.u("m"), self.u("n")).map_err(|e| RegistryError::BindingOutOfDomain(e.to_string()))
    }
}

fn out_of_domain(msg: impl Into<String>) -> RegistryError {
    RegistryError::BindingOutOfDomain(msg.into())
}

// ---- arithmetic on results with error propagation

fn quotient(a: EvalResult, b: EvalResult) -> EvalResult {
    let q = a.value / b.value;
    EvalResult {
        value: q,
        abs_error_estimate: (a.abs_error_estimate + q.abs() * b.abs_error_estimate) / b.value.abs(),
        evaluations: a.evaluations + b.evaluations,
        converged: a.converged && b.converged,
    }
}

fn exp_of(a: EvalResult) -> EvalResult {
    let e = a.value.exp();
    EvalResult { value: e, abs_error_estimate: a.abs_error_estimate * e, ..a }
}

// ---- integration helpers

fn halfline(f: impl Fn(f64) -> f64, near: NearEnd, rate: f64, target: f64) -> Value {
    Ok(integrate_halfline(f, EndpointHint::exp_decay(near, rate), target)?)
}

/// int_0^1 g(y) (log 1/y)^p dy, integrated in t = log(1/y).
fn log_power(g: impl Fn(f64) -> f64, p: f64, target: f64) -> Value {
    let near = if p < 0.0 { NearEnd::LogSingular } else { NearEnd::Smooth };
    halfline(
        |t| {
            let y = (-t).exp();
            g(y) * t.powf(p) * y
        },
        near,
        1.0,
        target,
    )
}

/// int_0^1 g(y) log log(1/y) dy.
fn loglog_unit(g: impl Fn(f64) -> f64, target: f64) -> Value {
    Ok(integrate_unit(
        |y| g(y) * (-y.ln()).ln(),
        EndpointHint::new(NearEnd::LogLogSingular, FarEnd::LogLogSingular),
        target,
    )?)
}

/// sinh(a u)/sinh(pi u) without overflow.
fn sinh_ratio(a: f64, u: f64) -> f64 {
    if u == 0.0 {
        return a / PI;
    }
    (-(PI - a) * u).exp() * (-2.0 * a * u).exp_m1() / (-2.0 * PI * u).exp_m1()
}

/// cosh(a u)/cosh(pi u) without overflow.
fn cosh_ratio(a: f64, u: f64) -> f64 {
    (-(PI - a) * u).exp() * (1.0 + (-2.0 * a * u).exp()) / (1.0 + (-2.0 * PI * u).exp())
}

/// 1 + 2 y cos a + y^2
fn quad_den(y: f64, a: f64) -> f64 {
    1.0 + 2.0 * y * a.cos() + y * y
}

/// cos(s atan(u/x)) / (x^2+u^2)^{s/2}
fn polar_weight(s: f64, x: f64, u: f64) -> f64 {
    (s * (u / x).atan()).cos() * x.hypot(u).powf(-s)
}

// ---- series helpers

fn twisted(theta: f64, stride: f64, shift: f64, start: u64, s: f64, log_weight: bool) -> Result<TwistedValue, RegistryError> {
    Ok(twisted_sum(&TwistedSeries { theta, stride, shift, start, s, log_weight })?)
}

/// sum_{i>=1} (-1)^{i-1} sin(i a) i^{-p} [log i]
fn alt_sine_series(a: f64, p: f64, log_weight: bool) -> Value {
    let mut v = twisted(a + PI, 1.0, 0.0, 1, p, log_weight)?.im();
    v.value = -v.value;
    Ok(v)
}

/// sum_{i>=1} sin(i a) i^{-p} [log i]
fn sine_series(a: f64, p: f64, log_weight: bool) -> Value {
    Ok(twisted(a, 1.0, 0.0, 1, p, log_weight)?.im())
}

/// sum over odd k of sin(k a) k^{-p} [log k]
fn odd_sine_series(a: f64, p: f64, log_weight: bool) -> Value {
    Ok(twisted(2.0 * a, 2.0, 1.0, 0, p, log_weight)?.rotate(Complex64::from_polar(1.0, a)).im())
}

/// sum_{i>=0} (-1)^i cos((i+1/2) a) (2i+1)^{-p} [log(2i+1)]
fn alt_half_cosine_series(a: f64, p: f64, log_weight: bool) -> Value {
    Ok(twisted(a + PI, 2.0, 1.0, 0, p, log_weight)?.rotate(Complex64::from_polar(1.0, 0.5 * a)).re())
}

/// sum_{i>=0} sin((i+1/2) a) (2i+1)^{-p}
fn half_sine_series(a: f64, p: f64) -> Value {
    Ok(twisted(a, 2.0, 1.0, 0, p, false)?.rotate(Complex64::from_polar(1.0, 0.5 * a)).im())
}

fn lattice(terms: &[(f64, f64)], period: f64, s: f64) -> Value {
    let terms: Vec<LatticeTerm> = terms.iter().map(|&(coeff, offset)| LatticeTerm { coeff, offset }).collect();
    Ok(shifted_lattice_sum(&terms, period, s, false)?)
}

fn lser(chi: &PeriodicCoefficients, s: f64) -> Value {
    Ok(l_series(chi, s)?)
}

fn llser(chi: &PeriodicCoefficients, s: f64) -> Value {
    Ok(log_l_series(chi, s)?)
}

fn mellin(chi: &PeriodicCoefficients, s: f64, target: f64) -> Value {
    Ok(l_series_by_quadrature(chi, s, target)?)
}

/// Coefficients from a formula over one period; rounding residue of exact
/// zeros is removed.
fn pattern(period: usize, f: impl Fn(usize) -> f64) -> Result<PeriodicCoefficients, RegistryError> {
    let c = (1..=period).map(|k| {
        let v = f(k);
        if v.abs() < 1e-14 {
            0.0
        } else {
            v
        }
    });
    Ok(PeriodicCoefficients::new(c.collect())?)
}

fn cos_half(s: f64) -> Result<f64, RegistryError> {
    nonzero("cos(s pi/2)", (0.5 * s * PI).cos())
}

fn sin_half(s: f64) -> Result<f64, RegistryError> {
    nonzero("sin(s pi/2)", (0.5 * s * PI).sin())
}

fn nonzero(name: &str, v: f64) -> Result<f64, RegistryError> {
    if v.abs() < 1e-8 {
        Err(crate::sumacc::SeriesError::SingularPrefactor(format!("{name} = {v:e}")).into())
    } else {
        Ok(v)
    }
}

// ---- dispatch

pub(super) fn evaluate(id: &str, binding: &Binding, target: f64) -> Out {
    let p = Params(binding);
    match id {
        "eq02" => frullani_form(&p, target),
        "eq05" => log_difference_integral(&p, target),
        "eq07" => {
            let a = p.angle()?;
            Ok((l_integral(a.value(), p.f("x"), target)?, exact(l_closed(a, p.f("x"))?)?))
        }
        "eq08" => Ok((
            halfline(|u| (u * u).ln_1p() * (-FRAC_PI_2 * u).exp() / (1.0 + (-PI * u).exp()), NearEnd::Smooth, FRAC_PI_2, target)?,
            exact((4.0 / PI).ln())?,
        )),
        "eq09" => frullani_cosine(&p, target),
        "eq10" => {
            let a = p.angle()?;
            let (m, n) = (a.m() as f64, a.n() as f64);
            let lhs = halfline(
                |t| (-(n - m) * t).exp() * (-2.0 * m * t).exp_m1() / (-2.0 * n * t).exp_m1() * t.ln(),
                NearEnd::LogSingular,
                n - m,
                target,
            )?;
            Ok((lhs, exact(forms::sinh_loglog_integral(a))?))
        }
        "eq11" => {
            let n = p.u("n");
            let a = RationalAngle::new(1, n).map_err(|e| out_of_domain(e.to_string()))?;
            let lhs = loglog_unit(|z| z.powi(n as i32 - 2) / (0..n).map(|j| z.powi(2 * j as i32)).sum::<f64>(), target)?;
            Ok((lhs, exact(forms::sinh_loglog_integral(a))?))
        }
        "eq12a" => Ok((
            loglog_unit(|y| 1.0 / (1.0 + y * y), target)?,
            exact(FRAC_PI_2 * (0.5 * (2.0 * PI).ln() + lgamma(0.75) - lgamma(0.25)))?,
        )),
        "eq12b" => Ok((
            loglog_unit(|y| 1.0 / (1.0 + y + y * y), target)?,
            exact(PI / 3f64.sqrt() * ((2.0 * PI).ln() / 3.0 + lgamma(2.0 / 3.0) - lgamma(1.0 / 3.0)))?,
        )),
        "eq13" => {
            let x = p.f("x");
            Ok((l_integral(FRAC_PI_2, x, target)?, exact(2.0 * (2f64.ln() + lgamma((x + 3.0) / 4.0) - lgamma((x + 1.0) / 4.0)))?))
        }
        "eq14" => relation(&p, RelationKind::RightAngleRecurrence, target),
        "eq15" => relation(&p, RelationKind::RightAngleReflection, target),
        "eq16" => Ok((l_integral(FRAC_PI_2, 1.0, target)?, exact((4.0 / PI).ln())?)),
        "eq17a" => {
            let (x, a) = (p.f("x"), 2.0 * FRAC_PI_3);
            let lhs = l_integral(a, x + 3.0, target)?.add(l_integral(a, x, target)?);
            Ok((lhs, exact(2.0 * FRAC_PI_3.sin() * ((x + 2.0) * (x + 1.0)).ln())?))
        }
        "eq17b" => {
            let (x, a) = (p.f("x"), 2.0 * FRAC_PI_3);
            let lhs = l_integral(a, x, target)?.add(l_integral(a, (3.0 - x).abs(), target)?);
            let arg = (x - 2.0) * (x - 1.0) * ((x + 2.0) * PI / 6.0).tan() * ((x + 1.0) * PI / 6.0).tan();
            if !(arg > 0.0) {
                return Err(out_of_domain(format!("x = {x} makes the logarithm's argument {arg}")));
            }
            Ok((lhs, exact(2.0 * FRAC_PI_3.sin() * arg.ln())?))
        }
        "eq18" => Ok((
            l_integral(2.0 * FRAC_PI_3, 1.5, target)?,
            exact(2.0 * FRAC_PI_3.sin() * (0.5 / (PI / 12.0).tan()).ln())?,
        )),
        "eq19" => relation(&p, RelationKind::TangentSum, target),
        "eq20" => l_via_root_factor(&p, target),
        "eq21" => relation(&p, RelationKind::Recurrence, target),
        "eq22" => relation(&p, RelationKind::Reflection, target),
        "eq23" => relation(&p, RelationKind::HalfPoint, target),
        "eq24" => relation(&p, RelationKind::EvenRecurrence, target),
        "eq25" => relation(&p, RelationKind::EvenReflection, target),
        "eq26" => relation(&p, RelationKind::Multiplication, target),
        "eq27" => {
            let (s, x, u) = (p.f("s"), p.f("x"), p.f("u"));
            let near = if s < 1.0 { NearEnd::LogSingular } else { NearEnd::Smooth };
            let lhs = halfline(|z| z.powf(s - 1.0) * (-x * z).exp() * (u * z).cos(), near, x, target)?;
            Ok((lhs, exact(gamma(s)? * polar_weight(s, x, u))?))
        }
        "eq28" => {
            let (s, u) = (p.f("s"), p.f("u"));
            let hint = EndpointHint::new(NearEnd::LogSingular, FarEnd::Oscillatory { first_zero: FRAC_PI_2 / u, half_period: PI / u });
            let lhs = integrate_halfline(|z| z.powf(s - 1.0) * (u * z).cos(), hint, target)?;
            Ok((lhs, exact((0.5 * s * PI).cos() * gamma(s)? * u.powf(-s))?))
        }
        "eq29" => {
            let (a, s, x) = (p.f("a"), p.f("s"), p.f("x"));
            let lhs = halfline(|u| sinh_ratio(a, u) * polar_weight(s, x, u), NearEnd::Smooth, PI - a, target)?;
            let rhs = log_power(|y| y.powf(x) / quad_den(y, a), s - 1.0, target)?.scale(a.sin() / gamma(s)?);
            Ok((lhs, rhs))
        }
        "eq30" => {
            let (a, s) = (p.f("a"), p.f("s"));
            let lhs = halfline(|u| sinh_ratio(a, u) * u.powf(-s), NearEnd::LogSingular, PI - a, target)?;
            let rhs = log_power(|y| 1.0 / quad_den(y, a), s - 1.0, target)?.scale(a.sin() / (cos_half(s)? * gamma(s)?));
            Ok((lhs, rhs))
        }
        "eq31" => {
            let (ang, s) = (p.angle()?, p.f("s"));
            let (m, n, a) = (ang.m() as f64, ang.n() as f64, ang.value());
            let lhs = halfline(
                |t| (-(n - m) * t).exp() * (-2.0 * m * t).exp_m1() / (-2.0 * n * t).exp_m1() * t.powf(-s),
                NearEnd::LogSingular,
                n - m,
                target,
            )?;
            let pref = (PI / n).powf(1.0 - s) * a.sin() / (cos_half(s)? * gamma(s)?);
            Ok((lhs, log_power(|y| 1.0 / quad_den(y, a), s - 1.0, target)?.scale(pref)))
        }
        "eq32" => {
            let (n, s) = (p.u("n"), p.f("s"));
            let nf = n as f64;
            let a = PI / nf;
            let lhs = log_power(|y| y.powi(n as i32 - 2) / (0..n).map(|j| y.powi(2 * j as i32)).sum::<f64>(), -s, target)?;
            let pref = (PI / nf).powf(1.0 - s) * a.sin() / (cos_half(s)? * gamma(s)?);
            Ok((lhs, log_power(|y| 1.0 / quad_den(y, a), s - 1.0, target)?.scale(pref)))
        }
        "eq34" => feq(FeqFamily::GIntegral, &p),
        "eq35" => feq(FeqFamily::G1Integral, &p),
        "eq37a" => digamma_relation(&p, |y| 1.0 / (1.0 + y + y * y), (2.0 * PI / 3.0).ln(), target),
        "eq37b" => digamma_relation(&p, |y| 1.0 / (1.0 + y * y), FRAC_PI_2.ln(), target),
        "eq38a" => half_order_integral(third_kernel, (PI / 6.0).ln(), &characters::mod3(), target),
        "eq38b" => half_order_integral(quarter_kernel, (PI / 8.0).ln(), &characters::beta(), target),
        "eq40" => {
            let k = p.f("k");
            let lhs = halfline(|x| (-k * x).exp() * x.ln() / x.sqrt(), NearEnd::LogSingular, k, target)?;
            Ok((lhs, exact(-(PI / k).sqrt() * (k.ln() + 2.0 * 2f64.ln() + C))?))
        }
        "eq41a" => {
            let lhs = halfline(|x| x.ln() / x.sqrt() * third_kernel(x), NearEnd::LogSingular, 1.0, target)?.scale(FRAC_PI_3.sin());
            let chi = pattern(6, |i| if i % 2 == 0 { 1.0 } else { -1.0 } * (i as f64 * FRAC_PI_3).sin())?;
            Ok((lhs, log_shifted_series(&chi)?))
        }
        "eq41b" => {
            let lhs = halfline(|x| x.ln() / x.sqrt() * quarter_kernel(x), NearEnd::LogSingular, 1.0, target)?;
            Ok((lhs, log_shifted_series(&characters::beta().scaled(-1.0)?)?))
        }
        "eq42a" => half_order_series(&characters::mod3(), third_kernel, (8.0 * PI / 3.0).ln(), false, target),
        "eq42b" => half_order_series(&characters::beta(), quarter_kernel, (2.0 * PI).ln(), false, target),
        "eq43a" => half_order_series(&characters::mod3(), third_kernel, (8.0 * PI / 3.0).ln(), true, target),
        "eq43b" => half_order_series(&characters::beta(), quarter_kernel, (2.0 * PI).ln(), true, target),
        "eq43_A" => half_order_constant(&characters::mod3(), third_kernel, target),
        "eq43_B" => half_order_constant(&characters::beta(), quarter_kernel, target),
        "eq44" => {
            let (a, s) = (p.f("a"), p.f("s"));
            let lhs = halfline(|u| sinh_ratio(a, u) * u.powf(-s), NearEnd::LogSingular, PI - a, target)?;
            let rhs = lattice(&[(1.0, PI - a), (-1.0, PI + a)], 2.0 * PI, 1.0 - s)?.scale(gamma(1.0 - s)?);
            Ok((lhs, rhs))
        }
        "eq46" => {
            let (a, s) = (p.f("a"), p.f("s"));
            let lhs = log_power(|y| a.sin() / quad_den(y, a), s - 1.0, target)?;
            Ok((lhs, alt_sine_series(a, s, false)?.scale(gamma(s)?)))
        }
        "eq47" => {
            let (a, s) = (p.f("a"), p.f("s"));
            lattice_vs_twisted(lattice(&[(1.0, PI - a), (-1.0, PI + a)], 2.0 * PI, s)?, alt_sine_series(a, 1.0 - s, false)?, s)
        }
        "eq48" => {
            let (a, s) = (p.f("a"), p.f("s"));
            lattice_vs_twisted(lattice(&[(1.0, a), (-1.0, 2.0 * PI - a)], 2.0 * PI, s)?, sine_series(a, 1.0 - s, false)?, s)
        }
        "eq49a" => {
            let a = p.f("a");
            let lhs = lattice(&[(1.0, PI - a), (-1.0, PI + a)], 2.0 * PI, 0.5)?;
            Ok((lhs, alt_sine_series(a, 0.5, false)?.scale((2.0 / PI).sqrt())))
        }
        "eq49b" => {
            let a = p.f("a");
            let lhs = lattice(&[(1.0, a), (-1.0, 2.0 * PI - a)], 2.0 * PI, 0.5)?;
            Ok((lhs, sine_series(a, 0.5, false)?.scale((2.0 / PI).sqrt())))
        }
        "eq50a" => {
            let (ang, s) = (p.angle()?, p.f("s"));
            let lhs = lser(&patterns::alternating(ang)?, s)?;
            let rhs = alt_sine_series(ang.value(), 1.0 - s, false)?.scale((PI / ang.n() as f64).powf(s) / (sin_half(s)? * gamma(s)?));
            Ok((lhs, rhs))
        }
        "eq50b" => {
            let (ang, s) = (p.angle()?, p.f("s"));
            let lhs = lser(&patterns::sine(ang)?, s)?;
            let rhs = sine_series(ang.value(), 1.0 - s, false)?.scale((PI / ang.n() as f64).powf(s) / (sin_half(s)? * gamma(s)?));
            Ok((lhs, rhs))
        }
        "eq51" => feq(FeqFamily::Beta, &p),
        "eq52" => feq(FeqFamily::Mod3, &p),
        "eq53a" => feq(FeqFamily::Mod6, &p),
        "eq53b" => feq(FeqFamily::Mod6Pair, &p),
        "eq53_euler" => {
            let s = p.f("s");
            let lhs = lser(&characters::mod6_pair(), s)?.scale(1.0 + 2f64.powf(-s));
            let rhs = mellin(&characters::mod6(), s, target)?.scale(1.0 + 2f64.powf(1.0 - s));
            Ok((lhs, rhs))
        }
        "eq53_ex3" => {
            let s = p.f("s");
            let lhs = lser(&characters::mod6(), s)?;
            let pref = (PI / 3.0).powf(s) * FRAC_PI_3.sin() / (sin_half(s)? * gamma(s)?);
            Ok((lhs, mellin(&characters::mod6_pair(), 1.0 - s, target)?.scale(pref)))
        }
        "eq54" => feq(FeqFamily::Mod8, &p),
        "eq55" => {
            let a = p.angle()?;
            Ok((llser(&patterns::alternating(a)?, 1.0)?, exact(forms::alternating_log_series(a))?))
        }
        "eq56" => {
            let a = p.angle()?;
            Ok((llser(&patterns::sine(a)?, 1.0)?, exact(forms::sine_log_series(a))?))
        }
        "eq55_ex1" => Ok((llser(&characters::beta(), 1.0)?, exact(beta_log_value())?)),
        "eq55_ex1_product" => Ok((
            exp_of(llser(&characters::beta(), 1.0)?),
            exact((PI * (-C).exp() / gamma(0.75)?.powi(4)).powf(FRAC_PI_4))?,
        )),
        "eq55_ex2a" => Ok((llser(&characters::mod3(), 1.0)?, exact(mod3_log_value())?)),
        "eq55_ex2a_product" => Ok((
            exp_of(llser(&characters::mod3(), 1.0)?),
            exact((gamma(1.0 / 3.0)? * (-C / 3.0).exp() / (gamma(2.0 / 3.0)? * (2.0 * PI).cbrt())).powf(PI / 3f64.sqrt()))?,
        )),
        "eq55_ex2b" => Ok((llser(&characters::mod6(), 1.0)?, exact(mod6_log_value())?)),
        "eq55_ex2b_product" => Ok((
            exp_of(llser(&characters::mod6(), 1.0)?),
            exact(((2.0 * PI).sqrt() * (-0.5 * C).exp() / (3f64.powf(0.25) * gamma(2.0 / 3.0)? * gamma(5.0 / 6.0)?)).powf(PI / 3f64.sqrt()))?,
        )),
        "eq55_ex3a" => {
            let chi = PeriodicCoefficients::from_residues(8, &[(3, -1.0), (5, 1.0)])?;
            let a = RationalAngle::new(1, 4)?;
            Ok((llser(&chi, 1.0)?, exact(-forms::alternating_log_series(a))?))
        }
        "eq56_ex3b" => {
            let chi = PeriodicCoefficients::from_residues(8, &[(1, 1.0), (7, -1.0)])?;
            let a = RationalAngle::new(1, 4)?;
            Ok((llser(&chi, 1.0)?, exact(forms::sine_log_series(a))?))
        }
        "eq57" => {
            let (s, x) = (p.f("s"), p.f("x"));
            // u/sinh(pi u)
            let kernel = |u: f64| if u == 0.0 { 1.0 / PI } else { 2.0 * u * (-PI * u).exp() / -(-2.0 * PI * u).exp_m1() };
            let lhs = halfline(|u| kernel(u) * polar_weight(s, x, u), NearEnd::Smooth, PI, target)?;
            let rhs = log_power(|y| y.powf(x) / ((1.0 + y) * (1.0 + y)), s - 1.0, target)?.scale(1.0 / gamma(s)?);
            Ok((lhs, rhs))
        }
        "eq58" => {
            let (a, s, x) = (p.f("a"), p.f("s"), p.f("x"));
            let lhs = halfline(|u| sinh_excess(a, u) * polar_weight(s, x, u), NearEnd::Smooth, PI - a, target)?;
            let rhs = log_power(|y| (a.sin() / quad_den(y, a) - a / ((1.0 + y) * (1.0 + y))) * y.powf(x), s - 1.0, target)?
                .scale(1.0 / gamma(s)?);
            Ok((lhs, rhs))
        }
        "eq60" => {
            let a = p.f("a");
            let lhs = halfline(|u| sinh_excess(a, u) / u, NearEnd::Smooth, PI - a, target)?;
            let rhs = loglog_unit(|y| a.sin() / quad_den(y, a) - a / ((1.0 + y) * (1.0 + y)), target)?.scale(-2.0 / PI);
            Ok((lhs, rhs))
        }
        "eq61" => {
            let a = p.f("a");
            let h = a / (2.0 * PI);
            let lhs = halfline(|u| cosh_excess(a, u), NearEnd::Smooth, PI - a, target)?;
            let rhs = (2.0 * digamma(0.5)? - digamma(0.5 + h)? - digamma(0.5 - h)?) / (2.0 * PI);
            Ok((lhs, exact(rhs)?))
        }
        "eq61_K" => {
            let a = p.f("a");
            let h = a / (2.0 * PI);
            let lhs = halfline(|u| sinh_excess(a, u) / u, NearEnd::Smooth, PI - a, target)?;
            Ok((lhs, exact(a / PI * digamma(0.5)? - (lgamma(0.5 + h) - lgamma(0.5 - h)))?))
        }
        "eq62" => {
            let a = p.f("a");
            let h = a / (2.0 * PI);
            let lhs = loglog_unit(|y| a.sin() / quad_den(y, a), target)?;
            let j = 0.5 * digamma(0.5)? + 0.5 * (2.0 * PI).ln();
            let rhs = a * j - 0.5 * a * digamma(0.5)? + FRAC_PI_2 * (lgamma(0.5 + h) - lgamma(0.5 - h));
            Ok((lhs, exact(rhs)?))
        }
        "eq62_aux" => Ok((
            loglog_unit(|y| 1.0 / ((1.0 + y) * (1.0 + y)), target)?,
            exact(0.5 * digamma(0.5)? + 0.5 * (2.0 * PI).ln())?,
        )),
        "eq63" => {
            let a = p.f("a");
            let h = a / (2.0 * PI);
            let lhs = loglog_unit(|y| 1.0 / quad_den(y, a), target)?;
            let rhs = PI / (2.0 * a.sin()) * (a / PI * (2.0 * PI).ln() + lgamma(0.5 + h) - lgamma(0.5 - h));
            Ok((lhs, exact(rhs)?))
        }
        "eq64" => {
            let a = p.f("a");
            let h = a / (2.0 * PI);
            let rhs = FRAC_PI_2 * (lgamma(0.5 - h) - lgamma(0.5 + h)) - 0.5 * a * (C + (2.0 * PI).ln());
            Ok((sin_log_series(a)?, exact(rhs)?))
        }
        "eq65" => {
            let a = p.f("a");
            let h = a / (2.0 * PI);
            let rhs = FRAC_PI_2 * (lgamma(h) - lgamma(1.0 - h)) - 0.5 * (PI - a) * (C + (2.0 * PI).ln());
            Ok((sine_series(a, 1.0, true)?, exact(rhs)?))
        }
        "eq66" => {
            let a = p.f("a");
            let h = a / (2.0 * PI);
            let rhs = FRAC_PI_2 * (lgamma(h) - lgamma(0.5 + h)) - FRAC_PI_4 * (C + (2.0 * PI / (0.5 * a).tan()).ln());
            Ok((odd_sine_series(a, 1.0, true)?, exact(rhs)?))
        }
        "eq64_ex1" => Ok((sin_log_series(FRAC_PI_2)?, exact(beta_log_value())?)),
        "eq64_ex1_product" => Ok((
            exp_of(sin_log_series(FRAC_PI_2)?),
            exact((PI * (-C).exp() / gamma(0.75)?.powi(4)).powf(FRAC_PI_4))?,
        )),
        "eq64_ex2a" => Ok((sin_log_series(FRAC_PI_3)?.scale(1.0 / FRAC_PI_3.sin()), exact(mod3_log_value())?)),
        "eq64_ex2a_product" => Ok((
            exp_of(sin_log_series(FRAC_PI_3)?.scale(1.0 / FRAC_PI_3.sin())),
            exact((gamma(1.0 / 3.0)? * (-C / 3.0).exp() / (gamma(2.0 / 3.0)? * (2.0 * PI).cbrt())).powf(PI / 3f64.sqrt()))?,
        )),
        "eq65_ex2b" => Ok((sine_series(FRAC_PI_3, 1.0, true)?.scale(1.0 / FRAC_PI_3.sin()), exact(mod6_pair_log_value())?)),
        "eq65_ex2b_product" => Ok((
            exp_of(sine_series(FRAC_PI_3, 1.0, true)?.scale(1.0 / FRAC_PI_3.sin())),
            exact(((2.0 * PI).cbrt() * (-2.0 * C / 3.0).exp() / gamma(5.0 / 6.0)?.powi(2)).powf(PI / 3f64.sqrt()))?,
        )),
        "eq66_ex2c" => Ok((odd_sine_series(FRAC_PI_3, 1.0, true)?.scale(1.0 / FRAC_PI_3.sin()), exact(mod6_log_value())?)),
        "eq66_ex2c_product" => Ok((
            exp_of(odd_sine_series(FRAC_PI_3, 1.0, true)?.scale(1.0 / FRAC_PI_3.sin())),
            exact(((2.0 * PI).sqrt() * (-0.5 * C).exp() / (3f64.powf(0.25) * gamma(2.0 / 3.0)? * gamma(5.0 / 6.0)?)).powf(PI / 3f64.sqrt()))?,
        )),
        "eq66_ex3" => Ok((odd_sine_series(FRAC_PI_4, 1.0, true)?.scale(1.0 / FRAC_PI_4.sin()), exact(mod8_log_value()?)?)),
        "eq66_ex3_product" => Ok((
            exp_of(odd_sine_series(FRAC_PI_4, 1.0, true)?.scale(1.0 / FRAC_PI_4.sin())),
            exact(mod8_log_value()?.exp())?,
        )),
        "eq67" => cosh_frullani_form(&p, target),
        "eq69" => {
            let (a, x) = (p.angle()?, p.f("x"));
            if x < 0.5 {
                return Err(out_of_domain("the bridge needs x >= 1/2"));
            }
            let lhs = frakl_integral(a.value(), x, target)?.scale(2.0 * (0.5 * a.value()).sin());
            Ok((lhs, exact(l_closed(a, x + 0.5)? + l_closed(a, x - 0.5)?)?))
        }
        "eq70" => {
            let a = p.angle()?;
            Ok((frakl_integral(a.value(), p.f("x"), target)?, exact(frakl_closed(a, p.f("x"))?)?))
        }
        "eq71" => {
            let a = p.angle()?;
            let (m, n) = (a.m() as i32, a.n() as i32);
            let lhs = loglog_unit(|z| (z.powi(n - m - 1) + z.powi(n + m - 1)) / (1.0 + z.powi(2 * n)), target)?;
            Ok((lhs, exact(forms::cosh_loglog_integral(a))?))
        }
        "eq72" => Ok((
            loglog_unit(|z| 1.0 / (1.0 - z + z * z), target)?,
            exact(2.0 * PI / 3f64.sqrt() * (5.0 / 6.0 * (2.0 * PI).ln() - lgamma(1.0 / 6.0)))?,
        )),
        "eq74_sec" => {
            let a = p.angle()?;
            if a.parity() != Parity::Odd {
                return Err(out_of_domain("the secant sum holds for m+n odd"));
            }
            Ok((exact(1.0 / (0.5 * a.value()).cos())?, exact((1..=a.n()).map(|i| a.c(i)).sum())?))
        }
        "eq74" => frakl_via_root_factor(&p, target),
        "eq75" => relation(&p, RelationKind::CoshRecurrence, target),
        "eq76" => relation(&p, RelationKind::CoshReflection, target),
        "eq77" => relation(&p, RelationKind::CoshEvenRecurrence, target),
        "eq78" => relation(&p, RelationKind::CoshEvenReflection, target),
        "eq79" => relation(&p, RelationKind::CoshHalfPoint, target),
        "eq80" => relation(&p, RelationKind::CoshMultiplication, target),
        "eq81" => {
            let (a, s, x) = (p.f("a"), p.f("s"), p.f("x"));
            let lhs = halfline(|u| cosh_ratio(a, u) * polar_weight(s, x, u), NearEnd::Smooth, PI - a, target)?;
            let rhs = log_power(|y| y.powf(x - 0.5) * (1.0 + y) / quad_den(y, a), s - 1.0, target)?.scale((0.5 * a).cos() / gamma(s)?);
            Ok((lhs, rhs))
        }
        "eq82" => {
            let (a, s) = (p.f("a"), p.f("s"));
            let lhs = halfline(|u| cosh_ratio(a, u) * u.powf(-s), NearEnd::LogSingular, PI - a, target)?;
            let pref = 2f64.powf(s) * (0.5 * a).cos() / (cos_half(s)? * gamma(s)?);
            Ok((lhs, log_power(|y| squared_kernel(y, a), s - 1.0, target)?.scale(pref)))
        }
        "eq83" => {
            let (ang, s) = (p.angle()?, p.f("s"));
            let (m, n, a) = (ang.m() as f64, ang.n() as f64, ang.value());
            let lhs = halfline(
                |t| (-(n - m) * t).exp() * (1.0 + (-2.0 * m * t).exp()) / (1.0 + (-2.0 * n * t).exp()) * t.powf(-s),
                NearEnd::LogSingular,
                n - m,
                target,
            )?;
            let pref = 2f64.powf(s) * (PI / n).powf(1.0 - s) * (0.5 * a).cos() / (cos_half(s)? * gamma(s)?);
            Ok((lhs, log_power(|y| squared_kernel(y, a), s - 1.0, target)?.scale(pref)))
        }
        "eq85" => feq(FeqFamily::QIntegral, &p),
        "eq86" => {
            let s = p.f("s");
            let lhs = log_power(|y| 1.0 / (1.0 - y + y * y), -s, target)?;
            let pref = (2.0 * PI / 3.0).powf(1.0 - s) * FRAC_PI_3.sin() * 2f64.powf(s) / (cos_half(s)? * gamma(s)?);
            let rhs = log_power(|y| (1.0 + y * y) / (1.0 + y * y + y.powi(4)), s - 1.0, target)?.scale(pref);
            Ok((lhs, rhs))
        }
        "eq87" => {
            let s = p.f("s");
            let lhs = log_power(|y| 1.0 / (1.0 + y + y * y), s - 1.0, target)?.scale(1.0 + 2f64.powf(s - 1.0));
            let rhs = lser(&characters::mod6_pair(), s)?.scale(2f64.powf(s - 1.0) * gamma(s)?);
            Ok((lhs, rhs))
        }
        "eq89" => feq(FeqFamily::RIntegral, &p),
        "eq90a" => {
            let s = p.f("s");
            let lhs = log_ratio_pair(|y| (1.0 + y * y) / (1.0 + y.powi(4)), s, target)?;
            let rhs = (PI / 4.0).ln() - FRAC_PI_2 * (0.5 * s * PI).tan() + digamma(s)?;
            Ok((lhs, exact(rhs)?))
        }
        "eq90b" => {
            let s = p.f("s");
            let lhs = log_ratio_pair(|y| 1.0 / (1.0 - y + y * y), s, target)?;
            let tail = 2f64.ln() * 2f64.powf(s - 1.0) / ((1.0 + 2f64.powf(s)) * (1.0 + 2f64.powf(s - 1.0)));
            let rhs = (PI / 3.0).ln() - FRAC_PI_2 * (0.5 * s * PI).tan() + digamma(s)? - tail;
            Ok((lhs, exact(rhs)?))
        }
        "eq91a" => half_order_integral(eighth_kernel, (PI / 16.0).ln(), &characters::mod8(), target),
        "eq91b" => half_order_integral(
            sixth_kernel,
            (PI / 3.0).ln() - (5.0 - 2.0 * 2f64.sqrt()) * 2f64.ln(),
            &characters::mod6_pair(),
            target,
        ),
        "eq92a" => half_order_series(&characters::mod8(), eighth_kernel, PI.ln(), false, target),
        "eq92b" => half_order_series(
            &characters::mod6_pair(),
            sixth_kernel,
            2.0 * 2f64.sqrt() * 2f64.ln() + (PI / 6.0).ln(),
            false,
            target,
        ),
        "eq93" => {
            let (a, s) = (p.f("a"), p.f("s"));
            let lhs = halfline(|u| cosh_ratio(a, u) * u.powf(-s), NearEnd::LogSingular, PI - a, target)?;
            let rhs = lattice(&cosine_lattice(a), 4.0 * PI, 1.0 - s)?.scale(gamma(1.0 - s)?);
            Ok((lhs, rhs))
        }
        "eq94" => {
            let (a, s) = (p.f("a"), p.f("s"));
            let lhs = log_power(|y| (0.5 * a).cos() * squared_kernel(y, a), s - 1.0, target)?;
            Ok((lhs, alt_half_cosine_series(a, s, false)?.scale(gamma(s)?)))
        }
        "eq95" => {
            let (a, s) = (p.f("a"), p.f("s"));
            let lhs = lattice(&cosine_lattice(a), 4.0 * PI, s)?;
            let rhs = alt_half_cosine_series(a, 1.0 - s, false)?.scale(2f64.powf(1.0 - s) / (sin_half(s)? * gamma(s)?));
            Ok((lhs, rhs))
        }
        "eq96" => {
            let (a, s) = (p.f("a"), p.f("s"));
            let terms = [(1.0, a), (1.0, 2.0 * PI - a), (-1.0, 2.0 * PI + a), (-1.0, 4.0 * PI - a)];
            let lhs = lattice(&terms, 4.0 * PI, s)?;
            let rhs = half_sine_series(a, 1.0 - s)?.scale(2f64.powf(1.0 - s) / (sin_half(s)? * gamma(s)?));
            Ok((lhs, rhs))
        }
        "eq97a" => feq(FeqFamily::CosTwisted(p.angle()?), &p),
        "eq97b" => feq(FeqFamily::SinTwisted(p.angle()?), &p),
        "eq98" => feq(FeqFamily::Mod12, &p),
        "eq98_aux" => {
            let s = p.f("s");
            let lhs = lser(&characters::beta(), s)?.scale(1.0 + 3f64.powf(-s));
            Ok((lhs, mellin(&characters::mod12(), s, target)?))
        }
        "eq99" => {
            let a = p.f("a");
            let lhs = halfline(|u| cosh_ratio(a, u), NearEnd::Smooth, PI - a, target)?;
            Ok((lhs, exact(0.5 / (0.5 * a).cos())?))
        }
        "eq100" => {
            let a = p.angle()?;
            Ok((llser(&patterns::cosine_twisted(a)?, 1.0)?, exact(forms::cosine_twisted_log_series(a))?))
        }
        "eq101" => {
            let a = p.angle()?;
            Ok((llser(&patterns::sine_twisted(a)?, 1.0)?, exact(forms::sine_twisted_log_series(a))?))
        }
        "eq101_ex" => Ok((llser(&characters::mod8(), 1.0)?, exact(mod8_log_value()?)?)),
        "eq101_ex_product" => Ok((exp_of(llser(&characters::mod8(), 1.0)?), exact(mod8_log_value()?.exp())?)),
        "eq101_ex3a" => Ok((llser(&characters::mod6_pair(), 1.0)?, exact(mod6_pair_log_value())?)),
        "eq101_ex3a_product" => Ok((
            exp_of(llser(&characters::mod6_pair(), 1.0)?),
            exact(((2.0 * PI).cbrt() * (-2.0 * C / 3.0).exp() / gamma(5.0 / 6.0)?.powi(2)).powf(PI / 3f64.sqrt()))?,
        )),
        "eq101_ex3b" => {
            let a = RationalAngle::new(1, 3)?;
            Ok((llser(&characters::mod12(), 1.0)?, exact(forms::sine_twisted_log_series(a))?))
        }
        "eq101_ex3b_product" => {
            let a = RationalAngle::new(1, 3)?;
            Ok((exp_of(llser(&characters::mod12(), 1.0)?), exact(forms::sine_twisted_log_series(a).exp())?))
        }
        "ps_formula" => {
            let a = p.f("a");
            let rhs = FRAC_PI_4 * (PI.ln() - C - (0.5 * a).cos().ln())
                - FRAC_PI_2 * (lgamma(0.75 + a / (4.0 * PI)) + lgamma(0.75 - a / (4.0 * PI)));
            Ok((alt_half_cosine_series(a, 1.0, true)?, exact(rhs)?))
        }
        _ => Err(RegistryError::UnknownId(id.to_string())),
    }
}

// ---- worked-example constants

/// 1 - log3/3 + log5/5 - ...
fn beta_log_value() -> f64 {
    FRAC_PI_4 * (PI.ln() - C) - PI * lgamma(0.75)
}

/// -log2/2 + log4/4 - log5/5 + ...
fn mod3_log_value() -> f64 {
    PI / 3f64.sqrt() * (lgamma(1.0 / 3.0) - lgamma(2.0 / 3.0)) - PI / (3.0 * 3f64.sqrt()) * (C + (2.0 * PI).ln())
}

/// -log5/5 + log7/7 - log11/11 + ...
fn mod6_log_value() -> f64 {
    PI / (2.0 * 3f64.sqrt()) * ((2.0 * PI / 3f64.sqrt()).ln() - C - 2.0 * (lgamma(5.0 / 6.0) + lgamma(2.0 / 3.0)))
}

/// log2/2 - log4/4 - log5/5 + log7/7 + ...
fn mod6_pair_log_value() -> f64 {
    PI / (3.0 * 3f64.sqrt()) * ((2.0 * PI).ln() - 2.0 * C) - 2.0 * PI / 3f64.sqrt() * lgamma(5.0 / 6.0)
}

/// log3/3 - log5/5 - log7/7 + ...
fn mod8_log_value() -> Result<f64, RegistryError> {
    let inner = 0.25 * 2f64.ln() + lgamma(0.125) + lgamma(0.375) - 0.5 * C - 1.5 * (2.0 * PI).ln();
    Ok(PI / 2f64.sqrt() * inner)
}

// ---- grouped evaluators

fn relation(p: &Params, kind: RelationKind, target: f64) -> Out {
    let angle = match kind.fixed_angle() {
        Some(a) => a,
        None => p.angle()?,
    };
    let x = if kind.uses_x() { p.f("x") } else { 0.0 };
    let r = kind.needs_multiplier().then(|| p.u("r"));
    let terms = relation_terms(kind, angle, x, r)?;
    let a = angle.value();
    let mut lhs = EvalResult::exact(terms.lhs_constant);
    for &(coeff, which, arg) in &terms.lhs {
        let v = match which {
            Transcendent::Sinh => l_integral(a, arg.abs(), target)?,
            Transcendent::Cosh => frakl_integral(a, arg.abs(), target)?,
        };
        lhs = lhs.add(v.scale(coeff));
    }
    Ok((lhs, exact(terms.rhs)?))
}

fn feq(family: FeqFamily, p: &Params) -> Out {
    Ok(feq_sides(family, p.f("s"))?)
}

/// The Frullani-type form of L(a,x), in t = log(1/y), against the defining
/// integral over u.
fn frullani_form(p: &Params, target: f64) -> Out {
    let (a, x) = (p.f("a"), p.f("x"));
    let (ta, ca) = ((0.5 * a).tan(), a.cos());
    // tan(a/2) D - 2 e^{-xt} sin a = tan(a/2) [em(2) - 2 em(x) + 2 cos a (em(1) - em(x))]
    // with em(k) = e^{-kt} - 1 and D = 1 + 2 e^{-t} cos a + e^{-2t}
    let f = |t: f64| {
        let em = |k: f64| (-k * t).exp_m1();
        let w = (-t).exp();
        let d = 1.0 + 2.0 * w * ca + w * w;
        let num = em(2.0) - 2.0 * em(x) + 2.0 * ca * (em(1.0) - em(x));
        ta * num / d * w / t
    };
    let near = if x == 0.0 { NearEnd::LogSingular } else { NearEnd::Smooth };
    Ok((halfline(f, near, 1.0, target)?, l_integral(a, x, target)?))
}

/// Same for FL, against its closed form.
fn cosh_frullani_form(p: &Params, target: f64) -> Out {
    let (ang, x) = (p.angle()?, p.f("x"));
    let a = ang.value();
    let (ch, ca) = ((0.5 * a).cos(), a.cos());
    // cos(a/2) [sec(a/2) D - 2 cos(a/2) v (1+w)], v = e^{-(x-1/2)t}, written
    // through em(k) = e^{-kt} - 1 so the cancellation at t -> 0 is exact
    let f = |t: f64| {
        if t > 700.0 {
            return 0.0;
        }
        let w = (-t).exp();
        let e1 = (-(x - 0.5) * t).exp_m1();
        let ew = (-t).exp_m1();
        let d = 1.0 + 2.0 * w * ca + w * w;
        let num = -e1 + w * (ew - e1) + ca * (ew - e1 - w * e1);
        num / (ch * d) * w / t
    };
    let lhs = halfline(f, NearEnd::Smooth, (x + 0.5).min(1.0), target)?;
    Ok((lhs, exact(frakl_closed(ang, x)?)?))
}

/// int_0^1 y^r (1 - y^{s-r}) / (log(1/y) (1 + 2y cos a + y^2)) dy.
fn log_difference_integral(p: &Params, target: f64) -> Out {
    let (ang, r, s) = (p.angle()?, p.f("r"), p.f("s"));
    if !(s > r) {
        return Err(out_of_domain("need s > r"));
    }
    let a = ang.value();
    let lhs = halfline(
        |t| {
            let w = (-t).exp();
            (-r * t).exp() * -(-(s - r) * t).exp_m1() / t / (1.0 + 2.0 * w * a.cos() + w * w) * w
        },
        NearEnd::Smooth,
        1.0 + r,
        target,
    )?;
    let n = ang.n() as f64;
    let sum: f64 = match ang.parity() {
        Parity::Odd => (1..ang.n())
            .map(|i| {
                let t = i as f64;
                let q = 2.0 * n;
                ang.s(i) * (lgamma((s + n + t) / q) + lgamma((r + t) / q) - lgamma((r + n + t) / q) - lgamma((s + t) / q))
            })
            .sum(),
        Parity::Even => (1..=ang.half_range())
            .map(|i| {
                let t = i as f64;
                ang.s(i) * (lgamma((s + n - t) / n) + lgamma((r + t) / n) - lgamma((r + n - t) / n) - lgamma((s + t) / n))
            })
            .sum(),
    };
    Ok((lhs, exact(sum / a.sin())?))
}

/// int_0^inf (e^{-z} - cos(uz))/z dz by interval-wise quadrature with an
/// accelerated alternating tail.
fn frullani_cosine(p: &Params, target: f64) -> Out {
    let u = p.f("u");
    let f = |z: f64| {
        let h = (0.5 * u * z).sin();
        ((-z).exp_m1() + 2.0 * h * h) / z
    };
    let hint = EndpointHint::new(NearEnd::Smooth, FarEnd::Oscillatory { first_zero: FRAC_PI_2 / u, half_period: PI / u });
    Ok((integrate_halfline(f, hint, target)?, exact(u.ln())?))
}

/// L(a,x) for m+n odd as 2 sum s_i log(sqrt(2n) G((x+n+i)/2n)/G((x+i)/2n)),
/// the form that absorbs tan(a/2) through the finite sine sum.
fn l_via_root_factor(p: &Params, target: f64) -> Out {
    let (ang, x) = (p.angle()?, p.f("x"));
    if ang.parity() != Parity::Odd {
        return Err(out_of_domain("this form holds for m+n odd"));
    }
    let n = ang.n() as f64;
    let rhs: f64 = (1..ang.n())
        .map(|i| {
            let t = i as f64;
            2.0 * ang.s(i) * (0.5 * (2.0 * n).ln() + lgamma((x + n + t) / (2.0 * n)) - lgamma((x + t) / (2.0 * n)))
        })
        .sum();
    Ok((l_integral(ang.value(), x, target)?, exact(rhs)?))
}

/// FL(a,x) for m+n odd in the same root-factor form.
fn frakl_via_root_factor(p: &Params, target: f64) -> Out {
    let (ang, x) = (p.angle()?, p.f("x"));
    if ang.parity() != Parity::Odd {
        return Err(out_of_domain("this form holds for m+n odd"));
    }
    let n = ang.n() as f64;
    let rhs: f64 = (1..=ang.n())
        .map(|i| {
            let h = x + i as f64 - 0.5;
            2.0 * ang.c(i) * (0.5 * (2.0 * n).ln() + lgamma(0.5 + h / (2.0 * n)) - lgamma(h / (2.0 * n)))
        })
        .sum();
    Ok((frakl_integral(ang.value(), x, target)?, exact(rhs)?))
}

/// 1/(e^x + 1 + e^{-x})
fn third_kernel(x: f64) -> f64 {
    let w = (-x).exp();
    w / (1.0 + w + w * w)
}

/// 1/(e^x + e^{-x})
fn quarter_kernel(x: f64) -> f64 {
    let w = (-x).exp();
    w / (1.0 + w * w)
}

/// (e^x + e^{-x})/(e^{2x} + e^{-2x})
fn eighth_kernel(x: f64) -> f64 {
    let w = (-x).exp();
    w * (1.0 + w * w) / (1.0 + w.powi(4))
}

/// 1/(e^x - 1 + e^{-x})
fn sixth_kernel(x: f64) -> f64 {
    let w = (-x).exp();
    w / (1.0 - w + w * w)
}

/// (1 + y^2)/(1 + 2 y^2 cos a + y^4)
fn squared_kernel(y: f64, a: f64) -> f64 {
    let y2 = y * y;
    (1.0 + y2) / (1.0 + 2.0 * y2 * a.cos() + y2 * y2)
}

/// Lattice of the cosh expansion: +(pi -+ a), -(3 pi -+ a), period 4 pi.
fn cosine_lattice(a: f64) -> [(f64, f64); 4] {
    [(1.0, PI - a), (1.0, PI + a), (-1.0, 3.0 * PI - a), (-1.0, 3.0 * PI + a)]
}

/// (sinh(au) - au)/sinh(pi u), accurate near u = 0 and free of overflow.
fn sinh_excess(a: f64, u: f64) -> f64 {
    if u == 0.0 {
        return 0.0;
    }
    let au = a * u;
    let den = -(-2.0 * PI * u).exp_m1();
    if au > 20.0 {
        return ((-(PI - a) * u).exp() - 2.0 * au * (-PI * u).exp()) / den;
    }
    let odd = if au.abs() < 0.1 {
        // sinh(z) - z = z^3/6 (1 + z^2/20 + z^4/840 + z^6/60480)
        let z2 = au * au;
        au * z2 / 6.0 * (1.0 + z2 / 20.0 * (1.0 + z2 / 42.0 * (1.0 + z2 / 72.0)))
    } else {
        au.sinh() - au
    };
    odd * 2.0 * (-PI * u).exp() / den
}

/// (cosh(au) - 1)/sinh(pi u)
fn cosh_excess(a: f64, u: f64) -> f64 {
    if u == 0.0 {
        return 0.0;
    }
    let au = a * u;
    let den = -(-2.0 * PI * u).exp_m1();
    if au > 20.0 {
        return ((-(PI - a) * u).exp() - 2.0 * (-PI * u).exp()) / den;
    }
    let sh = (0.5 * au).sinh();
    4.0 * sh * sh * (-PI * u).exp() / den
}

/// F(s)/G(s) + F(1-s)/G(1-s) with G = int (log 1/y)^{s-1} k(y) and F its
/// s-derivative, all by quadrature in t = log(1/y).
fn digamma_relation(p: &Params, k: impl Fn(f64) -> f64 + Copy, log_const: f64, target: f64) -> Out {
    let s = p.f("s");
    let lhs = log_ratio_pair(k, s, target)?;
    let rhs = log_const + digamma(s)? - FRAC_PI_2 * (0.5 * s * PI).tan();
    Ok((lhs, exact(rhs)?))
}

fn log_ratio_pair(k: impl Fn(f64) -> f64 + Copy, s: f64, target: f64) -> Value {
    let ratio = |s: f64| -> Value {
        let g = log_power(k, s - 1.0, target)?;
        let f = halfline(
            |t| {
                let y = (-t).exp();
                k(y) * t.powf(s - 1.0) * t.ln() * y
            },
            NearEnd::LogSingular,
            1.0,
            target,
        )?;
        Ok(quotient(f, g))
    };
    Ok(ratio(s)?.add(ratio(1.0 - s)?))
}

/// int log x K(x)/sqrt x against c * int K(x)/sqrt x, the latter as
/// sqrt(pi) times the half-order series of K's coefficients.
fn half_order_integral(kernel: fn(f64) -> f64, log_const: f64, chi: &PeriodicCoefficients, target: f64) -> Out {
    let lhs = halfline(|x| x.ln() / x.sqrt() * kernel(x), NearEnd::LogSingular, 1.0, target)?;
    let c = 0.5 * (log_const - FRAC_PI_2 - C);
    Ok((lhs, lser(chi, 0.5)?.scale(c * PI.sqrt())))
}

/// sum chi(k) log k/sqrt k against c * (1/sqrt pi) int K(x)/sqrt x, or the
/// exponentials of both sides.
fn half_order_series(chi: &PeriodicCoefficients, kernel: fn(f64) -> f64, log_const: f64, exponentiate: bool, target: f64) -> Out {
    let lhs = llser(chi, 0.5)?;
    let c = 0.5 * (FRAC_PI_2 - C - log_const);
    let rhs = halfline(|x| kernel(x) / x.sqrt(), NearEnd::LogSingular, 1.0, target)?.scale(c / PI.sqrt());
    Ok(if exponentiate { (exp_of(lhs), exp_of(rhs)) } else { (lhs, rhs) })
}

/// sum chi(k)/sqrt k against (1/sqrt pi) int K(x)/sqrt x.
fn half_order_constant(chi: &PeriodicCoefficients, kernel: fn(f64) -> f64, target: f64) -> Out {
    let rhs = halfline(|x| kernel(x) / x.sqrt(), NearEnd::LogSingular, 1.0, target)?.scale(1.0 / PI.sqrt());
    Ok((lser(chi, 0.5)?, rhs))
}

/// sqrt(pi) sum chi(i) (log i + 2 log 2 + C)/sqrt i.
fn log_shifted_series(chi: &PeriodicCoefficients) -> Value {
    let shift = 2.0 * 2f64.ln() + C;
    Ok(llser(chi, 0.5)?.add(lser(chi, 0.5)?.scale(shift)).scale(PI.sqrt()))
}

fn lattice_vs_twisted(lhs: EvalResult, series: EvalResult, s: f64) -> Out {
    Ok((lhs, series.scale(1.0 / (sin_half(s)? * gamma(s)?))))
}
