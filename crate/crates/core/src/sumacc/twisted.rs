use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use super::lattice::{Neumaier, Weight};
use super::{SeriesError, SeriesValue};

/// Target of the optimally truncated tail expansion, in units of the
/// exponent r T / alpha.
const TAIL_EXPONENT: f64 = 42.0;
const MAX_ORDER: usize = 90;

/// sum_{k >= start} e^{i theta k} f(stride k + shift) with f(t) = t^{-s}
/// (or t^{-s} log t), theta not a multiple of 2 pi.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwistedSeries {
    pub theta: f64,
    pub stride: f64,
    pub shift: f64,
    pub start: u64,
    pub s: f64,
    pub log_weight: bool,
}

/// Complex value of a twisted series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwistedValue {
    pub value: Complex64,
    pub abs_error_estimate: f64,
    pub evaluations: u64,
    pub converged: bool,
}

impl TwistedValue {
    pub fn re(&self) -> SeriesValue {
        self.part(self.value.re)
    }

    pub fn im(&self) -> SeriesValue {
        self.part(self.value.im)
    }

    fn part(&self, value: f64) -> SeriesValue {
        SeriesValue {
            value,
            abs_error_estimate: self.abs_error_estimate,
            evaluations: self.evaluations,
            converged: self.converged,
        }
    }

    /// Multiplies by a unit-modulus or real constant.
    pub fn rotate(self, z: Complex64) -> Self {
        Self {
            value: self.value * z,
            abs_error_estimate: self.abs_error_estimate * z.norm(),
            ..self
        }
    }
}

/// Angular distance of theta to the nearest multiple of 2 pi.
fn distance_to_one(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    r.min(TAU - r)
}

/// Sum via a direct head and the Euler-Boole expansion of the tail:
/// sum_{k >= N} z^k g(k) = z^N sum_j b_j g^{(j)}(N), with
/// sum_j b_j t^j = 1/(1 - z e^t).
pub fn twisted_sum(spec: &TwistedSeries) -> Result<TwistedValue, SeriesError> {
    let TwistedSeries { theta, stride, shift, start, s, log_weight } = *spec;
    if !(s > 0.0 && s.is_finite()) {
        return Err(SeriesError::Domain(format!("s must be positive, got {s}")));
    }
    if !(stride > 0.0 && stride.is_finite() && shift.is_finite() && theta.is_finite()) {
        return Err(SeriesError::InvalidArgument("stride must be positive; theta and shift finite".into()));
    }
    if !(stride * start as f64 + shift > 0.0) {
        return Err(SeriesError::InvalidArgument("first argument of the weight must be positive".into()));
    }
    let r = distance_to_one(theta);
    if r < 1e-6 {
        return Err(SeriesError::Domain(format!("ratio e^(i {theta}) is too close to 1")));
    }
    let weight = Weight { s, log: log_weight };
    let n1 = start + (TAIL_EXPONENT / r).ceil() as u64 + 4;
    let n2 = n1 + (n1 - start) / 2 + 8;

    let mut head = (Neumaier::default(), Neumaier::default());
    let mut head_sq = 0.0;
    let mut values = [Complex64::new(0.0, 0.0); 2];
    let mut tail_err = 0.0f64;
    let mut k = start;
    for (slot, n) in [n1, n2].into_iter().enumerate() {
        while k < n {
            let w = weight.eval(stride * k as f64 + shift);
            let (sn, cs) = (theta * k as f64).sin_cos();
            head.0.add(w * cs);
            head.1.add(w * sn);
            head_sq += w * w;
            k += 1;
        }
        let (tail, err) = boole_tail(theta, stride, shift, n, weight);
        values[slot] = Complex64::new(head.0.sum(), head.1.sum()) + tail;
        tail_err = tail_err.max(err);
    }
    let spread = (values[1] - values[0]).norm();
    let roundoff = 8.0 * f64::EPSILON * (values[1].norm() + head_sq.sqrt() * ((n2 - start) as f64).sqrt());
    let estimate = spread + tail_err + roundoff;
    Ok(TwistedValue {
        value: values[1],
        abs_error_estimate: estimate,
        evaluations: n2 - start,
        converged: estimate <= super::LATTICE_TARGET,
    })
}

fn boole_tail(theta: f64, stride: f64, shift: f64, n: u64, weight: Weight) -> (Complex64, f64) {
    let z = Complex64::from_polar(1.0, theta);
    let t = stride * n as f64 + shift;
    let q = stride / t;
    let ratio = z / (Complex64::new(1.0, 0.0) - z);
    // c_j = b_j q^j, with b_0 = 1/(1-z), b_j = z/(1-z) sum_{k=1}^j b_{j-k}/k!
    let mut c: Vec<Complex64> = Vec::with_capacity(MAX_ORDER);
    c.push(Complex64::new(1.0, 0.0) / (Complex64::new(1.0, 0.0) - z));
    let d = weight.scaled_derivatives(t, MAX_ORDER);
    let mut sum = c[0] * d[0];
    // consecutive pairs are compared since every other coefficient can
    // vanish (z = -1)
    let mut last_mag = (c[0] * d[0]).norm();
    let mut prev_pair = f64::INFINITY;
    let mut last = f64::INFINITY;
    let mut rising = 0;
    for j in 1..MAX_ORDER {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut qk = 1.0;
        let mut fact = 1.0;
        for kk in 1..=j {
            qk *= q;
            fact *= kk as f64;
            acc += c[j - kk] * (qk / fact);
        }
        c.push(ratio * acc);
        let term = c[j] * d[j];
        let mag = term.norm();
        let pair = mag + last_mag;
        last_mag = mag;
        if pair > prev_pair {
            rising += 1;
            if rising >= 2 {
                break;
            }
        } else {
            rising = 0;
        }
        sum += term;
        last = pair;
        prev_pair = pair;
        if pair <= 1e-18 * sum.norm() {
            break;
        }
    }
    let zn = Complex64::from_polar(1.0, (theta * n as f64).rem_euclid(TAU));
    (zn * sum, last)
}

/// sum_{i>=1} (-1)^{i-1} sin(i a) log(i)/i for 0 < a < pi.
pub fn sin_log_series(a: f64) -> Result<SeriesValue, SeriesError> {
    if !(a > 0.0 && a < PI) {
        return Err(SeriesError::Domain(format!("a must lie in (0, pi), got {a}")));
    }
    // (-1)^{i-1} sin(ia) = -Im (-e^{ia})^i
    let v = twisted_sum(&TwistedSeries { theta: a + PI, stride: 1.0, shift: 0.0, start: 1, s: 1.0, log_weight: true })?;
    let mut out = v.im();
    out.value = -out.value;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_harmonic_via_twist() {
        let v = twisted_sum(&TwistedSeries { theta: PI, stride: 1.0, shift: 0.0, start: 1, s: 1.0, log_weight: false }).unwrap();
        // sum (-1)^k / k = -log 2
        assert!((v.value.re + 2f64.ln()).abs() < 1e-14, "{v:?}");
        assert!(v.value.im.abs() < 1e-14);
    }

    #[test]
    fn sine_series_closed_form() {
        // sum sin(k a)/k = (pi - a)/2 on (0, 2 pi)
        for a in [0.3, 1.0, 2.5, 5.0] {
            let v = twisted_sum(&TwistedSeries { theta: a, stride: 1.0, shift: 0.0, start: 1, s: 1.0, log_weight: false }).unwrap();
            assert!((v.value.im - 0.5 * (PI - a)).abs() < 1e-13, "a={a}: {v:?}");
        }
    }

    #[test]
    fn rejects_trivial_ratio() {
        let e = twisted_sum(&TwistedSeries { theta: TAU, stride: 1.0, shift: 0.0, start: 1, s: 1.0, log_weight: false });
        assert!(matches!(e, Err(SeriesError::Domain(_))));
        assert!(sin_log_series(PI).is_err());
    }
}
