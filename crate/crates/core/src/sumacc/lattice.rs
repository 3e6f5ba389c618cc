use super::{SeriesError, SeriesValue};

/// B_{2k} / (2k)!, k = 1..10
const BERNOULLI_OVER_FACT: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
    -3617.0 / 10_670_622_842_880_000.0,
    43_867.0 / 5_109_094_217_170_944_000.0,
    -174_611.0 / 802_857_662_698_291_200_000.0,
];

/// Head lengths, in periods, used for cross-validation.
const CUTOFFS: [u64; 3] = [24, 32, 48];
/// Spread between cutoffs above which the result is flagged unconverged.
const SPREAD_LIMIT: f64 = 1e-9;
/// Implicit absolute target of the lattice engine.
pub const LATTICE_TARGET: f64 = 1e-12;

/// Power weight t^{-s}, optionally times log t.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Weight {
    pub s: f64,
    pub log: bool,
}

impl Weight {
    pub fn eval(self, t: f64) -> f64 {
        let p = t.powf(-self.s);
        if self.log {
            p * t.ln()
        } else {
            p
        }
    }

    /// t^j f^{(j)}(t) / f-scale, for j = 0..len, as t^{-s} P_j [log t - H_j] or t^{-s} P_j.
    pub fn scaled_derivatives(self, t: f64, len: usize) -> Vec<f64> {
        let base = t.powf(-self.s);
        let lt = t.ln();
        let mut out = Vec::with_capacity(len);
        let mut p = 1.0;
        let mut h = 0.0;
        for j in 0..len {
            let v = if self.log { base * p * (lt - h) } else { base * p };
            out.push(v);
            let l = j as f64;
            p *= -self.s - l;
            h += 1.0 / (self.s + l);
        }
        out
    }

    /// Antiderivative. With `centered`, shifted by a t-independent constant
    /// so that it stays finite and well conditioned as s -> 1; only valid
    /// inside mean-zero combinations.
    fn antiderivative(self, t: f64, centered: bool) -> f64 {
        let lt = t.ln();
        let sigma = 1.0 - self.s;
        if centered {
            let z = sigma * lt;
            if self.log {
                lt * lt * expm1_ratio_derivative(z)
            } else {
                lt * expm1_ratio(z)
            }
        } else if self.log {
            let q = t.powf(sigma);
            q * (lt / sigma - 1.0 / (sigma * sigma))
        } else {
            t.powf(sigma) / sigma
        }
    }
}

/// (e^z - 1)/z
fn expm1_ratio(z: f64) -> f64 {
    if z.abs() < 1e-8 {
        1.0 + 0.5 * z
    } else {
        z.exp_m1() / z
    }
}

/// d/dz (e^z - 1)/z = (e^z (z - 1) + 1)/z^2
fn expm1_ratio_derivative(z: f64) -> f64 {
    if z.abs() < 1e-3 {
        0.5 + z / 3.0 + z * z / 8.0 + z * z * z / 30.0 + z.powi(4) / 144.0
    } else {
        (z.exp_m1() * (z - 1.0) + z) / (z * z)
    }
}

/// One residue class c * f(j P + offset), j >= 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeTerm {
    pub coeff: f64,
    pub offset: f64,
}

/// sum_{j>=0} sum_r c_r f(j P + o_r) with f(t) = t^{-s} (or t^{-s} log t),
/// by a direct head plus an Euler-Maclaurin tail on each residue class.
///
/// Mean-zero coefficients make the series convergent for every s > 0;
/// otherwise s > 1 is required.
pub fn shifted_lattice_sum(terms: &[LatticeTerm], period: f64, s: f64, log_weight: bool) -> Result<SeriesValue, SeriesError> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(SeriesError::Domain(format!("s must be positive and finite, got {s}")));
    }
    if !(period > 0.0 && period.is_finite()) {
        return Err(SeriesError::InvalidArgument(format!("period must be positive, got {period}")));
    }
    if terms.is_empty() || terms.iter().all(|t| t.coeff == 0.0) {
        return Err(SeriesError::InvalidArgument("no nonzero coefficient".into()));
    }
    if terms.iter().any(|t| !(t.offset > 0.0) || !t.coeff.is_finite()) {
        return Err(SeriesError::InvalidArgument("offsets must be positive and coefficients finite".into()));
    }
    let total: f64 = terms.iter().map(|t| t.coeff).sum();
    let scale: f64 = terms.iter().map(|t| t.coeff.abs()).sum();
    let centered = total.abs() <= 1e-12 * scale;
    if !centered && s <= 1.0 {
        return Err(SeriesError::Domain(format!("coefficients are not mean-zero, series diverges at s = {s}")));
    }
    let weight = Weight { s, log: log_weight };

    let mut values = [0.0; 3];
    let mut error = 0.0;
    let mut evaluations = 0u64;
    let mut head = Neumaier::default();
    let mut head_sq = 0.0;
    let mut done = 0u64;
    for (slot, &n) in CUTOFFS.iter().enumerate() {
        for j in done..n {
            for t in terms {
                let v = t.coeff * weight.eval(j as f64 * period + t.offset);
                head.add(v);
                head_sq += v * v;
            }
        }
        evaluations += (n - done) * terms.len() as u64;
        done = n;
        let (tail, tail_err, tail_abs) = em_tail(terms, period, n, weight, centered);
        values[slot] = head.sum() + tail;
        error = tail_err + 4.0 * f64::EPSILON * (head.sum().abs() + head_sq.sqrt() + tail_abs);
    }
    let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let spread = hi - lo;
    let estimate = spread + error;
    Ok(SeriesValue {
        value: values[2],
        abs_error_estimate: estimate,
        evaluations,
        converged: spread <= SPREAD_LIMIT && estimate <= LATTICE_TARGET.max(1e-14 * values[2].abs()),
    })
}

/// Tail sum_{j>=n}; returns (value, remainder estimate, magnitude for roundoff).
fn em_tail(terms: &[LatticeTerm], period: f64, n: u64, weight: Weight, centered: bool) -> (f64, f64, f64) {
    let k_max = BERNOULLI_OVER_FACT.len();
    let mut integral = 0.0;
    let mut half = 0.0;
    let mut corrections = vec![0.0; k_max];
    let mut magnitude = 0.0;
    for t in terms {
        let x = n as f64 * period + t.offset;
        let big = t.coeff * weight.antiderivative(x, centered) / period;
        integral -= big;
        magnitude += big.abs();
        let d = weight.scaled_derivatives(x, 2 * k_max);
        half += 0.5 * t.coeff * d[0];
        let ratio = period / x;
        let mut pw = ratio; // (P/x)^{2k-1}
        for (k, b) in BERNOULLI_OVER_FACT.iter().enumerate() {
            corrections[k] -= b * t.coeff * pw * d[2 * k + 1];
            pw *= ratio * ratio;
        }
    }
    let value = integral + half + corrections.iter().sum::<f64>();
    let last = corrections[k_max - 1].abs().max(corrections[k_max - 2].abs());
    (value, last, magnitude)
}

/// Compensated summation.
#[derive(Default, Clone, Copy)]
pub(crate) struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn sum(&self) -> f64 {
        self.sum + self.comp
    }
}
