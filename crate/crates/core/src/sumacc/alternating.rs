use super::{SeriesError, SeriesValue};

const WINDOW: usize = 12;
const MAX_START: usize = 64;
const N_MIN: usize = 12;
const N_MAX: usize = 60;

/// Sum of an eventually alternating series with decreasing magnitudes,
/// accelerated with the Cohen-Villegas-Zagier weights.
///
/// `term(i)` is called for i = 1, 2, ...
pub fn alternating_sum<F>(term: F, target_abs_error: f64) -> Result<SeriesValue, SeriesError>
where
    F: Fn(u64) -> f64,
{
    if !(target_abs_error > 0.0) {
        return Err(SeriesError::InvalidArgument(format!("target must be positive, got {target_abs_error}")));
    }
    let mut terms: Vec<f64> = Vec::new();
    let get = |i: usize, terms: &mut Vec<f64>| -> Result<f64, SeriesError> {
        while terms.len() <= i {
            let k = terms.len() as u64 + 1;
            let v = term(k);
            if !v.is_finite() {
                return Err(SeriesError::NonFiniteTerm { index: k, value: v });
            }
            terms.push(v);
        }
        Ok(terms[i])
    };

    let start = 'search: {
        for start in 0..=MAX_START {
            let mut ok = true;
            for j in start..start + WINDOW {
                let a = get(j, &mut terms)?;
                let b = get(j + 1, &mut terms)?;
                if !(a * b < 0.0 && b.abs() < a.abs()) {
                    ok = false;
                    break;
                }
            }
            if ok {
                break 'search start;
            }
        }
        return Err(SeriesError::NotAlternating);
    };

    let lead = get(start, &mut terms)?.abs();
    let n = (((2.0 * lead / target_abs_error).ln() / (3.0 + 8f64.sqrt()).ln()).ceil() as usize + 2).clamp(N_MIN, N_MAX);
    let tail_len = n + 10;
    for j in start..start + tail_len {
        get(j, &mut terms)?;
    }
    let head: f64 = terms[..start].iter().sum();
    // b_k with constant sign: sum a = sum (-1)^k b_k
    let b: Vec<f64> = terms[start..start + tail_len]
        .iter()
        .enumerate()
        .map(|(k, a)| if k % 2 == 0 { *a } else { -*a })
        .collect();
    let coarse = cvz(&b, n);
    let (fine, weight_abs) = cvz_with_abs(&b, tail_len);
    let estimate = (fine - coarse).abs() + 8.0 * f64::EPSILON * (weight_abs + head.abs());
    Ok(SeriesValue {
        value: head + fine,
        abs_error_estimate: estimate,
        evaluations: terms.len() as u64,
        converged: estimate <= target_abs_error,
    })
}

fn cvz(b: &[f64], n: usize) -> f64 {
    cvz_with_abs(b, n).0
}

fn cvz_with_abs(b: &[f64], n: usize) -> (f64, f64) {
    let nf = n as f64;
    let mut d = (3.0 + 8f64.sqrt()).powf(nf);
    d = 0.5 * (d + 1.0 / d);
    let mut bb = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    let mut abs = 0.0;
    for (k, bk) in b.iter().take(n).enumerate() {
        let kf = k as f64;
        c = bb - c;
        s += c * bk;
        abs += (c * bk).abs();
        bb = (kf + nf) * (kf - nf) * bb / ((kf + 0.5) * (kf + 1.0));
    }
    (s / d, abs / d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_harmonic_is_log_two() {
        let r = alternating_sum(|i| (if i % 2 == 1 { 1.0 } else { -1.0 }) / i as f64, 1e-13).unwrap();
        assert!((r.value - 2f64.ln()).abs() < 1e-14, "{r:?}");
        assert!(r.converged);
    }

    #[test]
    fn constant_magnitudes_rejected() {
        let e = alternating_sum(|i| if i % 2 == 1 { 1.0 } else { -1.0 }, 1e-12);
        assert_eq!(e, Err(SeriesError::NotAlternating));
    }

    #[test]
    fn irregular_head_is_summed_directly() {
        // three non-alternating leading terms, then the Leibniz series
        let r = alternating_sum(
            |i| match i {
                1..=3 => 1.0,
                _ => {
                    let k = i - 4;
                    (if k % 2 == 0 { 1.0 } else { -1.0 }) / (2 * k + 1) as f64
                }
            },
            1e-13,
        )
        .unwrap();
        assert!((r.value - 3.0 - std::f64::consts::FRAC_PI_4).abs() < 1e-14, "{r:?}");
    }

    #[test]
    fn nan_term_is_an_error() {
        let e = alternating_sum(|i| if i == 5 { f64::NAN } else { 1.0 / i as f64 }, 1e-12);
        assert!(matches!(e, Err(SeriesError::NonFiniteTerm { index: 5, .. })));
    }
}
