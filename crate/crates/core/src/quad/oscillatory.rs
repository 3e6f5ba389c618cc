use std::cell::Cell;

use super::{gauss, integrate_interval, EndpointHint, EvalResult, FarEnd, NearEnd, QuadError};
use crate::sumacc::alternating_sum;

/// Start of the accelerated tail.
const HEAD_END: f64 = 40.0;

pub(super) fn integrate<F: Fn(f64) -> f64>(
    f: &F,
    at_zero: NearEnd,
    first_zero: f64,
    half_period: f64,
    target: f64,
) -> Result<EvalResult, QuadError> {
    let evaluations = Cell::new(0u64);
    let bad = Cell::new(None::<(f64, f64)>);
    let g = |x: f64| {
        evaluations.set(evaluations.get() + 1);
        let v = f(x);
        if !v.is_finite() && bad.get().is_none() {
            bad.set(Some((x, v)));
        }
        v
    };
    let zero = |k: u64| first_zero + k as f64 * half_period;

    let head = integrate_interval(g, 0.0, first_zero, EndpointHint::new(at_zero, FarEnd::Smooth), target / 4.0)?;

    let k_tail = ((HEAD_END - first_zero) / half_period).ceil().max(8.0) as u64;
    let mut middle = 0.0;
    let mut middle_err = 0.0;
    for k in 0..k_tail {
        let a = gauss::apply(&g, zero(k), zero(k + 1), 24);
        let b = gauss::apply(&g, zero(k), zero(k + 1), 20);
        middle += a;
        middle_err += (a - b).abs();
    }

    let tail = alternating_sum(|i| gauss::apply(&g, zero(k_tail + i - 1), zero(k_tail + i), 24), target / 4.0)
        .map_err(|e| QuadError::InvalidArgument(format!("oscillatory tail: {e}")))?;

    if let Some((at, value)) = bad.get() {
        return Err(QuadError::NonFiniteIntegrand { at, value });
    }
    let estimate = head.abs_error_estimate
        + middle_err
        + tail.abs_error_estimate
        + 8.0 * f64::EPSILON * (middle.abs() + k_tail as f64 * tail.value.abs());
    Ok(EvalResult {
        value: head.value + middle + tail.value,
        abs_error_estimate: estimate,
        evaluations: evaluations.get(),
        converged: head.converged && tail.converged && estimate <= target,
    })
}
