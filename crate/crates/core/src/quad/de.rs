use std::f64::consts::{FRAC_PI_2, PI};

use super::{EvalResult, QuadError};

const MAX_LEVEL: u32 = 12;
const MIN_LEVEL: u32 = 3;
const TAU_LIMIT: f64 = 7.0;
// walk at least this far before trusting small contributions
const TAU_MIN_EXTENT: f64 = 3.0;

#[derive(Debug, Clone, Copy)]
pub(super) enum Map {
    /// (0,1): y = 1/(1+e^{-pi sinh t})
    TanhSinh,
    /// (0,inf): u = exp(pi/2 sinh t)
    ExpSinh,
}

impl Map {
    fn node(self, tau: f64) -> Option<(f64, f64)> {
        match self {
            Map::TanhSinh => {
                let v = PI * tau.sinh();
                let e = (-v).exp();
                let y = 1.0 / (1.0 + e);
                let y_c = e / (1.0 + e);
                if !(y > 0.0 && y < 1.0) || !(y_c > 0.0) || !e.is_finite() {
                    return None;
                }
                Some((y, PI * tau.cosh() * y * y_c))
            }
            Map::ExpSinh => {
                let u = (FRAC_PI_2 * tau.sinh()).exp();
                if !(u >= f64::MIN_POSITIVE && u.is_finite()) {
                    return None;
                }
                Some((u, u * FRAC_PI_2 * tau.cosh()))
            }
        }
    }
}

struct Walker<'a, F> {
    map: Map,
    f: &'a F,
    evaluations: u64,
}

impl<F: Fn(f64) -> f64> Walker<'_, F> {
    fn eval(&mut self, tau: f64) -> Result<Option<(f64, f64)>, QuadError> {
        let Some((x, w)) = self.map.node(tau) else {
            return Ok(None);
        };
        let fx = (self.f)(x);
        self.evaluations += 1;
        if !fx.is_finite() {
            return Err(QuadError::NonFiniteIntegrand { at: x, value: fx });
        }
        Ok(Some((x, w * fx)))
    }
}

struct Side {
    extent: f64,
    // bound on the mass beyond `extent`
    omitted: f64,
}

fn omitted_beyond(tau: f64, edge: f64) -> f64 {
    4.0 * edge / (FRAC_PI_2 * tau.abs().cosh())
}

/// Level-0 walk along one side (sign = +-1); returns the sum of w f.
fn walk<F: Fn(f64) -> f64>(
    walker: &mut Walker<'_, F>,
    sign: f64,
    threshold: f64,
    abs_sum: &mut f64,
) -> Result<(f64, Side), QuadError> {
    let mut sum = 0.0;
    let mut small = 0;
    let mut j = 1.0;
    loop {
        if j > TAU_LIMIT {
            return edge_side(walker, sign, j - 1.0, sum);
        }
        match walker.eval(sign * j)? {
            None => return edge_side(walker, sign, j - 1.0, sum),
            Some((_, wf)) => {
                sum += wf;
                *abs_sum += wf.abs();
                if wf.abs() < threshold && j >= TAU_MIN_EXTENT {
                    small += 1;
                    if small >= 2 {
                        return Ok((sum, Side { extent: j, omitted: omitted_beyond(j, wf.abs()) }));
                    }
                } else {
                    small = 0;
                }
            }
        }
        j += 1.0;
    }
}

/// The walk hit the representable edge between `from` and `from + 1`;
/// locate it on a fine grid so refined levels reach as far as possible.
fn edge_side<F: Fn(f64) -> f64>(
    walker: &mut Walker<'_, F>,
    sign: f64,
    from: f64,
    sum: f64,
) -> Result<(f64, Side), QuadError> {
    const STEP: f64 = 1.0 / 64.0;
    let mut extent = from;
    while extent + STEP <= TAU_LIMIT && walker.map.node(sign * (extent + STEP)).is_some() {
        extent += STEP;
    }
    let edge = match walker.eval(sign * extent)? {
        Some((_, wf)) => wf.abs(),
        None => 0.0,
    };
    Ok((sum, Side { extent, omitted: omitted_beyond(extent, edge) }))
}

/// Refined walk for level >= 1, fixed extent; returns the sum of w f.
fn refine<F: Fn(f64) -> f64>(
    walker: &mut Walker<'_, F>,
    h: f64,
    left: &Side,
    right: &Side,
    abs_sum: &mut f64,
) -> Result<f64, QuadError> {
    let mut sum = 0.0;
    let mut k = 1.0;
    loop {
        let tau = k * h;
        let mut any = false;
        if tau <= right.extent {
            any = true;
            if let Some((_, wf)) = walker.eval(tau)? {
                sum += wf;
                *abs_sum += wf.abs();
            }
        }
        if tau <= left.extent {
            any = true;
            if let Some((_, wf)) = walker.eval(-tau)? {
                sum += wf;
                *abs_sum += wf.abs();
            }
        }
        if !any {
            return Ok(sum);
        }
        k += 2.0;
    }
}

pub(super) struct Outcome {
    pub result: EvalResult,
    /// |f| at the outermost abscissa on the far side.
    pub far_f: f64,
}

pub(super) fn integrate<F: Fn(f64) -> f64>(map: Map, f: F, target: f64, budget: u64) -> Result<Outcome, QuadError> {
    let mut walker = Walker { map, f: &f, evaluations: 0 };
    let threshold = (target * 1e-4).max(f64::MIN_POSITIVE);
    let mut abs_sum = 0.0;
    let center = walker.eval(0.0)?.map(|(_, wf)| wf).unwrap_or(0.0);
    abs_sum += center.abs();
    let (sum_r, right) = walk(&mut walker, 1.0, threshold, &mut abs_sum)?;
    let (sum_l, left) = walk(&mut walker, -1.0, threshold, &mut abs_sum)?;
    let mut total = center + sum_r + sum_l;
    let mut h = 1.0;
    let mut prev = total * h;
    let truncation = left.omitted + right.omitted;
    let mut result = EvalResult { value: prev, abs_error_estimate: f64::INFINITY, evaluations: 0, converged: false };

    for level in 1..=MAX_LEVEL {
        h *= 0.5;
        total += refine(&mut walker, h, &left, &right, &mut abs_sum)?;
        let current = total * h;
        let roundoff = 16.0 * f64::EPSILON * (abs_sum * h).max(current.abs());
        let estimate = (current - prev).abs() + truncation + roundoff;
        result = EvalResult {
            value: current,
            abs_error_estimate: estimate,
            evaluations: walker.evaluations,
            converged: false,
        };
        if level >= MIN_LEVEL && estimate <= target {
            result.converged = true;
            break;
        }
        if walker.evaluations >= budget {
            break;
        }
        prev = current;
    }

    let far_f = match map.node(right.extent) {
        Some((x, _)) => {
            result.evaluations += 1;
            f(x).abs()
        }
        None => f64::NAN,
    };
    Ok(Outcome { result, far_f })
}
