use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use super::{characters, l_series, l_series_by_quadrature, PeriodicCoefficients, SeriesError, SeriesValue};
use crate::quad::{integrate_halfline, EndpointHint, NearEnd};
use crate::sfcore;
use crate::transcendent::RationalAngle;

/// Quadrature target for the side computed by integration.
const SIDE_TARGET: f64 = 1e-13;

/// Closed set of functional equations X(s) <-> X(1-s).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeqFamily {
    /// int (log 1/y)^{s-1} / (1+y+y^2)
    GIntegral,
    /// int (log 1/y)^{s-1} / (1+y^2)
    G1Integral,
    /// 1 - 3^-s + 5^-s - ...
    Beta,
    /// 1 - 2^-s + 4^-s - 5^-s + ...
    Mod3,
    /// 1 - 5^-s + 7^-s - 11^-s + ...
    Mod6,
    /// 1 + 2^-s - 4^-s - 5^-s + ...
    Mod6Pair,
    /// 1 + 3^-s - 5^-s - 7^-s + ...
    Mod8,
    /// int (1+y^2)/(1+y^4) (log 1/y)^{s-1}
    QIntegral,
    /// int (log 1/y)^{s-1} / (1-y+y^2)
    RIntegral,
    /// (n-m)^-s + (n+m)^-s - (3n-m)^-s - ... against the cosine series
    CosTwisted(RationalAngle),
    /// m^-s + (2n-m)^-s - (2n+m)^-s - ... against the sine series
    SinTwisted(RationalAngle),
    /// 1 + 5^-s - 7^-s - 11^-s + ...
    Mod12,
}

impl FeqFamily {
    /// All families, twisted ones at the angle pi/3.
    pub fn all() -> [FeqFamily; 12] {
        let third = RationalAngle::new(1, 3).expect("valid angle");
        [
            FeqFamily::GIntegral,
            FeqFamily::G1Integral,
            FeqFamily::Beta,
            FeqFamily::Mod3,
            FeqFamily::Mod6,
            FeqFamily::Mod6Pair,
            FeqFamily::Mod8,
            FeqFamily::QIntegral,
            FeqFamily::RIntegral,
            FeqFamily::CosTwisted(third),
            FeqFamily::SinTwisted(third),
            FeqFamily::Mod12,
        ]
    }

    pub fn wire_name(&self) -> &'static str {
        match self {
            FeqFamily::GIntegral => "eq34_G",
            FeqFamily::G1Integral => "eq35_G1",
            FeqFamily::Beta => "eq51_beta",
            FeqFamily::Mod3 => "eq52_mod3",
            FeqFamily::Mod6 => "eq53_f",
            FeqFamily::Mod6Pair => "eq53_phi",
            FeqFamily::Mod8 => "eq54_F",
            FeqFamily::QIntegral => "eq85_Q",
            FeqFamily::RIntegral => "eq89_R",
            FeqFamily::CosTwisted(_) => "eq97_first",
            FeqFamily::SinTwisted(_) => "eq97_second",
            FeqFamily::Mod12 => "eq98_T",
        }
    }
}

impl fmt::Display for FeqFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FeqFamily::CosTwisted(a) | FeqFamily::SinTwisted(a) => write!(f, "{}({},{})", self.wire_name(), a.m(), a.n()),
            _ => f.write_str(self.wire_name()),
        }
    }
}

impl FromStr for FeqFamily {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FeqFamily::all()
            .into_iter()
            .find(|f| f.wire_name() == s)
            .ok_or_else(|| SeriesError::InvalidArgument(format!("unknown functional-equation family {s:?}")))
    }
}

/// y-kernel of the integral families, as a function of t = log(1/y),
/// including the Jacobian e^{-t}.
fn kernel(family: FeqFamily, t: f64) -> f64 {
    let y = (-t).exp();
    let y2 = y * y;
    match family {
        FeqFamily::GIntegral => y / (1.0 + y + y2),
        FeqFamily::G1Integral => y / (1.0 + y2),
        FeqFamily::QIntegral => y * (1.0 + y2) / (1.0 + y2 * y2),
        FeqFamily::RIntegral => y / (1.0 - y + y2),
        _ => unreachable!("series family has no kernel"),
    }
}

fn integral_family(family: FeqFamily, s: f64) -> Result<SeriesValue, SeriesError> {
    Ok(integrate_halfline(
        |t| t.powf(s - 1.0) * kernel(family, t),
        EndpointHint::exp_decay(NearEnd::LogSingular, 1.0),
        SIDE_TARGET,
    )?)
}

fn twisted_coefficients(angle: RationalAngle, cosine: bool) -> Result<(PeriodicCoefficients, PeriodicCoefficients), SeriesError> {
    let (m, n) = (angle.m() as usize, angle.n() as usize);
    let period = 4 * n;
    let lhs = if cosine {
        PeriodicCoefficients::from_residues(period, &[(n - m, 1.0), (n + m, 1.0), (3 * n - m, -1.0), (3 * n + m, -1.0)])?
    } else {
        PeriodicCoefficients::from_residues(period, &[(m, 1.0), (2 * n - m, 1.0), (2 * n + m, -1.0), (4 * n - m, -1.0)])?
    };
    let mut rhs = vec![0.0; period];
    for k in (1..=period).step_by(2) {
        let arg = k as f64 * angle.value() / 2.0;
        rhs[k - 1] = if cosine {
            let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            sign * arg.cos()
        } else {
            arg.sin()
        };
    }
    // exact zeros of the mean are lost to rounding; recentre
    let mean = rhs.iter().sum::<f64>() / ((period / 2) as f64);
    for k in (0..period).step_by(2) {
        rhs[k] -= mean;
    }
    Ok((lhs, PeriodicCoefficients::new(rhs)?))
}

fn check_trig(name: &str, v: f64) -> Result<f64, SeriesError> {
    if v.abs() < 1e-8 {
        Err(SeriesError::SingularPrefactor(format!("{name} = {v:e}")))
    } else {
        Ok(v)
    }
}

/// Both sides of the functional equation at s, computed independently.
///
/// Integral families: X(1-s) by quadrature against
/// prefactor(s) * Gamma(s) * (series at s). Series families: X(s) by the
/// lattice engine against prefactor(s) * X(1-s) by Mellin quadrature.
pub fn feq_sides(family: FeqFamily, s: f64) -> Result<(SeriesValue, SeriesValue), SeriesError> {
    if !(s > 0.0 && s < 1.0) {
        return Err(SeriesError::Domain(format!("s must lie in (0,1), got {s}")));
    }
    let half = 0.5 * s * PI;
    let g = sfcore::gamma(s)?;
    let third = (PI / 3.0).sin();
    let quarter = (PI / 4.0).sin();
    let two = |e: f64| 2f64.powf(e);
    let three = |e: f64| 3f64.powf(e);

    let integral_side = |chi: PeriodicCoefficients, pref: f64| -> Result<(SeriesValue, SeriesValue), SeriesError> {
        let lhs = integral_family(family, 1.0 - s)?;
        let rhs = l_series(&chi, s)?.scale(pref * g);
        Ok((lhs, rhs))
    };
    let series_side = |lhs_chi: PeriodicCoefficients, rhs_chi: PeriodicCoefficients, pref: f64| -> Result<(SeriesValue, SeriesValue), SeriesError> {
        let lhs = l_series(&lhs_chi, s)?;
        let rhs = l_series_by_quadrature(&rhs_chi, 1.0 - s, SIDE_TARGET)?.scale(pref);
        Ok((lhs, rhs))
    };

    match family {
        FeqFamily::GIntegral => {
            let c = check_trig("cos(s pi/2)", half.cos())?;
            integral_side(characters::mod3(), (2.0 * PI / 3.0).powf(1.0 - s) * third / (c * g))
        }
        FeqFamily::G1Integral => {
            let c = check_trig("cos(s pi/2)", half.cos())?;
            integral_side(characters::beta(), (PI / 2.0).powf(1.0 - s) / (c * g))
        }
        FeqFamily::QIntegral => {
            let c = check_trig("cos(s pi/2)", half.cos())?;
            integral_side(characters::mod8(), 2.0 * (PI / 4.0).powf(1.0 - s) * quarter / (c * g))
        }
        FeqFamily::RIntegral => {
            let c = check_trig("cos(s pi/2)", half.cos())?;
            let euler = (1.0 + two(s)) / (1.0 + two(s - 1.0));
            integral_side(characters::mod6_pair(), (PI / 3.0).powf(1.0 - s) * third * euler / (c * g))
        }
        _ => {
            let sn = check_trig("sin(s pi/2)", half.sin())?;
            let base = sn * g;
            match family {
                FeqFamily::Beta => series_side(characters::beta(), characters::beta(), (PI / 2.0).powf(s) / base),
                FeqFamily::Mod3 => series_side(characters::mod3(), characters::mod3(), (2.0 * PI / 3.0).powf(s) * third / base),
                FeqFamily::Mod6 => {
                    let euler = (1.0 + two(s)) / (1.0 + two(s - 1.0));
                    series_side(characters::mod6(), characters::mod6(), (PI / 3.0).powf(s) * third * euler / base)
                }
                FeqFamily::Mod6Pair => {
                    let euler = 2.0 * (1.0 + two(s - 1.0)) / (1.0 + two(s));
                    series_side(characters::mod6_pair(), characters::mod6_pair(), (PI / 3.0).powf(s) * third * euler / base)
                }
                FeqFamily::Mod8 => series_side(characters::mod8(), characters::mod8(), 2.0 * (PI / 4.0).powf(s) * quarter / base),
                FeqFamily::Mod12 => {
                    let euler = (1.0 + three(-s)) / (1.0 + three(s - 1.0));
                    series_side(characters::mod12(), characters::mod12(), (PI / 2.0).powf(s) * euler / base)
                }
                FeqFamily::CosTwisted(angle) | FeqFamily::SinTwisted(angle) => {
                    let (lhs, rhs) = twisted_coefficients(angle, matches!(family, FeqFamily::CosTwisted(_)))?;
                    let n = angle.n() as f64;
                    series_side(lhs, rhs, 2.0 * (PI / (2.0 * n)).powf(s) / base)
                }
                _ => unreachable!(),
            }
        }
    }
}

/// |LHS - RHS| of the functional equation at s.
pub fn feq_residual(family: FeqFamily, s: f64) -> Result<f64, SeriesError> {
    let (lhs, rhs) = feq_sides(family, s)?;
    Ok((lhs.value - rhs.value).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_names_round_trip() {
        for f in FeqFamily::all() {
            assert_eq!(f.wire_name().parse::<FeqFamily>().unwrap(), f);
        }
        assert!("eq99_X".parse::<FeqFamily>().is_err());
    }

    #[test]
    fn fixed_point_of_beta() {
        let r = feq_residual(FeqFamily::Beta, 0.5).unwrap();
        assert!(r < 1e-12, "{r}");
    }

    #[test]
    fn s_outside_unit_interval() {
        assert!(feq_residual(FeqFamily::Mod3, 1.0).is_err());
        assert!(feq_residual(FeqFamily::GIntegral, 0.0).is_err());
    }

    #[test]
    fn singular_prefactor_detected() {
        assert!(matches!(check_trig("x", 1e-9), Err(SeriesError::SingularPrefactor(_))));
    }
}
