// The log log(1/y) integral over (0, 1) against its Gamma closed form.

use std::error::Error;
use std::f64::consts::PI;

use gammalog::quad::{integrate_unit, EndpointHint, FarEnd, NearEnd};
use gammalog::sfcore::gamma;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let hint = EndpointHint::new(NearEnd::LogLogSingular, FarEnd::LogLogSingular);
    let q = integrate_unit(|y| (-y.ln()).ln() / (1.0 + y * y), hint, 1e-13)?;
    let closed = PI / 2.0 * ((2.0 * PI).sqrt() * gamma(0.75)? / gamma(0.25)?).ln();
    println!("quadrature  {:.16} (+/- {:.1e}, {} evaluations)", q.value, q.abs_error_estimate, q.evaluations);
    println!("closed form {closed:.16}");
    if (q.value - closed).abs() > 1e-12 {
        return Err("quadrature disagrees with the closed form".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("loglog_quadrature");
}
