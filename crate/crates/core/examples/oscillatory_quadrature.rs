// Slowly decaying oscillatory integrals, summed interval by interval with
// an accelerated tail.

use std::error::Error;
use std::f64::consts::PI;

use gammalog::quad::{integrate_halfline, EndpointHint, FarEnd, NearEnd};
use gammalog::sfcore::gamma;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // int_0^inf z^(s-1) cos z dz = cos(s pi/2) Gamma(s)
    for s in [0.25, 0.5, 0.75] {
        let hint = EndpointHint::new(NearEnd::LogSingular, FarEnd::Oscillatory { first_zero: PI / 2.0, half_period: PI });
        let q = integrate_halfline(|z| z.powf(s - 1.0) * z.cos(), hint, 1e-12)?;
        let exact = (s * PI / 2.0).cos() * gamma(s)?;
        println!("s = {s}: {:.15}  exact {exact:.15}", q.value);
        if (q.value - exact).abs() > 1e-10 {
            return Err(format!("s = {s} off by {:e}", q.value - exact).into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("oscillatory_quadrature");
}
