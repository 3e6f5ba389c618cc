// Gamma, log-Gamma and digamma at a few classical points.

use std::error::Error;
use std::f64::consts::PI;

use gammalog::sfcore::{digamma, gamma, log_gamma, EULER_GAMMA};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let half = gamma(0.5)?;
    println!("Gamma(1/2)   = {half:.16}  (sqrt pi = {:.16})", PI.sqrt());
    println!("Gamma(1/4)   = {:.16}", gamma(0.25)?);
    println!("lnGamma(100) = {:.12}", log_gamma(100.0)?);
    println!("psi(1)       = {:.16}  (-C = {:.16})", digamma(1.0)?, -EULER_GAMMA);
    if (half - PI.sqrt()).abs() > 1e-14 || (digamma(1.0)? + EULER_GAMMA).abs() > 1e-14 {
        return Err("special values drifted".into());
    }
    // poles are rejected rather than returned as infinities
    assert!(gamma(0.0).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("special_functions");
}
