// Series twisted by e^(i k theta), e.g. sum (-1)^(i-1) sin(ia) log i / i.

use std::error::Error;
use std::f64::consts::PI;

use gammalog::sfcore::{log_gamma, EULER_GAMMA};
use gammalog::sumacc::{sin_log_series, twisted_sum, TwistedSeries};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for a in [PI / 4.0, PI / 3.0, PI / 2.0, 2.0 * PI / 3.0] {
        let h = a / (2.0 * PI);
        let closed = PI / 2.0 * (log_gamma(0.5 - h)? - log_gamma(0.5 + h)?) - 0.5 * a * (EULER_GAMMA + (2.0 * PI).ln());
        let v = sin_log_series(a)?;
        println!("a = {a:.6}: series {:.15}  closed form {closed:.15}", v.value);
        if (v.value - closed).abs() > 1e-12 {
            return Err("series and closed form disagree".into());
        }
    }
    // sum_k cos(k)/k = -log(2 sin(1/2))
    let t = twisted_sum(&TwistedSeries { theta: 1.0, stride: 1.0, shift: 0.0, start: 1, s: 1.0, log_weight: false })?;
    println!("sum cos(k)/k = {:.15}  ({:.15})", t.value.re, -(2.0 * 0.5f64.sin()).ln());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("twisted_series");
}
