// Alternating sums from a few dozen terms.

use std::error::Error;

use gammalog::sumacc::alternating_sum;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ln2 = alternating_sum(|i| if i % 2 == 1 { 1.0 } else { -1.0 } / i as f64, 1e-14)?;
    println!("1 - 1/2 + 1/3 - ... = {:.16} using {} terms (ln 2 = {:.16})", ln2.value, ln2.evaluations, 2f64.ln());
    // eta(1/2): terms decay like i^(-1/2)
    let eta = alternating_sum(|i| if i % 2 == 1 { 1.0 } else { -1.0 } / (i as f64).sqrt(), 1e-13)?;
    println!("eta(1/2)            = {:.16}", eta.value);
    if (ln2.value - 2f64.ln()).abs() > 1e-13 || (eta.value - 0.604_898_643_421_630_4).abs() > 1e-12 {
        return Err("acceleration drifted".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("alternating_acceleration");
}
