// Residuals of every functional-equation family on a grid in s.

use std::error::Error;

use gammalog::sumacc::{feq_residual, FeqFamily, SeriesError};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for family in FeqFamily::all() {
        let mut worst = 0.0f64;
        for k in 1..=9 {
            match feq_residual(family, k as f64 / 10.0) {
                Ok(r) => worst = worst.max(r),
                Err(SeriesError::SingularPrefactor(_)) => {}
                Err(e) => return Err(e.into()),
            }
        }
        println!("{:<12} worst residual {worst:.2e}", family.wire_name());
        if worst > 1e-9 {
            return Err(format!("{family} residual {worst:e}").into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("functional_equations");
}
