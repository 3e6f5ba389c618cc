// Periodic-coefficient series by the lattice engine, and the same values
// through the Mellin integral of their generating function.

use std::error::Error;
use std::f64::consts::PI;

use gammalog::sumacc::{characters, l_series, l_series_by_quadrature, log_l_series, PeriodicCoefficients};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let beta = characters::beta();
    let v = l_series(&beta, 1.0)?;
    println!("1 - 1/3 + 1/5 - ...         = {:.16} (pi/4 = {:.16})", v.value, PI / 4.0);

    let chi = PeriodicCoefficients::from_residues(5, &[(1, 1.0), (2, -1.0), (3, -1.0), (4, 1.0)])?;
    for s in [0.3, 0.5, 0.9] {
        let a = l_series(&chi, s)?;
        let b = l_series_by_quadrature(&chi, s, 1e-12)?;
        println!("period-5 series at s = {s}: lattice {:.14}  Mellin {:.14}", a.value, b.value);
        if (a.value - b.value).abs() > 1e-10 {
            return Err("engines disagree".into());
        }
    }
    let lv = log_l_series(&beta, 1.0)?;
    println!("sum chi4(k) log k / k       = {:.16}", lv.value);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("dirichlet_series");
}
