// L(a,x) and its cosh analogue: defining integral against the finite
// Gamma closed form at rational angles.

use std::error::Error;

use gammalog::transcendent::{frakl_closed, frakl_integral, l_closed, l_integral, RationalAngle};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for angle in RationalAngle::all_up_to(4) {
        for x in [0.0, 0.5, 2.0] {
            let li = l_integral(angle.value(), x, 1e-12)?;
            let lc = l_closed(angle, x)?;
            let fi = frakl_integral(angle.value(), x, 1e-12)?;
            let fc = frakl_closed(angle, x)?;
            println!("{angle} x={x}: L {:+.14} / {lc:+.14}   FL {:+.14} / {fc:+.14}", li.value, fi.value);
            if (li.value - lc).abs() > 1e-10 || (fi.value - fc).abs() > 1e-10 {
                return Err(format!("{angle} x={x} disagrees").into());
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("transcendent_closed_forms");
}
