// Plugging a different evaluator into the verifier, here one that shifts a
// right-hand side to show the detector firing.

use std::error::Error;

use gammalog::registry::{Binding, Builtin, Catalog, Evaluator, IdentityRecord, RegistryError, Sides, ToleranceConfig};

struct Shifted(f64);

impl Evaluator for Shifted {
    fn sides(&self, record: &IdentityRecord, binding: &Binding, target: f64) -> Result<Sides, RegistryError> {
        let (lhs, rhs) = Builtin.sides(record, binding, target)?;
        Ok((lhs, rhs.shift(self.0)))
    }
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cat = Catalog::builtin();
    let tol = ToleranceConfig::default();
    for shift in [0.0, 1e-11, 1e-6] {
        let r = cat.evaluate_with(&Shifted(shift), "eq08", &Binding::new(), tol)?;
        println!("shift {shift:e}: residual {:.2e} pass {}", r.abs_residual.unwrap_or(f64::NAN), r.pass);
        if r.pass != (shift < 1e-9) {
            return Err("unexpected verdict".into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("custom_evaluator");
}
