// Recurrence, reflection, half-point and multiplication relations,
// evaluated through the closed forms.

use std::error::Error;

use gammalog::transcendent::{relation_residual, RationalAngle, RelationKind};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for kind in RelationKind::ALL {
        let angle = match (kind.fixed_angle(), kind.parity()) {
            (Some(a), _) => a,
            (None, Some(gammalog::transcendent::Parity::Even)) => RationalAngle::new(1, 3)?,
            _ => RationalAngle::new(2, 5)?,
        };
        let r = kind.needs_multiplier().then_some(3);
        let res = relation_residual(kind, angle, 0.7, r)?;
        println!("{:<22} at {angle}: residual {res:.2e}", kind.wire_name());
        if res > 1e-10 {
            return Err(format!("{kind} fails").into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("transcendent_relations");
}
