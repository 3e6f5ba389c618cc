use gammalog::sumacc::{feq_residual, FeqFamily, SeriesError};
use gammalog::transcendent::RationalAngle;

#[test]
fn every_family_on_the_unit_grid() {
    let mut worst = 0.0f64;
    for family in FeqFamily::all() {
        for k in 1..=9 {
            let s = k as f64 / 10.0;
            match feq_residual(family, s) {
                Ok(r) => {
                    assert!(r <= 1e-9, "{family} s={s}: {r:e}");
                    worst = worst.max(r);
                }
                Err(SeriesError::SingularPrefactor(_)) => {}
                Err(e) => panic!("{family} s={s}: {e}"),
            }
        }
    }
    println!("worst functional-equation residual {worst:e}");
}

#[test]
fn twisted_families_over_angles() {
    for (m, n) in [(1, 2), (1, 4), (3, 4), (2, 5), (1, 6)] {
        let angle = RationalAngle::new(m, n).unwrap();
        for family in [FeqFamily::CosTwisted(angle), FeqFamily::SinTwisted(angle)] {
            for s in [0.25, 0.5, 0.75] {
                let r = feq_residual(family, s).unwrap();
                assert!(r <= 1e-9, "{family} s={s}: {r:e}");
            }
        }
    }
}
