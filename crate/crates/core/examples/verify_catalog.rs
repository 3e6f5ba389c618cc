// Browse the identity catalog and check a few entries.

use std::error::Error;

use gammalog::registry::{evaluate_identity, list_identities, summary_line, verify_all, Binding, ToleranceConfig};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for r in list_identities(Some("eq12")) {
        println!("{}  {}  corrected: {}", r.id, r.description, r.corrected_from_paper);
    }
    let tol = ToleranceConfig::default();
    let b: Binding = [("m".to_string(), 2.0), ("n".to_string(), 7.0), ("x".to_string(), 1.25)].into_iter().collect();
    let r = evaluate_identity("eq07", &b, tol)?;
    println!("eq07 at m=2,n=7,x=1.25: lhs {:.15} rhs {:.15} pass {}", r.lhs.unwrap().value, r.rhs.unwrap().value, r.pass);

    let all = verify_all(tol);
    println!("{}", summary_line(&all));
    if !all.iter().all(|r| r.pass) || !r.pass {
        return Err("catalog does not verify".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("verify_catalog");
}
