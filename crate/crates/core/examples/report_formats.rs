// Text, JSON and CSV renderings of the same reports.

use std::error::Error;

use gammalog::registry::{Catalog, Builtin, ToleranceConfig, to_csv, to_json, to_text};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cat = Catalog::builtin();
    let picked = cat.list(Some("eq12"));
    let reports = cat.verify_records(&Builtin, &picked, ToleranceConfig::default());
    print!("{}", to_text(&reports));
    print!("{}", to_csv(&reports)?);
    let json = to_json(&reports)?;
    println!("{} bytes of JSON", json.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("report_formats");
}
