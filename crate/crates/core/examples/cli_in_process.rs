// Running the command-line front end in-process.

use std::error::Error;

use gammalog::cli;
use gammalog::registry::{Builtin, Catalog};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let out = cli::run(["verify", "--filter", "ps_", "--format", "csv"], Catalog::builtin(), &Builtin);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    if out.code != 0 {
        return Err(format!("exit code {}", out.code).into());
    }
    let bad = cli::run(["verify", "--id", "nonexistent"], Catalog::builtin(), &Builtin);
    println!("unknown id exits with {}", bad.code);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cli_in_process");
}
