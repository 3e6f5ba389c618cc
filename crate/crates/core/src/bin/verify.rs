use std::io::Write;

use gammalog::cli;
use gammalog::registry::{Builtin, Catalog};

fn main() {
    let out = cli::run(std::env::args_os(), Catalog::builtin(), &Builtin);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
