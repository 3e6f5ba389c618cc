mod alternating_acceleration {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/alternating_acceleration.rs"));
}

mod cli_in_process {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cli_in_process.rs"));
}

mod custom_evaluator {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/custom_evaluator.rs"));
}

mod dirichlet_series {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/dirichlet_series.rs"));
}

mod functional_equations {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/functional_equations.rs"));
}

mod loglog_quadrature {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/loglog_quadrature.rs"));
}

mod oscillatory_quadrature {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/oscillatory_quadrature.rs"));
}

mod report_formats {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/report_formats.rs"));
}

mod special_functions {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/special_functions.rs"));
}

mod transcendent_closed_forms {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/transcendent_closed_forms.rs"));
}

mod transcendent_relations {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/transcendent_relations.rs"));
}

mod twisted_series {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/twisted_series.rs"));
}

mod verify_catalog {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_catalog.rs"));
}

#[test]
fn alternating_acceleration_runs() {
    alternating_acceleration::run_example().expect("alternating_acceleration");
}

#[test]
fn cli_in_process_runs() {
    cli_in_process::run_example().expect("cli_in_process");
}

#[test]
fn custom_evaluator_runs() {
    custom_evaluator::run_example().expect("custom_evaluator");
}

#[test]
fn dirichlet_series_runs() {
    dirichlet_series::run_example().expect("dirichlet_series");
}

#[test]
fn functional_equations_runs() {
    functional_equations::run_example().expect("functional_equations");
}

#[test]
fn loglog_quadrature_runs() {
    loglog_quadrature::run_example().expect("loglog_quadrature");
}

#[test]
fn oscillatory_quadrature_runs() {
    oscillatory_quadrature::run_example().expect("oscillatory_quadrature");
}

#[test]
fn report_formats_runs() {
    report_formats::run_example().expect("report_formats");
}

#[test]
fn special_functions_runs() {
    special_functions::run_example().expect("special_functions");
}

#[test]
fn transcendent_closed_forms_runs() {
    transcendent_closed_forms::run_example().expect("transcendent_closed_forms");
}

#[test]
fn transcendent_relations_runs() {
    transcendent_relations::run_example().expect("transcendent_relations");
}

#[test]
fn twisted_series_runs() {
    twisted_series::run_example().expect("twisted_series");
}

#[test]
fn verify_catalog_runs() {
    verify_catalog::run_example().expect("verify_catalog");
}
