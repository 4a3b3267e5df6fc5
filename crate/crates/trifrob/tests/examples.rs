//! Every example under `examples/` runs to completion.

mod verify_pavlyk_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_pavlyk.rs"));
}
mod darboux_egoroff_flow_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/darboux_egoroff_flow.rs"));
}
mod a3_fuchsian_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/a3_fuchsian.rs"));
}
mod painleve_a3_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/painleve_a3.rs"));
}
mod lift_a3_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lift_a3.rs"));
}
mod elliptic_checks_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/elliptic_checks.rs"));
}
mod prepotential_2d_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/prepotential_2d.rs"));
}
mod prepotential_document_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/prepotential_document.rs"));
}

#[test]
fn verify_pavlyk_example_runs() {
    verify_pavlyk_example::run_example().expect("verify_pavlyk example");
}

#[test]
fn darboux_egoroff_flow_example_runs() {
    darboux_egoroff_flow_example::run_example().expect("darboux_egoroff_flow example");
}

#[test]
fn a3_fuchsian_example_runs() {
    a3_fuchsian_example::run_example().expect("a3_fuchsian example");
}

#[test]
fn painleve_a3_example_runs() {
    painleve_a3_example::run_example().expect("painleve_a3 example");
}

#[test]
fn lift_a3_example_runs() {
    lift_a3_example::run_example().expect("lift_a3 example");
}

#[test]
fn elliptic_checks_example_runs() {
    elliptic_checks_example::run_example().expect("elliptic_checks example");
}

#[test]
fn prepotential_2d_example_runs() {
    prepotential_2d_example::run_example().expect("prepotential_2d example");
}

#[test]
fn prepotential_document_example_runs() {
    prepotential_document_example::run_example().expect("prepotential_document example");
}
