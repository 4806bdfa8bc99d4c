// Each example also runs as a test.

mod lattice_and_building_sets {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lattice_and_building_sets.rs"));
}

#[test]
fn lattice_and_building_sets_runs() {
    lattice_and_building_sets::run_example().expect("lattice_and_building_sets");
}

mod nested_complex {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/nested_complex.rs"));
}

#[test]
fn nested_complex_runs() {
    nested_complex::run_example().expect("nested_complex");
}

mod groebner_algebra {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/groebner_algebra.rs"));
}

#[test]
fn groebner_algebra_runs() {
    groebner_algebra::run_example().expect("groebner_algebra");
}

mod hilbert_series {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hilbert_series.rs"));
}

#[test]
fn hilbert_series_runs() {
    hilbert_series::run_example().expect("hilbert_series");
}

mod fan_construction {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fan_construction.rs"));
}

#[test]
fn fan_construction_runs() {
    fan_construction::run_example().expect("fan_construction");
}

mod chow_relations {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/chow_relations.rs"));
}

#[test]
fn chow_relations_runs() {
    chow_relations::run_example().expect("chow_relations");
}

mod lattice_files {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lattice_files.rs"));
}

#[test]
fn lattice_files_runs() {
    lattice_files::run_example().expect("lattice_files");
}

mod cli {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cli.rs"));
}

#[test]
fn cli_runs() {
    cli::run_example().expect("cli");
}
