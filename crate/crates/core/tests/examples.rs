//! Runs every example program once.

#[allow(dead_code)]
mod bipartitions {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bipartitions.rs"));
}

#[allow(dead_code)]
mod black_hole {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/black_hole.rs"));
}

#[allow(dead_code)]
mod custom_measure {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/custom_measure.rs"));
}

#[allow(dead_code)]
mod fidelity_bounds {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fidelity_bounds.rs"));
}

#[allow(dead_code)]
mod measure_states {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/measure_states.rs"));
}

#[allow(dead_code)]
mod partial_traces {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/partial_traces.rs"));
}

#[allow(dead_code)]
mod state_files {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/state_files.rs"));
}

#[allow(dead_code)]
mod sudden_death {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sudden_death.rs"));
}

#[test]
fn example_bipartitions() {
    bipartitions::run_example().unwrap();
}

#[test]
fn example_black_hole() {
    black_hole::run_example().unwrap();
}

#[test]
fn example_custom_measure() {
    custom_measure::run_example().unwrap();
}

#[test]
fn example_fidelity_bounds() {
    fidelity_bounds::run_example().unwrap();
}

#[test]
fn example_measure_states() {
    measure_states::run_example().unwrap();
}

#[test]
fn example_partial_traces() {
    partial_traces::run_example().unwrap();
}

#[test]
fn example_state_files() {
    state_files::run_example().unwrap();
}

#[test]
fn example_sudden_death() {
    sudden_death::run_example().unwrap();
}
