//! Runs every cargo example with its default arguments.

#[allow(dead_code)]
#[path = "../examples/branching_functions.rs"]
mod branching_functions;

#[test]
fn example_branching_functions() {
    branching_functions::run(Vec::new());
}

#[allow(dead_code)]
#[path = "../examples/drinfeld.rs"]
mod drinfeld;

#[test]
fn example_drinfeld() {
    drinfeld::run(Vec::new());
}

#[allow(dead_code)]
#[path = "../examples/gz_schemes.rs"]
mod gz_schemes;

#[test]
fn example_gz_schemes() {
    gz_schemes::run(Vec::new());
}

#[allow(dead_code)]
#[path = "../examples/kostka_foulkes.rs"]
mod kostka_foulkes;

#[test]
fn example_kostka_foulkes() {
    kostka_foulkes::run(Vec::new());
}

#[allow(dead_code)]
#[path = "../examples/level1_characters.rs"]
mod level1_characters;

#[test]
fn example_level1_characters() {
    level1_characters::run(Vec::new());
}

#[allow(dead_code)]
#[path = "../examples/motifs.rs"]
mod motifs;

#[test]
fn example_motifs() {
    motifs::run(Vec::new());
}

#[allow(dead_code)]
#[path = "../examples/rogers_szego.rs"]
mod rogers_szego;

#[test]
fn example_rogers_szego() {
    rogers_szego::run(Vec::new());
}

#[allow(dead_code)]
#[path = "../examples/skew_schur.rs"]
mod skew_schur;

#[test]
fn example_skew_schur() {
    skew_schur::run(Vec::new());
}

#[allow(dead_code)]
#[path = "../examples/spectral_fiber.rs"]
mod spectral_fiber;

#[test]
fn example_spectral_fiber() {
    spectral_fiber::run(Vec::new());
}

#[allow(dead_code)]
#[path = "../examples/twisted_model.rs"]
mod twisted_model;

#[test]
fn example_twisted_model() {
    twisted_model::run(Vec::new());
}
