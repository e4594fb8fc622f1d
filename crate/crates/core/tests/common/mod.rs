#![allow(dead_code)]

use std::path::PathBuf;

use hodge_infinity::io::{load_spec, Spec};
use hodge_infinity::StarPolynomialSpec;

pub const FIXTURES: [&str; 6] = [
    "curve_example",
    "smooth_curve_d4",
    "zariski_i",
    "zariski_ii",
    "smooth_n2_d3",
    "single_line",
];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

pub fn fixture(name: &str) -> Spec {
    load_spec(&fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn star(name: &str) -> StarPolynomialSpec {
    match fixture(name) {
        Spec::Star(s) => s,
        Spec::Curve(_) => panic!("{name} is a curve"),
    }
}
