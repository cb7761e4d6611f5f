//! Benchmark helpers: fixtures shared by the criterion benches.

use vmosaic_core::{GaussCode, Mosaic};

/// The 1×7 row mosaic of the 7_1 torus knot.
pub const SEVEN_ONE: &str = "\
1 7
T9 T10 T9 T10 T9 T10 T9
top: b c c d d e e
right: b
bottom: f f g g h h a
left: a
";

pub fn seven_one() -> Mosaic {
    Mosaic::parse(SEVEN_ONE).expect("bench fixture parses")
}

/// A six-crossing virtual knot code whose longest nonrepeating run is 5.
pub fn six_crossing_code() -> GaussCode {
    "O1-U2+O3+U1-O4-U5+O2+U4-O6+U3+O5+U6+"
        .parse()
        .expect("bench code parses")
}
