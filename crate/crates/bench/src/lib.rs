//! Fixtures shared by the benchmarks.

use binomac::shapes::enumerate_compositions;
use binomac::{Composition, FieldConfig, Variant};

/// The compositions of length `n` and size exactly `d`.
pub fn of_size(n: usize, d: u32) -> Vec<Composition> {
    enumerate_compositions(n, d)
        .into_iter()
        .filter(|c| c.size() == d)
        .collect()
}

/// `q = 2, t = 3`.
pub fn qt() -> FieldConfig {
    FieldConfig::default_for(Variant::QT)
}

/// Symbolic `r`.
pub fn jack() -> FieldConfig {
    FieldConfig::symbolic(Variant::R)
}
