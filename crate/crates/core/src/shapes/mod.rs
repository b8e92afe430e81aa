//! Compositions, permutations, diagrams and spectral points.

mod composition;
mod diagram;
mod permutation;
mod spectral;

pub use composition::{
    compositions_of, contains, dominant_sort, enumerate_compositions, enumerate_partitions,
    grlex_cmp, partitions_of, Composition, IntVector,
};
pub use diagram::{diagram_stats, CellStats};
pub use permutation::Permutation;
pub use spectral::{rho, spectral, spectral_qt, spectral_r, tau, tilde, SpectralKind, SpectralPoint};
