//! Interpolation Macdonald and Jack polynomials, their Cherednik operators, and
//! exact checks of the binomial formulas relating them.

pub mod error;
pub mod identities;
pub mod interpolation;
pub mod linalg;
pub mod operators;
pub mod polyring;
pub mod scalars;
pub mod shapes;

pub use error::{Error, Result};
pub use interpolation::{Cache, Interpolator};
pub use polyring::{AffineMap, Exponent, LaurentPoly};
pub use scalars::{FieldConfig, Gen, Scalar, Variant};
pub use shapes::{Composition, IntVector, Permutation};
