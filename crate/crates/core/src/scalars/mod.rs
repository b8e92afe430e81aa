//! Exact coefficient arithmetic.
//!
//! [`Scalar`] is either an exact rational or a reduced fraction of integer
//! polynomials in the generators `q, t, r, a`; [`FieldConfig`] decides which
//! generators are present and which are specialized to rational values.

mod field;
mod genpoly;
mod scalar;

pub use field::{FieldConfig, Mode, Variant};
pub use genpoly::{Gen, GenExp, GenPoly};
pub use scalar::{parse_rational, rational_to_string, RatFunc, Scalar};
