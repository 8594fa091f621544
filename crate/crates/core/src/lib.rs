//! Exact critical values, critical filtrations and Belyi/Fried
//! classification of maps to the projective line.
//!
//! - [`exactnum`]: rationals, polynomials, `Q(t)` and quadratic surds.
//! - [`ratmap`]: rational maps on `P¹`, their critical data and divisors.
//! - [`hypercurve`]: maps on hyperelliptic curves and the family registry.
//! - [`friedbase`]: cross-ratios, `j`-invariants and base functions.
//! - [`constellation`]: permutation tuples, dessins and braid orbits.
//! - [`verify`]: the verification driver behind `critfilt verify-paper`.
//!
//! No floating point value is ever used to decide an equality.

pub mod constellation;
pub mod error;
pub mod exactnum;
pub mod expr;
pub mod friedbase;
pub mod hypercurve;
pub mod ratmap;
pub mod report;
pub mod verify;

pub use error::{Error, Result};

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/critical-values.md")]
    mod critical_values {}
    #[doc = include_str!("../../../book/src/hyperelliptic.md")]
    mod hyperelliptic {}
    #[doc = include_str!("../../../book/src/base-functions.md")]
    mod base_functions {}
    #[doc = include_str!("../../../book/src/constellations.md")]
    mod constellations {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
