//! Exact arithmetic: rationals, quadratic surds, rational functions in one
//! parameter, and dense univariate polynomials over any of them.

pub mod field;
pub mod linalg;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod roots;
pub mod surd;

pub use field::{Field, Ring};
pub use poly::Poly;
pub use rat::{int, parse_rat, rat, rat_to_string, Rat};
pub use ratfunc::RatFunc;
pub use roots::{locate_roots, Located, Root};
pub use surd::Surd;

use crate::error::{Error, Result};

/// Monic gcd of two polynomials; `gcd(0, 0) = 0`.
pub fn poly_gcd<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    a.gcd(b)
}

/// Yun decomposition; errors on the zero polynomial.
pub fn squarefree_decomposition<F: Field>(p: &Poly<F>) -> Result<Vec<(Poly<F>, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(p.squarefree_decomposition())
}

pub fn resultant<F: Field>(p: &Poly<F>, q: &Poly<F>) -> Result<F> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(p.resultant(q))
}

pub fn discriminant<F: Field>(p: &Poly<F>) -> Result<F> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(p.discriminant())
}
