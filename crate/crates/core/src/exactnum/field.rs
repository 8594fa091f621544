use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rat::Rat;

/// A commutative ring with exact equality and exact division by divisors.
///
/// Every implementor is an integral domain of characteristic zero. `zero`,
/// `one` and `is_zero` come from `num_traits`.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Sized
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_i64(n: i64) -> Self;

    /// Exact quotient. Panics when `rhs` does not divide `self`.
    fn div_exact(&self, rhs: &Self) -> Self;

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

/// A field of characteristic zero containing the rationals.
pub trait Field: Ring + Div<Output = Self> + for<'a> Div<&'a Self, Output = Self> {
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    fn from_rat(r: &Rat) -> Self;

    /// Monic gcd of two polynomials. Fields with a faster route override this.
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        Poly::euclid_gcd(a, b)
    }

    /// Determinant of a square matrix.
    fn determinant(m: Vec<Vec<Self>>) -> Self {
        super::linalg::det(m)
    }
}
