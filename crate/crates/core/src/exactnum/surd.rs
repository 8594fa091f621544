//! Quadratic irrationals `a + b√D` over the rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Ring};
use super::rat::Rat;

/// `a + b√D`, with `D` a squarefree integer other than 0 and 1 or, when
/// `b = 0`, exactly 1.
///
/// A value with `b = 0` is a plain rational and combines with any radicand.
/// Combining two irrational values with different radicands panics; use
/// [`Surd::compatible`] to check first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    a: Rat,
    b: Rat,
    d: BigInt,
}

impl Surd {
    /// Panics if `d` is not squarefree or is zero.
    pub fn new(a: Rat, b: Rat, d: BigInt) -> Self {
        assert!(!d.is_zero(), "radicand zero");
        if b.is_zero() || d.is_one() {
            return Surd {
                a: a + b,
                b: Rat::zero(),
                d: BigInt::one(),
            };
        }
        let (sq, free) = squarefree_split(&d);
        assert!(sq.is_one(), "radicand {d} is not squarefree");
        Surd { a, b, d: free }
    }

    /// `a + b√n` for any nonzero integer `n`, pulling square factors out.
    pub fn with_radicand(a: Rat, b: Rat, n: &BigInt) -> Self {
        let (sq, free) = squarefree_split(n);
        Surd::new(a, b * Rat::from_integer(sq), free)
    }

    pub fn rational(a: Rat) -> Self {
        Surd {
            a,
            b: Rat::zero(),
            d: BigInt::one(),
        }
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }
    pub fn b(&self) -> &Rat {
        &self.b
    }
    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.a)
    }

    pub fn conj(&self) -> Self {
        Surd {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// `a² − D b²`.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - &self.b * &self.b * Rat::from_integer(self.d.clone())
    }

    pub fn compatible(&self, other: &Self) -> bool {
        self.is_rational() || other.is_rational() || self.d == other.d
    }

    fn common_d(&self, other: &Self) -> BigInt {
        if self.is_rational() {
            other.d.clone()
        } else if other.is_rational() || self.d == other.d {
            self.d.clone()
        } else {
            panic!("surd radicands differ: {} vs {}", self.d, other.d)
        }
    }
}

/// Splits a nonzero integer as `s² · r` with `r` squarefree, `s > 0`.
pub fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_zero());
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut m = n.abs();
    let mut sq = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2u32);
    let cap = BigInt::from(1_000_000u32);
    while &p * &p * &p <= m && p <= cap {
        if (&m % &p).is_zero() {
            let mut e = 0u32;
            while (&m % &p).is_zero() {
                m /= &p;
                e += 1;
            }
            sq *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= &p;
            }
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if !m.is_one() {
        let r = m.sqrt();
        if &r * &r == m {
            sq *= r;
        } else if &p * &p * &p > m {
            free *= m;
        } else {
            let (s2, f2) = large_squarefree_split(&m);
            sq *= s2;
            free *= f2;
        }
    }
    (sq, sign * free)
}

fn large_squarefree_split(m: &BigInt) -> (BigInt, BigInt) {
    let u = m.to_biguint().expect("positive");
    let factors = num_prime::nt_funcs::factorize(u);
    let mut sq = BigInt::one();
    let mut free = BigInt::one();
    for (p, e) in factors {
        let p = BigInt::from(p);
        sq *= p.pow((e / 2) as u32);
        if e % 2 == 1 {
            free *= p;
        }
    }
    (sq, free)
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        let mag = self.b.abs();
        let coef = if mag.is_one() {
            String::new()
        } else {
            format!("{mag}*")
        };
        if self.a.is_zero() {
            let lead = if sign == '-' { "-" } else { "" };
            write!(f, "{lead}{coef}sqrt({})", self.d)
        } else {
            write!(f, "{} {sign} {coef}sqrt({})", self.a, self.d)
        }
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surd({self})")
    }
}

impl Add<&Surd> for Surd {
    type Output = Surd;
    fn add(self, rhs: &Surd) -> Surd {
        let d = self.common_d(rhs);
        Surd::raw(self.a + &rhs.a, self.b + &rhs.b, d)
    }
}
impl Sub<&Surd> for Surd {
    type Output = Surd;
    fn sub(self, rhs: &Surd) -> Surd {
        let d = self.common_d(rhs);
        Surd::raw(self.a - &rhs.a, self.b - &rhs.b, d)
    }
}
impl Mul<&Surd> for Surd {
    type Output = Surd;
    fn mul(self, rhs: &Surd) -> Surd {
        let d = self.common_d(rhs);
        let dr = Rat::from_integer(d.clone());
        let a = &self.a * &rhs.a + &self.b * &rhs.b * dr;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Surd::raw(a, b, d)
    }
}
impl Div<&Surd> for Surd {
    type Output = Surd;
    fn div(self, rhs: &Surd) -> Surd {
        self * &rhs.inv()
    }
}
impl Add for Surd {
    type Output = Surd;
    fn add(self, rhs: Surd) -> Surd {
        self + &rhs
    }
}
impl Sub for Surd {
    type Output = Surd;
    fn sub(self, rhs: Surd) -> Surd {
        self - &rhs
    }
}
impl Mul for Surd {
    type Output = Surd;
    fn mul(self, rhs: Surd) -> Surd {
        self * &rhs
    }
}
impl Div for Surd {
    type Output = Surd;
    fn div(self, rhs: Surd) -> Surd {
        self / &rhs
    }
}
impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Surd {
    fn raw(a: Rat, b: Rat, d: BigInt) -> Surd {
        if b.is_zero() {
            Surd::rational(a)
        } else {
            Surd { a, b, d }
        }
    }
}

impl Zero for Surd {
    fn zero() -> Self {
        Surd::rational(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Surd {
    fn one() -> Self {
        Surd::rational(Rat::one())
    }
}

impl Ring for Surd {
    fn from_i64(n: i64) -> Self {
        Surd::rational(Rat::from_integer(n.into()))
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self.clone() / rhs
    }
}

impl Field for Surd {
    fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero");
        Surd::raw(&self.a / &n, -(&self.b / &n), self.d.clone())
    }
    fn from_rat(r: &Rat) -> Self {
        Surd::rational(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::{int, rat};

    #[test]
    fn split_pulls_squares() {
        assert_eq!(
            squarefree_split(&BigInt::from(4000)),
            (BigInt::from(20), BigInt::from(10))
        );
        assert_eq!(
            squarefree_split(&BigInt::from(-12)),
            (BigInt::from(2), BigInt::from(-3))
        );
        let big = BigInt::from(1_000_003u64) * BigInt::from(1_000_003u64) * BigInt::from(7);
        assert_eq!(squarefree_split(&big), (BigInt::from(1_000_003u64), BigInt::from(7)));
    }

    #[test]
    fn arithmetic_in_a_fixed_field() {
        let s = Surd::new(int(1), int(1), BigInt::from(2));
        let prod = s.clone() * s.conj();
        assert_eq!(prod, Surd::rational(int(-1)));
        assert_eq!(s.clone() * s.inv(), Surd::one());
        let sq = s.clone() * &s;
        assert_eq!(sq, Surd::new(int(3), int(2), BigInt::from(2)));
        let r = Surd::with_radicand(rat(175, 54), rat(1, 108), &BigInt::from(4000));
        assert_eq!(r.b(), &rat(20, 108));
        assert_eq!(r.radicand(), &BigInt::from(10));
    }

    #[test]
    fn negative_radicand() {
        let i = Surd::new(int(0), int(1), BigInt::from(-1));
        assert_eq!(i.clone() * &i, Surd::rational(int(-1)));
        assert_eq!(i.to_string(), "sqrt(-1)");
    }

    #[test]
    #[should_panic(expected = "radicands differ")]
    fn mixing_radicands_panics() {
        let a = Surd::new(int(0), int(1), BigInt::from(2));
        let b = Surd::new(int(0), int(1), BigInt::from(3));
        let _ = a + b;
    }
}
