//! Arbitrary-precision rationals.
//!
//! [`Rat`] is `num_rational::BigRational`: always reduced, denominator
//! positive, structural equality. This module adds the [`Ring`]/[`Field`]
//! impls and a few helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Ring};
use super::poly::Poly;

pub type Rat = num_rational::BigRational;

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Serialized form used in reports: always `num/den`.
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `n`, `-n` or `n/d`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

impl Ring for Rat {
    fn from_i64(n: i64) -> Self {
        int(n)
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl Field for Rat {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        primitive_prs_gcd(a, b)
    }
}

/// Integer content and primitive integer form of a rational polynomial:
/// returns `(scale, coeffs)` with `p = scale * coeffs`, `coeffs` primitive
/// with positive leading coefficient.
pub fn primitive_part(p: &Poly<Rat>) -> (Rat, Vec<BigInt>) {
    if p.is_zero() {
        return (Rat::zero(), vec![]);
    }
    let lcm_den = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rat::from_integer(lcm_den.clone())).to_integer())
        .collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if ints.last().map(|c| c.is_negative()).unwrap_or(false) {
        g = -g;
    }
    let prim: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
    (Rat::new(g, lcm_den), prim)
}

fn int_poly_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        while r.last().map(|c| c.is_zero()).unwrap_or(false) {
            r.pop();
        }
    }
    r
}

fn make_primitive(v: &mut Vec<BigInt>) {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c /= &g;
        }
    }
}

/// Monic gcd over Q computed with the primitive remainder sequence in Z[x].
fn primitive_prs_gcd(a: &Poly<Rat>, b: &Poly<Rat>) -> Poly<Rat> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let (_, mut x) = primitive_part(a);
    let (_, mut y) = primitive_part(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return Poly::one();
        }
        let mut r = int_poly_pseudo_rem(&x, &y);
        make_primitive(&mut r);
        x = y;
        y = r;
    }
    Poly::new(x.into_iter().map(Rat::from_integer).collect()).monic()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rat("-3/6"), Some(rat(-1, 2)));
        assert_eq!(parse_rat("7"), Some(int(7)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(rat_to_string(&int(5)), "5/1");
        assert_eq!(rat_to_string(&rat(2, -4)), "-1/2");
    }

    #[test]
    fn primitive_part_reassembles() {
        let p = Poly::new(vec![rat(1, 2), rat(-3, 4), rat(3, 2)]);
        let (s, v) = primitive_part(&p);
        let back = Poly::new(v.into_iter().map(Rat::from_integer).collect()).scale(&s);
        assert_eq!(back, p);
    }
}
