//! The rational function field `Q(t)` in one parameter.
//!
//! The parameter's name is not stored here; families carry it and pass it
//! to [`RatFunc::display_in`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{Field, Ring};
use super::poly::Poly;
use super::rat::Rat;

/// `num/den` with coprime parts and monic `den`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly<Rat>,
    den: Poly<Rat>,
}

impl RatFunc {
    /// Panics if `den` is zero.
    pub fn new(num: Poly<Rat>, den: Poly<Rat>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::from_poly(Poly::zero());
        }
        let g = if den.is_constant() { Poly::one() } else { num.gcd(&den) };
        let (mut n, mut d) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_by(&g), den.div_by(&g))
        };
        let l = d.lc();
        if !l.is_one() {
            let inv = l.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RatFunc { num: n, den: d }
    }

    pub fn from_poly(p: Poly<Rat>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    /// The parameter itself.
    pub fn param() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn constant(r: Rat) -> Self {
        Self::from_poly(Poly::constant(r))
    }

    pub fn num(&self) -> &Poly<Rat> {
        &self.num
    }
    pub fn den(&self) -> &Poly<Rat> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Value at `t = a`; `None` at a pole.
    pub fn eval(&self, a: &Rat) -> Option<Rat> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(a) / d)
    }

    /// `max(deg num, deg den)`.
    pub fn degree(&self) -> usize {
        self.num.deg0().max(self.den.deg0())
    }

    pub fn display_in(&self, var: &str) -> String {
        let n = self.num.display_in(var);
        if self.den.is_constant() {
            return n;
        }
        let n = if self.num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
            format!("({n})")
        } else {
            n
        };
        format!("{n}/({})", self.den.display_in(var))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            if self.den.is_constant() {
                return RatFunc::from_poly(self.num + &rhs.num);
            }
            return RatFunc::new(self.num + &rhs.num, self.den);
        }
        RatFunc::new(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}
impl Sub<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs.clone())
    }
}
impl Mul<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.den.is_constant() && rhs.den.is_constant() {
            return RatFunc::from_poly(self.num * &rhs.num);
        }
        RatFunc::new(self.num * &rhs.num, self.den * &rhs.den)
    }
}
impl Div<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.num.is_zero(), "division by zero");
        RatFunc::new(self.num * &rhs.den, self.den * &rhs.num)
    }
}
impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        self + &rhs
    }
}
impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self - &rhs
    }
}
impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        self * &rhs
    }
}
impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: RatFunc) -> RatFunc {
        self / &rhs
    }
}
impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
}

impl Ring for RatFunc {
    fn from_i64(n: i64) -> Self {
        Self::from_poly(Poly::from_i64(n))
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self.clone() / rhs
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Self {
        RatFunc::one() / self
    }
    fn from_rat(r: &Rat) -> Self {
        Self::constant(r.clone())
    }
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        prs_gcd(a, b)
    }

    /// Clears denominators row by row and runs Bareiss over `Q[t]`.
    fn determinant(m: Vec<Vec<Self>>) -> Self {
        let mut scale = Poly::<Rat>::one();
        let rows: Vec<Vec<Poly<Rat>>> = m
            .iter()
            .map(|row| {
                let l = row.iter().fold(Poly::<Rat>::one(), |acc, c| {
                    let g = acc.gcd(&c.den);
                    acc.clone() * c.den.div_by(&g)
                });
                scale = scale.clone() * &l;
                row.iter().map(|c| c.num.clone() * l.div_by(&c.den)).collect()
            })
            .collect();
        RatFunc::new(super::linalg::det_bareiss(rows), scale)
    }
}

/// Clears denominators: `p = q / l` with `q` over `Q[t]`.
fn to_polynomial(p: &Poly<RatFunc>) -> Poly<Poly<Rat>> {
    let l = p
        .coeffs()
        .iter()
        .fold(Poly::<Rat>::one(), |acc, c| {
            let g = acc.gcd(&c.den);
            acc.clone() * c.den.div_by(&g)
        });
    Poly::new(
        p.coeffs()
            .iter()
            .map(|c| c.num.clone() * l.div_by(&c.den))
            .collect(),
    )
}

fn primitive(p: Poly<Poly<Rat>>) -> Poly<Poly<Rat>> {
    let content = p
        .coeffs()
        .iter()
        .fold(Poly::<Rat>::zero(), |acc, c| acc.gcd(c));
    if content.is_constant() {
        return p;
    }
    Poly::new(p.coeffs().iter().map(|c| c.div_by(&content)).collect())
}

/// `lc(b)^(deg a − deg b + 1) · a mod b` over `Q[t]`.
fn pseudo_rem(a: &Poly<Poly<Rat>>, b: &Poly<Poly<Rat>>) -> Poly<Poly<Rat>> {
    let lb = b.lc();
    let db = b.deg0();
    let mut r = a.clone();
    while !r.is_zero() && r.deg0() >= db {
        let k = r.deg0() - db;
        let lr = r.lc();
        r = r.scale(&lb) - &b.scale(&lr).shift(k);
    }
    r
}

/// Primitive remainder sequence over `Q[t]`; avoids the coefficient
/// growth of Euclid over `Q(t)`.
fn prs_gcd(a: &Poly<RatFunc>, b: &Poly<RatFunc>) -> Poly<RatFunc> {
    if b.is_zero() {
        return if a.is_zero() { Poly::zero() } else { a.monic() };
    }
    if a.is_zero() {
        return b.monic();
    }
    let (mut x, mut y) = (primitive(to_polynomial(a)), primitive(to_polynomial(b)));
    if x.deg0() < y.deg0() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = if r.is_zero() { r } else { primitive(r) };
    }
    x.map(|c| RatFunc::from_poly(c.clone())).monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::int;

    #[test]
    fn normalizes_on_construction() {
        let t = RatFunc::param();
        let one = RatFunc::one();
        let x = (t.clone() * &t - &one) / (t.clone() * RatFunc::from_i64(2) - RatFunc::from_i64(2));
        assert_eq!(x.num(), &Poly::from_ints(&[1, 1]).scale(&num_rational::BigRational::new(1.into(), 2.into())));
        assert_eq!(x.den(), &Poly::one());
        assert_eq!(x.eval(&int(3)), Some(int(2)));
    }

    #[test]
    fn gcd_over_the_parameter_field() {
        let t = Poly::constant(RatFunc::param());
        let x: Poly<RatFunc> = Poly::x();
        let half = RatFunc::constant(Rat::new(1.into(), 2.into()));
        // (x − t)(x + 1/2) and (x − t)(t x − 1)
        let common = x.clone() - &t;
        let a = common.clone() * (x.clone() + &Poly::constant(half));
        let b = common.clone() * (x.clone() * &t - &Poly::one());
        assert_eq!(a.gcd(&b), common);
        assert_eq!(a.gcd(&Poly::constant(RatFunc::from_i64(3))), Poly::one());
        assert_eq!(Poly::euclid_gcd(&a, &b), a.gcd(&b));
    }

    #[test]
    fn determinant_matches_elimination() {
        let t = RatFunc::param();
        let one = RatFunc::one();
        let m = vec![
            vec![t.clone(), one.clone() / &t, RatFunc::from_i64(2)],
            vec![one.clone(), t.clone() * &t, one.clone() / (t.clone() - &one)],
            vec![RatFunc::from_i64(-3), one.clone(), t.clone()],
        ];
        assert_eq!(RatFunc::determinant(m.clone()), crate::exactnum::linalg::det(m));
    }

    #[test]
    fn displays_in_named_parameter() {
        let t = RatFunc::param();
        let x = RatFunc::one() / (t.clone() * &t - RatFunc::one());
        assert_eq!(x.display_in("k"), "1/(k^2 - 1)");
    }
}
