//! Rational maps of the projective line.

mod critical;
mod divisor;
mod families;
mod moebius;
mod point;

pub use critical::{
    critical_data, discriminant_route, filtration_level, passport, passport_at, Classification,
    CriticalData, CriticalValues,
};
pub use divisor::{divisor, DivisorSupport};
pub use families::{deg3_family, deg4_involution, deg4_map, deg4_weight_action, hurwitz_dims};
pub use moebius::Moebius;
pub use point::{P1Point, P1};

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{Field, Poly, Rat, Surd};

/// A nonconstant map `num/den` with coprime parts and monic `den`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMap<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatMap<F> {
    /// Reduces `num/den`; errors if the quotient is constant.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        let f = Self::reduce(num, den)?;
        if f.num.is_constant() && f.den.is_constant() {
            return Err(Error::ConstantMap);
        }
        Ok(f)
    }

    /// Like [`RatMap::new`] but also accepts nonzero constants.
    pub fn function(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        Self::reduce(num, den)
    }

    fn reduce(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() || num.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_by(&g), den.div_by(&g))
        };
        let inv = den.lc().inv();
        Ok(RatMap {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn polynomial(p: Poly<F>) -> Result<Self> {
        Self::new(p, Poly::one())
    }

    pub fn identity() -> Self {
        RatMap {
            num: Poly::x(),
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }
    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.num.deg0().max(self.den.deg0())
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    /// Value at a point of the projective line.
    pub fn eval(&self, z: &P1<F>) -> P1<F> {
        match z {
            P1::Finite(z) => {
                let d = self.den.eval(z);
                if d.is_zero() {
                    P1::Infinity
                } else {
                    P1::Finite(self.num.eval(z) / d)
                }
            }
            P1::Infinity => {
                let (n, d) = (self.num.deg0(), self.den.deg0());
                if n > d {
                    P1::Infinity
                } else if n < d {
                    P1::Finite(F::zero())
                } else {
                    P1::Finite(self.num.lc() / self.den.lc())
                }
            }
        }
    }

    pub fn add_constant(&self, a: &F) -> Self {
        RatMap {
            num: self.num.clone() + &self.den.scale(a),
            den: self.den.clone(),
        }
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &RatMap<F>) -> Result<Self> {
        let d = self.degree();
        let hom = |p: &Poly<F>| {
            p.coeffs()
                .iter()
                .enumerate()
                .fold(Poly::zero(), |acc, (i, c)| {
                    acc + &(g.num.pow(i as u32) * g.den.pow((d - i) as u32)).scale(c)
                })
        };
        Self::function(hom(&self.num), hom(&self.den))
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> RatMap<G> {
        RatMap {
            num: self.num.map(&f),
            den: self.den.map(&f),
        }
    }

    pub fn display_in(&self, var: &str) -> String {
        let n = self.num.display_in(var);
        if self.den.is_constant() && self.den.lc().is_one() {
            return n;
        }
        format!("({n})/({})", self.den.display_in(var))
    }
}

impl RatMap<Rat> {
    pub fn to_surd(&self) -> RatMap<Surd> {
        self.map_coeffs(|c| Surd::rational(c.clone()))
    }
}

impl<F: Field> fmt::Display for RatMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("z"))
    }
}

impl<F: Field> fmt::Debug for RatMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMap({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, Ring};

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_ints(c)
    }

    #[test]
    fn degree_examples() {
        assert_eq!(RatMap::polynomial(p(&[0, 0, 0, 0, 0, 1])).unwrap().degree(), 5);
        let s = int(7);
        let inner = Poly::new(vec![int(8), int(20), int(15), s]);
        let phi = RatMap::new(inner.pow(2), p(&[1, 1]).pow(5).scale(&int(64))).unwrap();
        assert_eq!(phi.degree(), 6);
    }

    #[test]
    fn constant_quotient_is_rejected() {
        let z2 = p(&[0, 0, 1]);
        assert_eq!(RatMap::new(z2.clone(), z2).unwrap_err(), Error::ConstantMap);
    }

    #[test]
    fn compose_with_identity() {
        let r = RatMap::new(p(&[0, 0, 1, 1]), p(&[1, 9])).unwrap();
        assert_eq!(r.compose(&RatMap::identity()).unwrap(), r);
        let inv = RatMap::new(p(&[1]), p(&[0, 1])).unwrap();
        let back = r.compose(&inv).unwrap().compose(&inv).unwrap();
        assert_eq!(back, r);
        assert_eq!(r.eval(&P1::Finite(Rat::from_i64(-1))), P1::Finite(int(0)));
    }
}
