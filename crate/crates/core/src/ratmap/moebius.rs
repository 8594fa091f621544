use crate::error::{Error, Result};
use crate::exactnum::{Field, Poly};

use super::{RatMap, P1};

/// `z ↦ (az + b)/(cz + d)` with `ad − bc ≠ 0`, scaled so that the first
/// nonzero entry of `(a, b, c, d)` is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Moebius<F> {
    a: F,
    b: F,
    c: F,
    d: F,
}

impl<F: Field> Moebius<F> {
    pub fn new(a: F, b: F, c: F, d: F) -> Result<Self> {
        if (a.clone() * &d - b.clone() * &c).is_zero() {
            return Err(Error::OutOfRange("singular fractional-linear map".into()));
        }
        let lead = [&a, &b, &c, &d]
            .into_iter()
            .find(|x| !x.is_zero())
            .expect("nonsingular")
            .inv();
        Ok(Moebius {
            a: a * &lead,
            b: b * &lead,
            c: c * &lead,
            d: d * &lead,
        })
    }

    pub fn entries(&self) -> [&F; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn inverse(&self) -> Self {
        Moebius::new(self.d.clone(), -self.b.clone(), -self.c.clone(), self.a.clone())
            .expect("inverse of a nonsingular map")
    }

    pub fn apply(&self, z: &P1<F>) -> P1<F> {
        match z {
            P1::Infinity => {
                if self.c.is_zero() {
                    P1::Infinity
                } else {
                    P1::Finite(self.a.clone() / &self.c)
                }
            }
            P1::Finite(z) => {
                let den = self.c.clone() * z + &self.d;
                if den.is_zero() {
                    P1::Infinity
                } else {
                    P1::Finite((self.a.clone() * z + &self.b) / den)
                }
            }
        }
    }

    /// `T ∘ R`.
    pub fn post(&self, r: &RatMap<F>) -> RatMap<F> {
        let num = r.num().scale(&self.a) + &r.den().scale(&self.b);
        let den = r.num().scale(&self.c) + &r.den().scale(&self.d);
        RatMap::new(num, den).expect("degree is preserved")
    }

    /// `R ∘ T`.
    pub fn pre(&self, r: &RatMap<F>) -> RatMap<F> {
        let n = r.degree();
        let h = |p: &Poly<F>| p.homogeneous_substitute(n, &self.a, &self.b, &self.c, &self.d);
        RatMap::new(h(r.num()), h(r.den())).expect("degree is preserved")
    }
}
