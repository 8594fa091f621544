//! Base-side constructions: cross-ratios, the j-invariant of four points,
//! and the Belyi function on the base of a Fried family.

mod beta;
mod boxed;

pub use beta::{
    beta_bas_exact, beta_bas_is_belyi, beta_bas_sampled_verify, compare_with_box,
    elimination_degree_bound, k3_dependence, sample_parameters, BelyiReport, BetaExact,
    BoxComparison, SampledReport, DEFAULT_DEGREE_BUDGET,
};
pub use boxed::{boxed_formula, BoxKind, BoxedFormula};

use crate::error::{Error, Result};
use crate::exactnum::{Field, Poly};
use crate::ratmap::{CriticalData, P1};

/// `⟨a,b,c,d⟩ = (a−c)/(b−c) · (b−d)/(a−d)`; an infinite argument cancels
/// the two factors that contain it.
pub fn cross_ratio<F: Field>(a: &P1<F>, b: &P1<F>, c: &P1<F>, d: &P1<F>) -> Result<P1<F>> {
    let pts = [a, b, c, d];
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i] == pts[j] {
                return Err(Error::CoincidentPoints);
            }
        }
    }
    let diff = |x: &P1<F>, y: &P1<F>| -> Option<F> {
        match (x, y) {
            (P1::Finite(x), P1::Finite(y)) => Some(x.clone() - y),
            _ => None,
        }
    };
    // Factors touching the infinite point drop out in pairs.
    let factors = [(a, c, true), (b, c, false), (b, d, true), (a, d, false)];
    let mut num = F::one();
    let mut den = F::one();
    for (x, y, upper) in factors {
        if let Some(v) = diff(x, y) {
            if upper {
                num = num * &v;
            } else {
                den = den * &v;
            }
        }
    }
    Ok(P1::Finite(num / den))
}

/// The values `t, 1/t, 1−t, 1/(1−t), t/(t−1), (t−1)/t` with repeats removed,
/// in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossRatioOrbit<F> {
    pub values: Vec<F>,
}

pub fn cross_ratio_orbit<F: Field>(t: &P1<F>) -> Result<CrossRatioOrbit<F>> {
    let t = match t {
        P1::Finite(t) if !t.is_zero() && !t.is_one() => t.clone(),
        other => return Err(Error::DegenerateValue(other.to_string())),
    };
    let one = F::one();
    let all = [
        t.clone(),
        one.clone() / &t,
        one.clone() - &t,
        one.clone() / (one.clone() - &t),
        t.clone() / (t.clone() - &one),
        (t.clone() - &one) / &t,
    ];
    let mut values: Vec<F> = Vec::with_capacity(6);
    for v in all {
        if !values.contains(&v) {
            values.push(v);
        }
    }
    Ok(CrossRatioOrbit { values })
}

/// Four distinct points of the line as the roots of a binary quartic
/// `aX⁴ + bX³Y + cX²Y² + dXY³ + eY⁴`; a root at ∞ is a factor `Y`.
///
/// Conjugate pairs enter through their sum and product, so a quadruple
/// with irrational members stays over the base field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadruple<F> {
    form: [F; 5],
}

fn form_mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + &(x.clone() * y);
        }
    }
    out
}

impl<F: Field> Quadruple<F> {
    /// `points` plus at most one pair given as `(e₁, e₂) = (r₁+r₂, r₁r₂)`.
    pub fn new(points: &[P1<F>], pair: Option<(F, F)>) -> Result<Self> {
        let mut form = vec![F::one()];
        for p in points {
            let lin = match p {
                P1::Finite(r) => vec![F::one(), -r.clone()],
                P1::Infinity => vec![F::zero(), F::one()],
            };
            form = form_mul(&form, &lin);
        }
        if let Some((e1, e2)) = pair {
            form = form_mul(&form, &[F::one(), -e1, e2]);
        }
        if form.len() != 5 {
            return Err(Error::NotFourValues(form.len() - 1));
        }
        Self::from_form(form)
    }

    /// The critical quadruple of a map with exactly four critical values.
    pub fn from_critical(cd: &CriticalData<F>) -> Result<Self> {
        if cd.count != 4 {
            return Err(Error::NotFourValues(cd.count));
        }
        let p: &Poly<F> = &cd.finite;
        let mut form = vec![F::zero(); 4 - p.deg0()];
        // A root at ∞ is the leading zero.
        form.extend((0..=p.deg0()).rev().map(|k| p.coeff(k)));
        Self::from_form(form)
    }

    fn from_form(form: Vec<F>) -> Result<Self> {
        let form: [F; 5] = form.try_into().map_err(|_| Error::NotFourValues(0))?;
        let q = Quadruple { form };
        if q.delta().is_zero() {
            return Err(Error::CoincidentPoints);
        }
        Ok(q)
    }

    pub fn form(&self) -> &[F; 5] {
        &self.form
    }

    /// `I = 12ae − 3bd + c²`.
    pub fn invariant_i(&self) -> F {
        let [a, b, c, d, e] = &self.form;
        F::from_i64(12) * a * e - F::from_i64(3) * b * d + c.clone() * c
    }

    /// `J = 72ace + 9bcd − 27ad² − 27eb² − 2c³`.
    pub fn invariant_j(&self) -> F {
        let [a, b, c, d, e] = &self.form;
        F::from_i64(72) * a * c * e + F::from_i64(9) * b * c * d
            - F::from_i64(27) * a * d * d
            - F::from_i64(27) * e * b * b
            - F::from_i64(2) * c * c * c
    }

    /// `4I³ − J²`, which is 27 times the discriminant of the form.
    fn delta(&self) -> F {
        let i = self.invariant_i();
        let j = self.invariant_j();
        F::from_i64(4) * &i * &i * &i - j.clone() * &j
    }
}

/// `j = 6912 I³ / (4I³ − J²)`; equals `256(t²−t+1)³/(t²(t−1)²)` for any
/// cross-ratio `t` of the four points.
pub fn j_of_quadruple<F: Field>(q: &Quadruple<F>) -> F {
    let i = q.invariant_i();
    F::from_i64(6912) * &i * &i * &i / q.delta()
}

/// `256(t²−t+1)³/(t²(t−1)²)`.
pub fn legendre_j<F: Field>(t: &F) -> Result<F> {
    let one = F::one();
    let den = t.clone() * t * &(t.clone() - &one) * &(t.clone() - &one);
    if den.is_zero() {
        return Err(Error::DegenerateValue(t.to_string()));
    }
    let q = t.clone() * t - t + &one;
    Ok(F::from_i64(256) * &q * &q * &q / den)
}

/// j of `{∞, 0, r₁, r₂}` from `e₁ = r₁ + r₂`, `e₂ = r₁r₂`: with
/// `s = e₁²/e₂ − 2 = t + 1/t` for `t = r₂/r₁`, `j = 256(s−1)³/(s−2)`.
pub fn j_from_pair<F: Field>(e1: &F, e2: &F) -> Result<F> {
    if e2.is_zero() {
        return Err(Error::CoincidentPoints);
    }
    let s = e1.clone() * e1 / e2.clone() - F::from_i64(2);
    let den = s.clone() - F::from_i64(2);
    if den.is_zero() {
        return Err(Error::CoincidentPoints);
    }
    let m = s - F::one();
    Ok(F::from_i64(256) * &m * &m * &m / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, Rat, RatFunc};
    use num_traits::{One, Zero};

    fn fin(r: Rat) -> P1<Rat> {
        P1::Finite(r)
    }

    #[test]
    fn cross_ratio_limits() {
        let (r1, r2) = (int(3), int(-5));
        let t = cross_ratio(&P1::Infinity, &fin(int(0)), &fin(r1.clone()), &fin(r2.clone())).unwrap();
        assert_eq!(t, fin(r2 / r1));
        let t = cross_ratio(&fin(int(0)), &fin(int(1)), &fin(int(7)), &P1::Infinity).unwrap();
        assert_eq!(t, fin(rat(7, 6)));
        assert_eq!(
            cross_ratio(&fin(int(1)), &fin(int(1)), &fin(int(2)), &fin(int(3))),
            Err(Error::CoincidentPoints)
        );
    }

    #[test]
    fn orbits() {
        let h = cross_ratio_orbit(&fin(int(-1))).unwrap();
        assert_eq!(h.values, vec![int(-1), int(2), rat(1, 2)]);
        let o = cross_ratio_orbit(&fin(int(3))).unwrap();
        let mut v = o.values.clone();
        v.sort();
        assert_eq!(v, vec![int(-2), rat(-1, 2), rat(1, 3), rat(2, 3), rat(3, 2), int(3)]);
        for x in &o.values {
            let mut w = cross_ratio_orbit(&fin(x.clone())).unwrap().values;
            w.sort();
            assert_eq!(w, v);
        }
        assert!(matches!(cross_ratio_orbit(&fin(int(1))), Err(Error::DegenerateValue(_))));
        assert!(cross_ratio_orbit::<Rat>(&P1::Infinity).is_err());
    }

    #[test]
    fn legendre_quadruple() {
        let t = RatFunc::param();
        let pts = [P1::Infinity, P1::Finite(RatFunc::zero()), P1::Finite(RatFunc::one()), P1::Finite(t.clone())];
        let q = Quadruple::new(&pts, None).unwrap();
        assert_eq!(j_of_quadruple(&q), legendre_j(&t).unwrap());
        let h = Quadruple::new(&[P1::Infinity, fin(int(0)), fin(int(1)), fin(int(-1))], None).unwrap();
        assert_eq!(j_of_quadruple(&h), int(1728));
    }

    #[test]
    fn pair_formula_agrees_with_the_modular_map() {
        // s = t + 1/t turns 256(t²−t+1)³/(t²(t−1)²) into 256(s−1)³/(s−2).
        let t = RatFunc::param();
        let e1 = t.clone() + RatFunc::one();
        let e2 = t.clone();
        assert_eq!(j_from_pair(&e1, &e2).unwrap(), legendre_j(&t).unwrap());
        let q = Quadruple::new(&[P1::Infinity, P1::Finite(RatFunc::zero())], Some((e1, e2))).unwrap();
        assert_eq!(j_of_quadruple(&q), legendre_j(&t).unwrap());
    }

    #[test]
    fn spot_value_of_the_degree_three_box() {
        // −4R² − 44R + 4 at λ = −1: e₁ = −11, e₂ = −1.
        assert_eq!(j_from_pair(&int(-11), &int(-1)).unwrap(), rat(488095744, 125));
    }
}
