use crate::error::{Error, Result};
use crate::exactnum::linalg::{discriminant_in_param, minimal_polynomial_mod};
use crate::exactnum::{locate_roots, Field, Poly, Rat, Root, Surd};

use super::{P1Point, RatMap, P1};

/// Critical values of a map: the finite ones as the roots of a monic
/// squarefree polynomial in the value variable, plus a flag for ∞.
///
/// Over a parameter field this describes the generic member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalData<F: Field> {
    pub finite: Poly<F>,
    pub infinity: bool,
    /// `deg finite + [infinity]`.
    pub count: usize,
}

impl<F: Field> CriticalData<F> {
    pub fn new(finite: Poly<F>, infinity: bool) -> Self {
        let finite = finite.squarefree_part();
        let count = finite.deg0() + usize::from(infinity);
        CriticalData {
            finite,
            infinity,
            count,
        }
    }
}

/// Explicit critical values of a map over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalValues {
    /// Rational and quadratic values (both conjugates listed), then ∞.
    pub points: Vec<P1Point>,
    /// Irreducible blocks of degree ≥ 3 whose roots are critical values.
    pub unresolved: Vec<Poly<Rat>>,
}

impl CriticalValues {
    pub fn count(&self) -> usize {
        self.points.len() + self.unresolved.iter().map(|p| p.deg0()).sum::<usize>()
    }
}

impl CriticalData<Rat> {
    pub fn values(&self) -> CriticalValues {
        let loc = locate_roots(&self.finite);
        let mut points = Vec::new();
        for (root, _) in loc.roots {
            match root {
                Root::Rational(r) => points.push(P1Point::rational(r)),
                Root::Conjugates(s) => {
                    points.push(P1::Finite(s.conj()));
                    points.push(P1::Finite(s));
                }
            }
        }
        points.sort_by(|a, b| a.report_cmp(b));
        if self.infinity {
            points.push(P1::Infinity);
        }
        CriticalValues {
            points,
            unresolved: loc.unresolved.into_iter().map(|(p, _)| p).collect(),
        }
    }
}

fn lcm<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    (a * b).div_by(&a.gcd(b)).monic()
}

/// Inverse of `a` modulo `m`, if they are coprime.
pub(crate) fn inverse_mod<F: Field>(a: &Poly<F>, m: &Poly<F>) -> Option<Poly<F>> {
    let (mut r0, mut r1) = (m.clone(), a.rem(m));
    let (mut t0, mut t1) = (Poly::<F>::zero(), Poly::<F>::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let t = t0 - &(q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    if !r0.is_constant() {
        return None;
    }
    Some(t0.scale(&r0.lc().inv()).rem(m))
}

/// Critical values from the critical points.
///
/// Finite critical points away from the poles are the roots of the
/// Wronskian `A′B − AB′`; their values are the roots of the minimal
/// polynomial of `A/B` modulo its squarefree part. A pole is critical iff
/// it is a repeated root of `B`, which is iff it is also a root of the
/// Wronskian. The point `z = ∞` is inspected directly.
pub fn critical_data<F: Field>(r: &RatMap<F>) -> CriticalData<F> {
    let (a, b) = (r.num(), r.den());
    let d = r.degree();
    let w = a.derivative() * b - &(a * &b.derivative());
    let s = w.squarefree_part();
    let s_pole = s.gcd(b);
    let s_fin = s.div_by(&s_pole);
    let h = (a * &inverse_mod(b, &s_fin).expect("poles removed")).rem(&s_fin);
    let mut finite = minimal_polynomial_mod(&h, &s_fin);
    let mut infinity = !s_pole.is_constant();

    let (da, db) = (a.deg0(), b.deg0());
    if da > db {
        infinity |= da - db >= 2;
    } else if da < db {
        if db - da >= 2 {
            finite = lcm(&finite, &Poly::x());
        }
    } else {
        let c_inf = a.lc() / b.lc();
        let rest = a.clone() - &b.scale(&c_inf);
        if d - rest.deg0() >= 2 {
            finite = lcm(&finite, &Poly::new(vec![-c_inf, F::one()]));
        }
    }
    CriticalData::new(finite, infinity)
}

/// Discriminant route: `D(c)` is the discriminant of `A − cB` taken with
/// formal degree `deg R`, i.e. the discriminant of the binary form whose
/// roots are the full fibre including `z = ∞`. Returns `(D, finite)` with
/// `finite` the monic squarefree part of `D`.
pub fn discriminant_route<F: Field>(r: &RatMap<F>) -> (Poly<F>, Poly<F>) {
    let d = r.degree();
    if d < 2 {
        return (Poly::one(), Poly::one());
    }
    let g: Poly<Poly<F>> = Poly::new(
        (0..=d)
            .map(|k| Poly::new(vec![r.num().coeff(k), -r.den().coeff(k)]))
            .collect(),
    );
    let disc = discriminant_in_param(&g, d);
    let fin = disc.squarefree_part();
    (disc, fin)
}

/// Ramification profile over `c0`, weakly decreasing.
pub fn passport_at<F: Field>(r: &RatMap<F>, c0: &P1<F>) -> Vec<usize> {
    let d = r.degree();
    let (g, extra) = match c0 {
        P1::Finite(c) => {
            let g = r.num().clone() - &r.den().scale(c);
            let e = d - g.deg0();
            (g, e)
        }
        P1::Infinity => {
            let e = r.num().deg0().saturating_sub(r.den().deg0());
            (r.den().clone(), e)
        }
    };
    let mut parts = Vec::with_capacity(d);
    for (f, m) in g.squarefree_decomposition() {
        parts.extend(std::iter::repeat(m).take(f.deg0()));
    }
    parts.extend(std::iter::repeat(1).take(g.deg0() - parts.iter().sum::<usize>()));
    if extra > 0 {
        parts.push(extra);
    }
    parts.sort_unstable_by(|x, y| y.cmp(x));
    parts
}

/// Number of distinct points over `c0`.
pub fn fiber_size<F: Field>(r: &RatMap<F>, c0: &P1<F>) -> usize {
    passport_at(r, c0).len()
}

/// Filtration level and the classes it places the map in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub level: usize,
    pub belyi: bool,
    pub fried: bool,
}

impl Classification {
    pub fn from_level(level: usize) -> Self {
        Classification {
            level,
            belyi: level <= 3,
            fried: level <= 4,
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self.level {
            0 => "isomorphism",
            1 => "impossible",
            2 => "cyclic",
            3 => "belyi",
            4 => "fried",
            _ => "general",
        }
    }
}

/// `#CritVal`; every critical value is counted once even when it is not
/// located explicitly, because the finite part is squarefree.
pub fn filtration_level(r: &RatMap<Rat>) -> Result<Classification> {
    let cd = critical_data(r);
    recheck_fibers(r, &cd)?;
    Ok(Classification::from_level(cd.count))
}

/// Confirms every located critical value has a short fibre.
fn recheck_fibers(r: &RatMap<Rat>, cd: &CriticalData<Rat>) -> Result<()> {
    let d = r.degree();
    let vals = cd.values();
    let sr = r.to_surd();
    for v in &vals.points {
        let n = match v {
            P1::Finite(s) if s.is_rational() => fiber_size(r, &P1::Finite(s.a().clone())),
            _ => fiber_size(&sr, v),
        };
        if n >= d {
            return Err(Error::BookkeepingFailure(format!(
                "value {v} has a full fibre of {n} points"
            )));
        }
    }
    Ok(())
}

/// Full passport of a map over the rationals.
pub fn passport(r: &RatMap<Rat>) -> Result<Vec<(P1Point, Vec<usize>)>> {
    let vals = critical_data(r).values();
    if let Some(p) = vals.unresolved.first() {
        return Err(Error::UnresolvedBlock {
            degree: p.deg0(),
            poly: p.display_in("c"),
        });
    }
    let sr: RatMap<Surd> = r.to_surd();
    Ok(vals
        .points
        .into_iter()
        .map(|v| {
            let parts = passport_at(&sr, &v);
            (v, parts)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, RatFunc, Ring};
    use crate::ratmap::deg3_family;

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_ints(c)
    }

    fn map(n: &[i64], d: &[i64]) -> RatMap<Rat> {
        RatMap::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn power_map_has_two_values() {
        for d in 2..7 {
            let mut c = vec![0; d + 1];
            c[d] = 1;
            let cd = critical_data(&map(&c, &[1]));
            assert_eq!(cd.finite, p(&[0, 1]));
            assert!(cd.infinity);
            assert_eq!(cd.count, 2);
        }
    }

    #[test]
    fn identity_has_none() {
        assert_eq!(critical_data(&map(&[0, 1], &[1])).count, 0);
    }

    #[test]
    fn lambda_nine_member() {
        let r = map(&[0, 0, 1, 1], &[1, 9]);
        let cd = critical_data(&r);
        assert_eq!(cd.finite, p(&[0, 1]) * Poly::new(vec![rat(1, 27), int(1)]));
        assert!(cd.infinity);
        let v = cd.values();
        assert_eq!(
            v.points,
            vec![P1Point::rational(rat(-1, 27)), P1Point::rational(int(0)), P1::Infinity]
        );
        assert_eq!(filtration_level(&r).unwrap().level, 3);
    }

    #[test]
    fn generic_member_matches_quadratic() {
        let lam = RatFunc::param();
        let r = deg3_family(&lam).unwrap();
        let cd = critical_data(&r);
        // c · (4λ³c² + (λ²+18λ−27)c + 4), made monic.
        let four_l3 = RatFunc::from_poly(p(&[0, 0, 0, 4]));
        let mid = RatFunc::from_poly(p(&[-27, 18, 1]));
        let q = Poly::new(vec![RatFunc::from_i64(0), RatFunc::from_i64(4), mid, four_l3]);
        assert_eq!(cd.finite, q.monic());
        assert!(cd.infinity);
        assert_eq!(discriminant_route(&r).1, cd.finite);
    }

    #[test]
    fn passports_of_lambda_nine() {
        let r = map(&[0, 0, 1, 1], &[1, 9]);
        let pp = passport(&r).unwrap();
        assert_eq!(pp[0].1, vec![3]);
        assert_eq!(pp[1].1, vec![2, 1]);
        assert_eq!(pp[2].1, vec![2, 1]);
    }

    #[test]
    fn wronskian_and_discriminant_routes_agree() {
        let maps = [
            map(&[1, 2, 0, 3], &[5, 0, 1]),
            map(&[0, 0, 0, 0, 1], &[1, 1]),
            map(&[3, 1], &[0, 0, 0, 1]),
            map(&[1, 0, 2, 0, 1], &[0, 1, 0, 1]),
        ];
        for r in maps {
            let cd = critical_data(&r);
            let (_, fin) = discriminant_route(&r);
            assert_eq!(fin, cd.finite, "{r}");
        }
    }
}
