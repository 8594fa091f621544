//! Functions `Φ = u(x) + v(x)·y` on hyperelliptic curves `y² = f(x)`.

mod families;
mod local;

pub use families::{
    builtin_families, canonical_name, member, power_family, FamilyInfo, FamilyKind, FamilyMember,
};

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::linalg::{discriminant_in_param, minimal_polynomial_mod};
use crate::exactnum::{Field, Poly, Rat, RatFunc, Surd};
use crate::ratmap::{CriticalData, P1Point, P1};

use local::split_by_order;

/// `y² = f(x)` with `f` squarefree of degree at least 3.
#[derive(Clone, PartialEq, Eq)]
pub struct HyperCurve<F: Field> {
    f: Poly<F>,
}

impl<F: Field> HyperCurve<F> {
    pub fn new(f: Poly<F>) -> Result<Self> {
        if f.deg0() < 3 {
            return Err(Error::OutOfRange(format!("curve needs deg f >= 3, got {}", f.deg0())));
        }
        if f.discriminant().is_zero() {
            return Err(Error::OutOfRange("f is not squarefree".into()));
        }
        Ok(HyperCurve { f })
    }

    pub fn f(&self) -> &Poly<F> {
        &self.f
    }

    pub fn genus(&self) -> usize {
        (self.f.deg0() - 1) / 2
    }

    /// One point over `x = ∞` for odd `deg f`, two for even.
    pub fn points_at_infinity(&self) -> usize {
        if self.f.deg0() % 2 == 1 {
            1
        } else {
            2
        }
    }
}

/// `Φ = u + v·y` of a declared degree.
#[derive(Clone, PartialEq, Eq)]
pub struct HyperMap<F: Field> {
    curve: HyperCurve<F>,
    u: Poly<F>,
    v: Poly<F>,
    degree: usize,
}

/// `G_c(x) = (c − u)² − v²f` with coefficients in `F[c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberData<F: Field> {
    pub g: Poly<Poly<F>>,
    /// `deg_x G_c` for transcendental `c`.
    pub generic_degree: usize,
    /// Fibre points over `x = ∞` for transcendental `c`; always 0 because
    /// `Φ` is constant or a pole at each point over `x = ∞`.
    pub infinity_bookkeeping: usize,
}

impl<F: Field> HyperMap<F> {
    /// Checks the declared degree against the elimination.
    pub fn new(curve: HyperCurve<F>, u: Poly<F>, v: Poly<F>, declared: usize) -> Result<Self> {
        if v.is_zero() && u.is_constant() {
            return Err(Error::ConstantMap);
        }
        let map = HyperMap {
            curve,
            u,
            v,
            degree: declared,
        };
        let generic = if map.v.is_zero() {
            2 * map.u.deg0()
        } else {
            map.fiber_g().deg0()
        };
        if generic != declared {
            return Err(Error::DegreeMismatch {
                declared,
                generic,
                infinity: 0,
            });
        }
        Ok(map)
    }

    pub fn curve(&self) -> &HyperCurve<F> {
        &self.curve
    }
    pub fn u(&self) -> &Poly<F> {
        &self.u
    }
    pub fn v(&self) -> &Poly<F> {
        &self.v
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn genus(&self) -> usize {
        self.curve.genus()
    }

    fn fiber_g(&self) -> Poly<Poly<F>> {
        let base = self.u.clone() * &self.u - &(self.v.clone() * &self.v * self.curve.f());
        let n = base.deg0().max(self.u.deg0());
        Poly::new(
            (0..=n)
                .map(|k| {
                    let mut c = vec![base.coeff(k), -(self.u.coeff(k) + &self.u.coeff(k))];
                    if k == 0 {
                        c.push(F::one());
                    }
                    Poly::new(c)
                })
                .collect(),
        )
    }

    pub fn fiber_polynomial(&self) -> Result<FiberData<F>> {
        if self.v.is_zero() {
            return Err(Error::VZeroPath);
        }
        let g = self.fiber_g();
        let generic_degree = g.deg0();
        Ok(FiberData {
            g,
            generic_degree,
            infinity_bookkeeping: 0,
        })
    }

    /// `G_{c0}(x)`, or `u − c0` on the `v = 0` path.
    pub fn fiber_at(&self, c0: &F) -> Poly<F> {
        if self.v.is_zero() {
            return self.u.clone() - &Poly::constant(c0.clone());
        }
        let cu = Poly::constant(c0.clone()) - &self.u;
        cu.clone() * &cu - &(self.v.clone() * &self.v * self.curve.f())
    }

    /// Pole orders at the points over `x = ∞`.
    pub fn infinity_partition(&self) -> Vec<usize> {
        let d = self.degree;
        let df = self.curve.f.deg0();
        if df % 2 == 1 {
            return vec![d];
        }
        if self.v.is_zero() {
            let n = self.u.deg0();
            return vec![n, n];
        }
        let m = self.u.deg0().max(self.v.deg0() + df / 2);
        let mut parts = vec![m];
        if d > m {
            parts.push(d - m);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    /// Roots of `v` that are not branch points, as a monic squarefree
    /// polynomial.
    fn plain_v_roots(&self) -> Poly<F> {
        if self.v.is_constant() {
            return Poly::one();
        }
        let sv = self.v.squarefree_part();
        sv.div_by(&sv.gcd(self.curve.f()))
    }

    /// Candidate critical values before spurious factors are removed.
    fn critical_core(&self) -> (Poly<F>, Poly<F>, bool) {
        let infinity = self.infinity_partition().len() < self.degree;
        if self.v.is_zero() {
            let branch = minimal_polynomial_mod(&self.u, &self.curve.f);
            let up = self.u.derivative();
            let own = if up.is_constant() {
                Poly::one()
            } else {
                minimal_polynomial_mod(&self.u, &up.squarefree_part())
            };
            let finite = (branch * &own).squarefree_part();
            return (finite, Poly::one(), infinity);
        }
        let g = self.fiber_g();
        let d = g.deg0();
        let disc = discriminant_in_param(&g, d).squarefree_part();
        let pv = self.plain_v_roots();
        let sp = minimal_polynomial_mod(&self.u, &pv);
        let cand = disc.gcd(&sp);
        (disc, cand, infinity)
    }

    /// Ramification profile over `c0`, weakly decreasing.
    pub fn passport_at(&self, c0: &P1<F>) -> Result<Vec<usize>> {
        let d = self.degree;
        let c = match c0 {
            P1::Infinity => return Ok(self.infinity_partition()),
            P1::Finite(c) => c,
        };
        let g0 = self.fiber_at(c);
        let mut parts = Vec::with_capacity(d);
        if self.v.is_zero() {
            for (g, m) in g0.squarefree_decomposition() {
                let on_f = g.gcd(self.curve.f()).deg0();
                parts.extend(std::iter::repeat(2 * m).take(on_f));
                parts.extend(std::iter::repeat(m).take(2 * (g.deg0() - on_f)));
            }
        } else {
            let order_poly = (Poly::constant(c.clone()) - &self.u).gcd(&self.v);
            for (g, m) in g0.squarefree_decomposition() {
                let gv = g.gcd(&self.v);
                let t = gv.div_by(&gv.gcd(self.curve.f()));
                let other = g.div_by(&t).deg0();
                parts.extend(std::iter::repeat(m).take(other));
                for (piece, k) in split_by_order(&t, &order_poly) {
                    if k == 0 || 2 * k > m {
                        return Err(Error::BookkeepingFailure(format!(
                            "order {k} of c - u against multiplicity {m} at a root of v"
                        )));
                    }
                    for _ in 0..piece.deg0() {
                        parts.push(k);
                        parts.push(m - k);
                    }
                }
            }
            let extra = d - g0.deg0();
            if extra > 0 {
                parts.push(extra);
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.iter().sum::<usize>() != d {
            return Err(Error::BookkeepingFailure(format!(
                "profile {parts:?} over {} does not sum to {d}",
                c
            )));
        }
        Ok(parts)
    }

    pub fn map_coeffs<G: Field>(&self, h: impl Fn(&F) -> G) -> Result<HyperMap<G>> {
        let curve = HyperCurve::new(self.curve.f.map(&h))?;
        HyperMap::new(curve, self.u.map(&h), self.v.map(&h), self.degree)
    }

    pub fn display_in(&self, x: &str) -> String {
        let phi = if self.v.is_zero() {
            self.u.display_in(x)
        } else {
            format!("{} + ({})*y", self.u.display_in(x), self.v.display_in(x))
        };
        format!("Phi = {phi} on y^2 = {}", self.curve.f.display_in(x))
    }
}

impl<F: Field> fmt::Debug for HyperMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HyperMap({}, degree {})", self.display_in("x"), self.degree)
    }
}

/// Coefficient fields on which spurious candidates can be decided.
pub trait HyperField: Field {
    /// Returns the factor of `cand` whose roots are genuine critical values.
    fn genuine_part(map: &HyperMap<Self>, cand: &Poly<Self>) -> Result<Poly<Self>>;
}

impl HyperField for Rat {
    fn genuine_part(map: &HyperMap<Rat>, cand: &Poly<Rat>) -> Result<Poly<Rat>> {
        let mut keep = Poly::one();
        let surd_map = map.map_coeffs(|c| Surd::rational(c.clone()))?;
        let loc = crate::exactnum::locate_roots(cand);
        if let Some((block, _)) = loc.unresolved.first() {
            return Err(Error::UnresolvedBlock {
                degree: block.deg0(),
                poly: block.display_in("c"),
            });
        }
        for (root, _) in loc.roots {
            match root {
                crate::exactnum::Root::Rational(r) => {
                    if map.passport_at(&P1::Finite(r.clone()))?.len() < map.degree {
                        keep = keep * Poly::new(vec![-r, Rat::from_integer(1.into())]);
                    }
                }
                crate::exactnum::Root::Conjugates(s) => {
                    if surd_map.passport_at(&P1::Finite(s.clone()))?.len() < map.degree {
                        let sum = s.a() * Rat::from_integer(2.into());
                        let prod = s.norm();
                        keep = keep * Poly::new(vec![prod, -sum, Rat::from_integer(1.into())]);
                    }
                }
            }
        }
        Ok(keep)
    }
}

impl HyperField for RatFunc {
    /// Ramification only grows under specialization, so a candidate that is
    /// unramified at one good rational parameter is unramified generically.
    fn genuine_part(map: &HyperMap<RatFunc>, cand: &Poly<RatFunc>) -> Result<Poly<RatFunc>> {
        if cand.is_constant() {
            return Ok(Poly::one());
        }
        for k in 2..40i64 {
            let t = Rat::new(k.into(), 3.into());
            let Some(m0) = specialize_map(map, &t) else {
                continue;
            };
            let Some(c0) = specialize_poly(cand, &t) else {
                continue;
            };
            if c0.deg0() != cand.deg0() || !c0.is_squarefree() {
                continue;
            }
            let Ok(kept) = Rat::genuine_part(&m0, &c0) else {
                continue;
            };
            if kept.is_constant() {
                return Ok(Poly::one());
            }
            if kept.deg0() == c0.deg0() {
                return Ok(cand.clone());
            }
        }
        Err(Error::BookkeepingFailure(
            "no specialization separated the candidates at roots of v".into(),
        ))
    }
}

pub(crate) fn specialize_poly(p: &Poly<RatFunc>, t: &Rat) -> Option<Poly<Rat>> {
    let c: Option<Vec<Rat>> = p.coeffs().iter().map(|c| c.eval(t)).collect();
    c.map(Poly::new)
}

pub(crate) fn specialize_map(map: &HyperMap<RatFunc>, t: &Rat) -> Option<HyperMap<Rat>> {
    let f = specialize_poly(map.curve.f(), t)?;
    let u = specialize_poly(&map.u, t)?;
    let v = specialize_poly(&map.v, t)?;
    HyperMap::new(HyperCurve::new(f).ok()?, u, v, map.degree).ok()
}

impl<F: HyperField> HyperMap<F> {
    /// Critical values: roots of the squarefree discriminant of `G_c` with
    /// the unramified values at roots of `v` removed, plus ∞ when the pole
    /// profile is short.
    pub fn critical_values(&self) -> Result<CriticalData<F>> {
        let (disc, cand, infinity) = self.critical_core();
        if cand.is_constant() {
            return Ok(CriticalData::new(disc, infinity));
        }
        let genuine = F::genuine_part(self, &cand)?;
        let spurious = cand.div_by(&genuine);
        Ok(CriticalData::new(disc.div_by(&spurious), infinity))
    }
}

/// Ramification profiles over every critical value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Passport {
    pub degree: usize,
    pub entries: Vec<(P1Point, Vec<usize>)>,
}

impl Passport {
    /// Profile over a value that is not critical.
    pub fn generic(&self) -> Vec<usize> {
        vec![1; self.degree]
    }
}

/// Riemann–Hurwitz count `2g − 2 = −2d + Σ (d − #parts)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiemannHurwitz {
    pub genus: usize,
    pub degree: usize,
    /// Number of fibre points over each critical value.
    pub alphas: Vec<usize>,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

impl HyperMap<Rat> {
    pub fn passport(&self) -> Result<Passport> {
        let vals = self.critical_values()?.values();
        if let Some(p) = vals.unresolved.first() {
            return Err(Error::UnresolvedBlock {
                degree: p.deg0(),
                poly: p.display_in("c"),
            });
        }
        let surd_map = self.map_coeffs(|c| Surd::rational(c.clone()))?;
        let mut entries = Vec::new();
        for v in vals.points {
            let parts = match v.as_rational() {
                Some(r) => self.passport_at(&P1::Finite(r.clone()))?,
                None => surd_map.passport_at(&v)?,
            };
            entries.push((v, parts));
        }
        Ok(Passport {
            degree: self.degree,
            entries,
        })
    }

    pub fn riemann_hurwitz(&self) -> Result<RiemannHurwitz> {
        let pp = self.passport()?;
        Ok(riemann_hurwitz(self.genus(), &pp))
    }
}

pub fn riemann_hurwitz(genus: usize, pp: &Passport) -> RiemannHurwitz {
    let d = pp.degree as i64;
    let alphas: Vec<usize> = pp.entries.iter().map(|(_, p)| p.len()).collect();
    let rhs = -2 * d + alphas.iter().map(|&a| d - a as i64).sum::<i64>();
    let lhs = 2 * genus as i64 - 2;
    RiemannHurwitz {
        genus,
        degree: pp.degree,
        alphas,
        lhs,
        rhs,
        pass: lhs == rhs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_ints(c)
    }

    fn power(g: usize) -> HyperMap<Rat> {
        power_family(g).unwrap()
    }

    #[test]
    fn fiber_of_the_genus_one_power_curve() {
        let fd = power(1).fiber_polynomial().unwrap();
        // c² − 1 + x³
        let expect: Poly<Poly<Rat>> = Poly::new(vec![p(&[-1, 0, 1]), p(&[]), p(&[]), p(&[1])]);
        assert_eq!(fd.g, expect);
        assert_eq!(fd.generic_degree, 3);
        assert_eq!(fd.infinity_bookkeeping, 0);
    }

    #[test]
    fn power_curves_are_belyi() {
        for g in 1..=4 {
            let m = power(g);
            assert_eq!(m.degree(), 2 * g + 1);
            let cv = m.critical_values().unwrap().values();
            assert_eq!(
                cv.points,
                vec![P1Point::rational(int(-1)), P1Point::rational(int(1)), P1::Infinity]
            );
            let pp = m.passport().unwrap();
            for (_, parts) in &pp.entries {
                assert_eq!(parts, &vec![2 * g + 1]);
            }
            assert!(m.riemann_hurwitz().unwrap().pass);
        }
    }

    #[test]
    fn legendre_branch_points() {
        let FamilyMember::Hyper(m) = member("legendre", &int(5)).unwrap() else {
            panic!("legendre is hyperelliptic");
        };
        let cv = m.critical_values().unwrap().values();
        assert_eq!(
            cv.points,
            vec![
                P1Point::rational(int(0)),
                P1Point::rational(int(1)),
                P1Point::rational(int(5)),
                P1::Infinity
            ]
        );
        assert_eq!(m.passport().unwrap().entries[0].1, vec![2]);
        assert!(m.riemann_hurwitz().unwrap().pass);
        assert_eq!(m.fiber_polynomial().unwrap_err(), Error::VZeroPath);
    }

    #[test]
    fn declared_degree_is_checked() {
        let curve = HyperCurve::new(p(&[1, 0, 0, -1])).unwrap();
        let err = HyperMap::new(curve, Poly::zero(), Poly::one(), 4).unwrap_err();
        assert_eq!(
            err,
            Error::DegreeMismatch {
                declared: 4,
                generic: 3,
                infinity: 0
            }
        );
    }

    #[test]
    fn cubic_family_at_zero() {
        let FamilyMember::Hyper(m) = member("d3g1", &int(0)).unwrap() else {
            panic!()
        };
        assert_eq!(m.passport_at(&P1::Finite(int(0))).unwrap(), vec![3]);
        assert_eq!(m.critical_values().unwrap().count, 3);
        assert!(m.riemann_hurwitz().unwrap().pass);
        let FamilyMember::Hyper(half) = member("d3g1", &rat(1, 2)).unwrap() else {
            panic!()
        };
        assert_eq!(half.critical_values().unwrap().count, 4);
    }
}
