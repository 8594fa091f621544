use crate::error::{Error, Result};
use crate::exactnum::{Field, Poly, Rat};
use crate::ratmap::{critical_data, deg3_family, CriticalData, RatMap};

use super::{HyperCurve, HyperField, HyperMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Rational,
    Hyperelliptic,
}

/// Static description of a one-parameter family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInfo {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub param: &'static str,
    pub kind: FamilyKind,
    pub degree: usize,
    pub genus: usize,
    pub domain: &'static str,
}

pub fn builtin_families() -> Vec<FamilyInfo> {
    vec![
        FamilyInfo {
            name: "d3g0",
            aliases: &[],
            param: "lambda",
            kind: FamilyKind::Rational,
            degree: 3,
            genus: 0,
            domain: "lambda != 0, 1",
        },
        FamilyInfo {
            name: "d3g1",
            aliases: &[],
            param: "k",
            kind: FamilyKind::Hyperelliptic,
            degree: 3,
            genus: 1,
            domain: "4k^3 != 1",
        },
        FamilyInfo {
            name: "d5g2",
            aliases: &["birch"],
            param: "p",
            kind: FamilyKind::Hyperelliptic,
            degree: 5,
            genus: 2,
            domain: "disc f_p != 0, i.e. p != 0, 2, -5/2",
        },
        FamilyInfo {
            name: "sekividu",
            aliases: &[],
            param: "s",
            kind: FamilyKind::Rational,
            degree: 6,
            genus: 0,
            domain: "s != 3",
        },
        FamilyInfo {
            name: "legendre",
            aliases: &[],
            param: "t",
            kind: FamilyKind::Hyperelliptic,
            degree: 2,
            genus: 1,
            domain: "t != 0, 1",
        },
    ]
}

/// Canonical name of a family or alias.
pub fn canonical_name(name: &str) -> Result<&'static str> {
    builtin_families()
        .into_iter()
        .find(|f| f.name == name || f.aliases.contains(&name))
        .map(|f| f.name)
        .ok_or_else(|| Error::UnknownFamily(name.to_string()))
}

/// A member of a registered family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyMember<F: Field> {
    Rational(RatMap<F>),
    Hyper(HyperMap<F>),
}

impl<F: Field> FamilyMember<F> {
    pub fn degree(&self) -> usize {
        match self {
            FamilyMember::Rational(r) => r.degree(),
            FamilyMember::Hyper(h) => h.degree(),
        }
    }

    pub fn genus(&self) -> usize {
        match self {
            FamilyMember::Rational(_) => 0,
            FamilyMember::Hyper(h) => h.genus(),
        }
    }

    pub fn display(&self) -> String {
        match self {
            FamilyMember::Rational(r) => format!("Phi = {}", r.display_in("x")),
            FamilyMember::Hyper(h) => h.display_in("x"),
        }
    }
}

impl<F: HyperField> FamilyMember<F> {
    pub fn critical_values(&self) -> Result<CriticalData<F>> {
        match self {
            FamilyMember::Rational(r) => Ok(critical_data(r)),
            FamilyMember::Hyper(h) => h.critical_values(),
        }
    }
}

fn c<F: Field>(n: i64, d: i64) -> F {
    F::from_rat(&Rat::new(n.into(), d.into()))
}

fn degenerate<F: Field>(family: &str, t: &F, reason: &str) -> Error {
    Error::DegenerateParameter {
        family: family.into(),
        value: t.to_string(),
        reason: reason.into(),
    }
}

/// Member at parameter value `t` (a rational, or the generic parameter).
pub fn member<F: Field>(name: &str, t: &F) -> Result<FamilyMember<F>> {
    match canonical_name(name)? {
        "d3g0" => Ok(FamilyMember::Rational(deg3_family(t)?)),
        "d3g1" => cubic_member(t).map(FamilyMember::Hyper),
        "d5g2" => quintic_member(t).map(FamilyMember::Hyper),
        "sekividu" => sextic_member(t).map(FamilyMember::Rational),
        "legendre" => legendre_member(t).map(FamilyMember::Hyper),
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

/// `y² = (1 + kx)² + x³/27`, `Φ = y − kx − 1`.
fn cubic_member<F: Field>(k: &F) -> Result<HyperMap<F>> {
    let k3 = k.clone() * k * k;
    if (k3.clone() + &k3 + &k3 + &k3).is_one() {
        return Err(degenerate("d3g1", k, "4k^3 = 1 makes the curve singular"));
    }
    let f = Poly::new(vec![F::one(), k.clone() + k, k.clone() * k, c(1, 27)]);
    let u = Poly::new(vec![-F::one(), -k.clone()]);
    let curve = HyperCurve::new(f)
        .map_err(|_| degenerate("d3g1", k, "the curve is singular"))?;
    HyperMap::new(curve, u, Poly::one(), 3)
}

/// Degree-5 family on genus-2 curves; `p = −2` is Birch's example.
fn quintic_member<F: Field>(p: &F) -> Result<HyperMap<F>> {
    let q = |a: i64, b: i64, cst: i64| -> F {
        // (a p² + b p + cst) / 4
        (c::<F>(a, 4) * p * p) + &(c::<F>(b, 4) * p) + &c::<F>(cst, 4)
    };
    let p2 = p.clone() * p;
    let p3 = p2.clone() * p;
    let u = Poly::new(vec![
        F::one(),
        -q(0, 15, 20),
        q(10, 20, 20),
        q(10, 20, 20),
        -q(0, 15, 20),
        F::one(),
    ]);
    let v = Poly::new(vec![F::one(), -q(0, 8, 12), F::one()]);
    let e5 = -(c::<F>(7, 2) * p + &c::<F>(4, 1));
    let e4 = c::<F>(17, 16) * &p2 - &(c::<F>(3, 2) * p);
    let e3 = c::<F>(-1, 2) * &p3 + &(c::<F>(7, 8) * &p2) + &(c::<F>(4, 1) * p) + &c::<F>(10, 1);
    let f = Poly::new(vec![
        F::one(),
        e5.clone(),
        e4.clone(),
        e3,
        e4,
        e5,
        F::one(),
    ]);
    let curve =
        HyperCurve::new(f).map_err(|_| degenerate("d5g2", p, "the curve is singular"))?;
    HyperMap::new(curve, u, v, 5)
}

/// `(s x³ + 15x² + 20x + 8)² / (64 (x + 1)⁵)`.
fn sextic_member<F: Field>(s: &F) -> Result<RatMap<F>> {
    if (s.clone() - &c::<F>(3, 1)).is_zero() {
        return Err(degenerate("sekividu", s, "numerator and denominator share x = -1"));
    }
    let inner = Poly::new(vec![c(8, 1), c(20, 1), c(15, 1), s.clone()]);
    let den = Poly::new(vec![F::one(), F::one()]).pow(5).scale(&c(64, 1));
    RatMap::new(inner.pow(2), den)
}

/// `y² = x(x − 1)(x − t)`, `Φ = x`.
fn legendre_member<F: Field>(t: &F) -> Result<HyperMap<F>> {
    if t.is_zero() || t.is_one() {
        return Err(degenerate("legendre", t, "branch points collide"));
    }
    let f = Poly::new(vec![F::zero(), -F::one(), F::one()]) * Poly::new(vec![-t.clone(), F::one()]);
    HyperMap::new(HyperCurve::new(f)?, Poly::x(), Poly::zero(), 2)
}

/// `y² = 1 − x^(2g+1)`, `Φ = y`, of degree `2g + 1`.
pub fn power_family(g: usize) -> Result<HyperMap<Rat>> {
    if g == 0 {
        return Err(Error::OutOfRange("genus must be at least 1".into()));
    }
    let n = 2 * g + 1;
    let f = Poly::constant(c::<Rat>(1, 1)) - &Poly::monomial(c(1, 1), n);
    HyperMap::new(HyperCurve::new(f)?, Poly::zero(), Poly::one(), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, RatFunc};
    use crate::ratmap::{P1Point, P1};

    fn hyper(name: &str, t: Rat) -> HyperMap<Rat> {
        match member(name, &t).unwrap() {
            FamilyMember::Hyper(h) => h,
            FamilyMember::Rational(_) => panic!("{name} is hyperelliptic"),
        }
    }

    #[test]
    fn birch_specialization_matches_the_classical_example() {
        let m = hyper("birch", int(-2));
        assert_eq!(m.u(), &Poly::new(vec![int(1), rat(5, 2), int(5), int(5), rat(5, 2), int(1)]));
        assert_eq!(m.v(), &Poly::from_ints(&[1, 1, 1]));
        assert_eq!(
            m.curve().f(),
            &Poly::new(vec![int(1), int(3), rat(29, 4), rat(19, 2), rat(29, 4), int(3), int(1)])
        );
    }

    #[test]
    fn birch_has_three_critical_values() {
        let m = hyper("d5g2", int(-2));
        let cv = m.critical_values().unwrap().values();
        assert_eq!(
            cv.points,
            vec![P1Point::rational(int(0)), P1Point::rational(int(1)), P1::Infinity]
        );
        assert!(m.riemann_hurwitz().unwrap().pass);
    }

    #[test]
    fn quintic_generic_member_has_four_values() {
        let m = hyper("d5g2", int(1));
        assert_eq!(m.critical_values().unwrap().count, 4);
        assert!(m.riemann_hurwitz().unwrap().pass);
    }

    #[test]
    fn singular_quintic_members() {
        for p in [int(0), int(2), rat(-5, 2)] {
            assert!(matches!(
                member("d5g2", &p),
                Err(Error::DegenerateParameter { .. })
            ));
        }
    }

    #[test]
    fn sextic_family() {
        assert!(member("sekividu", &int(3)).is_err());
        let FamilyMember::Rational(r) = member("sekividu", &int(0)).unwrap() else {
            panic!()
        };
        assert_eq!(r.degree(), 5);
        let generic = member("sekividu", &RatFunc::param()).unwrap();
        assert_eq!(generic.critical_values().unwrap().count, 4);
    }

    #[test]
    fn cubic_generic_member() {
        let m = member("d3g1", &RatFunc::param()).unwrap();
        let cd = m.critical_values().unwrap();
        assert_eq!(cd.count, 4);
        assert!(cd.infinity);
    }

    #[test]
    fn unknown_family() {
        assert_eq!(
            member("nope", &int(1)).unwrap_err(),
            Error::UnknownFamily("nope".into())
        );
    }
}
