use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use num_traits::Zero;

use crate::exactnum::{Poly, Rat, RatFunc};
use crate::hypercurve::{member, FamilyMember};
use crate::ratmap::{critical_data, filtration_level, CriticalData, P1Point, RatMap};

use super::boxed::{BoxKind, BoxedFormula};
use super::{j_of_quadruple, legendre_j, Quadruple};

/// Largest elimination estimate attempted symbolically by default.
pub const DEFAULT_DEGREE_BUDGET: usize = 64;

/// Parameter degree of `q·L` where `L` clears all denominators.
fn param_degree<'a>(coeffs: impl Iterator<Item = &'a RatFunc> + Clone) -> usize {
    let l = coeffs.clone().fold(Poly::<Rat>::one(), |acc, c| {
        let g = acc.gcd(c.den());
        acc.clone() * c.den().div_by(&g)
    });
    coeffs
        .map(|c| (c.num().clone() * l.div_by(c.den())).deg0())
        .max()
        .unwrap_or(0)
}

/// Bound on the parameter degree of the (primitive) critical polynomial of
/// the generic member: the discriminant of a degree-`n` fibre polynomial
/// whose coefficients have parameter degree `e` has parameter degree at
/// most `(2n − 1)e`, and so has every factor of it.
pub fn elimination_degree_bound(m: &FamilyMember<RatFunc>) -> usize {
    let (n, e) = match m {
        FamilyMember::Rational(r) => {
            let e = param_degree(r.num().coeffs().iter().chain(r.den().coeffs()));
            (r.degree(), e)
        }
        FamilyMember::Hyper(h) => match h.fiber_polynomial() {
            Ok(fd) => {
                let all: Vec<RatFunc> = fd
                    .g
                    .coeffs()
                    .iter()
                    .flat_map(|p| p.coeffs().iter().cloned())
                    .collect();
                (fd.generic_degree, param_degree(all.iter()))
            }
            Err(_) => {
                let f = h.curve().f();
                let e = param_degree(f.coeffs().iter().chain(h.u().coeffs()));
                (f.deg0() + h.u().deg0(), e)
            }
        },
    };
    (2 * n - 1) * e.max(1)
}

/// `β_bas` of the generic member as an exact rational function.
#[derive(Clone, Debug)]
pub struct BetaExact {
    pub family: String,
    pub value: RatFunc,
    pub critical: CriticalData<RatFunc>,
    pub estimate: usize,
    pub budget: usize,
}

/// j of the generic critical quadruple, through the invariants of the
/// binary quartic; no roots are extracted.
pub fn beta_bas_exact(family: &str, budget: usize) -> Result<BetaExact> {
    let m = member(family, &RatFunc::param())?;
    let estimate = elimination_degree_bound(&m);
    if estimate > budget {
        return Err(Error::DegreeBudgetExceeded { estimate, budget });
    }
    let critical = m.critical_values()?;
    let q = Quadruple::from_critical(&critical)?;
    Ok(BetaExact {
        family: family.to_string(),
        value: j_of_quadruple(&q),
        critical,
        estimate,
        budget,
    })
}

/// The j-normalized target of a printed formula.
fn target(boxed: &BoxedFormula) -> Result<RatFunc> {
    match boxed.kind {
        BoxKind::JInvariant => Ok(boxed.value.clone()),
        BoxKind::CrossRatio => legendre_j(&boxed.value),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxComparison {
    pub equal: bool,
    /// `β_bas / target` when it is a constant.
    pub ratio: Option<Rat>,
    /// For cross-ratio formulas: whether the formula is itself a root of
    /// the generic critical polynomial.
    pub is_critical_value: Option<bool>,
}

pub fn compare_with_box(beta: &BetaExact, boxed: &BoxedFormula) -> Result<BoxComparison> {
    let t = target(boxed)?;
    let equal = beta.value == t;
    let q = beta.value.clone() / t;
    let ratio = if q.num().is_constant() && q.den().is_constant() {
        Some(q.num().lc() / q.den().lc())
    } else {
        None
    };
    let is_critical_value = match boxed.kind {
        BoxKind::JInvariant => None,
        BoxKind::CrossRatio => Some(beta.critical.finite.eval(&boxed.value).is_zero()),
    };
    Ok(BoxComparison {
        equal,
        ratio,
        is_critical_value,
    })
}

/// Rationals in order of height `max(|a|, b)`, then by `a`.
pub fn sample_parameters() -> impl Iterator<Item = Rat> {
    (1i64..).flat_map(|h| {
        (-h..=h).flat_map(move |a| {
            (1..=h).filter_map(move |b| {
                let fresh = a.abs().max(b) == h && a.gcd(&b) == 1;
                fresh.then(|| Rat::new(BigInt::from(a), BigInt::from(b)))
            })
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledReport {
    pub family: String,
    /// Agreement at more than this many parameters proves the identity.
    pub bound: usize,
    pub requested: usize,
    pub agreed: Vec<Rat>,
    pub skipped: Vec<(Rat, String)>,
    pub mismatch: Option<Rat>,
    pub pass: bool,
}

enum Sample {
    Agree,
    Disagree,
    Skip(String),
}

fn evaluate(family: &str, boxed: &BoxedFormula, t: &RatFunc, p: &Rat) -> Sample {
    if boxed.excluded.contains(p) {
        return Sample::Skip("outside the domain".into());
    }
    let Some(expected) = t.eval(p) else {
        return Sample::Skip("pole of the candidate".into());
    };
    let m = match member(family, p) {
        Ok(m) => m,
        Err(e) => return Sample::Skip(e.to_string()),
    };
    let cd = match m.critical_values() {
        Ok(cd) => cd,
        Err(e) => return Sample::Skip(e.to_string()),
    };
    let q = match Quadruple::from_critical(&cd) {
        Ok(q) => q,
        Err(e) => return Sample::Skip(e.to_string()),
    };
    if j_of_quadruple(&q) == expected {
        Sample::Agree
    } else {
        Sample::Disagree
    }
}

/// Exact comparison at `n` good rational parameters.
///
/// Both sides are rational functions of bounded degree, so agreement at
/// more points than `bound` is a proof of equality. A parameter is good
/// when the member has exactly four critical values and the candidate is
/// finite there; other parameters are skipped and replaced.
pub fn beta_bas_sampled_verify(
    family: &str,
    candidate: &BoxedFormula,
    n: usize,
) -> Result<SampledReport> {
    let generic = member(family, &RatFunc::param())?;
    let t = target(candidate)?;
    let bound = 6 * elimination_degree_bound(&generic) + t.num().deg0().max(t.den().deg0());
    if n <= bound {
        return Err(Error::InsufficientSamples { given: n, bound });
    }
    let mut report = SampledReport {
        family: family.to_string(),
        bound,
        requested: n,
        agreed: Vec::new(),
        skipped: Vec::new(),
        mismatch: None,
        pass: false,
    };
    let mut stream = sample_parameters();
    while report.agreed.len() < n && report.mismatch.is_none() {
        let batch: Vec<Rat> = stream.by_ref().take(n - report.agreed.len() + 8).collect();
        let results: Vec<Sample> = batch
            .par_iter()
            .map(|p| evaluate(family, candidate, &t, p))
            .collect();
        for (p, r) in batch.into_iter().zip(results) {
            match r {
                Sample::Agree if report.agreed.len() < n => report.agreed.push(p),
                Sample::Agree => {}
                Sample::Disagree => {
                    report.mismatch = Some(p);
                    break;
                }
                Sample::Skip(why) => report.skipped.push((p, why)),
            }
        }
    }
    report.pass = report.mismatch.is_none() && report.agreed.len() > bound;
    Ok(report)
}

/// Every exponent of the parameter in the reduced formula is a multiple of 3.
pub fn k3_dependence(formula: &BoxedFormula) -> Result<bool> {
    if formula.family != "d3g1" {
        return Err(Error::WrongFamily(formula.family.to_string()));
    }
    let ok = |p: &Poly<Rat>| {
        p.coeffs()
            .iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || k % 3 == 0)
    };
    Ok(ok(formula.value.num()) && ok(formula.value.den()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BelyiReport {
    pub level: usize,
    pub belyi: bool,
    pub values: Vec<P1Point>,
}

/// Filtration level of a printed formula viewed as a map of the line.
pub fn beta_bas_is_belyi(formula: &BoxedFormula) -> Result<BelyiReport> {
    let r = RatMap::new(formula.value.num().clone(), formula.value.den().clone())?;
    let cls = filtration_level(&r)?;
    let vals = critical_data(&r).values();
    if let Some(p) = vals.unresolved.first() {
        return Err(Error::UnresolvedBlock {
            degree: p.deg0(),
            poly: p.display_in("c"),
        });
    }
    Ok(BelyiReport {
        level: cls.level,
        belyi: cls.belyi,
        values: vals.points,
    })
}
