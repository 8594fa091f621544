//! The end-to-end verification driver behind `critfilt verify-paper`.
//!
//! Each criterion is a list of named checks. A check that errors is a
//! failed check carrying the error text; nothing here panics on a
//! mathematical failure.

mod properties;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::constellation::naive::{naive_braid_orbits, naive_class_counts, naive_key};
use crate::constellation::{braid_orbits, enumerate, enumerate_triples, partitions, CycleType};
use crate::error::{Error, Result};
use crate::exactnum::roots::rational_roots;
use crate::exactnum::{int, rat, Poly, Rat, RatFunc, Surd};
use crate::friedbase::{
    beta_bas_exact, beta_bas_is_belyi, beta_bas_sampled_verify, boxed_formula, compare_with_box,
    elimination_degree_bound, j_from_pair, j_of_quadruple, k3_dependence, BoxKind, BoxedFormula,
    Quadruple, DEFAULT_DEGREE_BUDGET,
};
use crate::hypercurve::{member, power_family};
use crate::ratmap::{
    critical_data, deg3_family, divisor, filtration_level, hurwitz_dims, P1Point, RatMap, P1,
};
use crate::report;

pub use properties::{property_checks, SEED as PROPERTY_SEED};

/// Randomized cases per property suite.
pub const PROPERTY_CASES: usize = 200;

/// Largest degree for which class counts are compared with the exhaustive
/// oracle.
pub const NAIVE_TRIPLE_DEGREE: usize = 5;
/// Largest degree for which 2-constellations are checked to be cyclic.
pub const PAIR_DEGREE: usize = 8;
/// Largest degree for which braid orbits are compared with raw closure.
pub const NAIVE_BRAID_DEGREE: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Sampled verification only for the genus-2 family.
    Fast,
    /// Also attempts the symbolic elimination for the genus-2 family.
    Full,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    /// `exact`, `sampled`, `enumeration`, `property`, `formula` or `skipped`.
    pub method: String,
    pub pass: bool,
    pub detail: Value,
}

impl Check {
    pub fn new(name: &str, method: &str, pass: bool, detail: Value) -> Self {
        Check {
            name: name.to_string(),
            method: method.to_string(),
            pass,
            detail,
        }
    }

    fn failed(name: &str, method: &str, err: &Error) -> Self {
        Check::new(name, method, false, json!({"error": err.to_string()}))
    }

    /// Folds a fallible check into a failed one on error.
    fn attempt(name: &str, method: &str, f: impl FnOnce() -> Result<(bool, Value)>) -> Self {
        match f() {
            Ok((pass, detail)) => Check::new(name, method, pass, detail),
            Err(e) => Check::failed(name, method, &e),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Criterion {
    pub id: String,
    pub title: String,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl Criterion {
    fn new(id: &str, title: &str, checks: Vec<Check>) -> Self {
        Criterion {
            id: id.to_string(),
            title: title.to_string(),
            pass: checks.iter().all(|c| c.pass),
            checks,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub command: String,
    pub mode: Mode,
    pub criteria: Vec<Criterion>,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
}

/// Criterion ids in report order.
pub const CRITERIA: [&str; 12] = ["1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "dims"];

/// Runs one criterion by id.
pub fn criterion(id: &str, mode: Mode) -> Result<Criterion> {
    Ok(match id {
        "1" => degree_three_quadratic(),
        "2" => degree_three_belyi_member(),
        "3" => degree_three_base_function(),
        "4" => genus_one_cubic(),
        "5" => power_curves(),
        "6" => genus_two_quintic(mode),
        "7" => degree_six_family(),
        "8" => legendre_family(),
        "9" => base_functions_are_belyi(),
        "10" => combinatorics(),
        "11" => Criterion::new("11", "randomized exact identities", property_checks(PROPERTY_CASES)),
        "dims" => dimensions(),
        other => return Err(Error::OutOfRange(format!("no criterion {other:?}"))),
    })
}

pub fn verify_all(mode: Mode) -> VerifyReport {
    let criteria: Vec<Criterion> = CRITERIA
        .iter()
        .map(|id| criterion(id, mode).expect("registered id"))
        .collect();
    let passed = criteria.iter().filter(|c| c.pass).count();
    VerifyReport {
        schema: report::SCHEMA,
        command: "verify-paper".into(),
        mode,
        failed: criteria.len() - passed,
        pass: passed == criteria.len(),
        passed,
        criteria,
    }
}

fn rf(text: &str, var: &str) -> Result<RatFunc> {
    crate::expr::parse_ratfunc(text, var)
}

fn rf_poly(coeffs: Vec<RatFunc>) -> Poly<RatFunc> {
    Poly::new(coeffs)
}

fn exact_against_box(family: &str, budget: usize) -> Check {
    Check::attempt(&format!("{family}: exact base function equals the closed form"), "exact", || {
        let boxed = boxed_formula(family)?;
        let beta = beta_bas_exact(family, budget)?;
        let cmp = compare_with_box(&beta, &boxed)?;
        let param = boxed.param;
        Ok((
            cmp.equal,
            json!({
                "computed": report::ratfunc(&beta.value, param),
                "closed_form": boxed.text,
                "equal": cmp.equal,
                "ratio": cmp.ratio.as_ref().map(report::rat),
                "formula_is_critical_value": cmp.is_critical_value,
                "degree_estimate": beta.estimate,
                "degree_budget": beta.budget,
            }),
        ))
    })
}

fn degree_three_quadratic() -> Criterion {
    let check = Check::attempt("finite nonzero critical values solve the quadratic", "exact", || {
        let lambda = RatFunc::param();
        let r = deg3_family(&lambda)?;
        let cd = critical_data(&r);
        let quad = rf_poly(vec![
            RatFunc::constant(int(4)),
            rf("lambda^2 + 18*lambda - 27", "lambda")?,
            rf("4*lambda^3", "lambda")?,
        ]);
        let expected = (quad * Poly::x()).monic();
        let ok = cd.finite.monic() == expected && cd.infinity && cd.count == 4;
        Ok((
            ok,
            json!({
                "critical_data": report::generic_critical_data(&cd, "lambda"),
                "expected_factor": "4*lambda^3*R^2 + (lambda^2 + 18*lambda - 27)*R + 4",
            }),
        ))
    });
    Criterion::new("1", "degree-3 family: critical values from the quadratic", vec![check])
}

fn degree_three_belyi_member() -> Criterion {
    let identity = Check::attempt("R9 + 1/27 = (3z+1)^3/(27(9z+1))", "exact", || {
        let r9 = deg3_family(&int(9))?;
        let lhs = r9.add_constant(&rat(1, 27));
        let rhs = RatMap::new(
            Poly::from_ints(&[1, 3]).pow(3),
            Poly::from_ints(&[1, 9]).scale(&int(27)),
        )?;
        Ok((lhs == rhs, json!({"lhs": lhs.display_in("z"), "rhs": rhs.display_in("z")})))
    });
    let level = Check::attempt("filtration level of R9 is 3", "exact", || {
        let r9 = deg3_family(&int(9))?;
        let cls = filtration_level(&r9)?;
        let vals = critical_data(&r9).values();
        let want = vec![P1Point::rational(rat(-1, 27)), P1Point::rational(int(0)), P1::Infinity];
        Ok((
            cls.level == 3 && cls.belyi && vals.points == want,
            json!({
                "level": cls.level,
                "verdict": cls.verdict(),
                "critical_values": report::critical_values(&vals),
            }),
        ))
    });
    Criterion::new("2", "degree-3 family: the Belyi member at lambda = 9", vec![identity, level])
}

fn degree_three_base_function() -> Criterion {
    let spot = Check::attempt("value at lambda = -1", "exact", || {
        let want = rat(488095744, 125);
        let boxed = boxed_formula("d3g0")?.value.eval(&int(-1));
        let cd = member("d3g0", &int(-1))?.critical_values()?;
        let member = j_of_quadruple(&Quadruple::from_critical(&cd)?);
        // −4R² − 44R + 4: the two roots have sum −11 and product −1.
        let by_hand = j_from_pair(&int(-11), &int(-1))?;
        let ok = boxed.as_ref() == Some(&want) && member == want && by_hand == want;
        Ok((
            ok,
            json!({
                "closed_form": boxed.as_ref().map(report::rat),
                "member": report::rat(&member),
                "symmetric_functions": report::rat(&by_hand),
                "expected": report::rat(&want),
            }),
        ))
    });
    Criterion::new(
        "3",
        "degree-3 family: base function",
        vec![exact_against_box("d3g0", DEFAULT_DEGREE_BUDGET), spot],
    )
}

fn genus_one_cubic() -> Criterion {
    let values = Check::attempt("critical values {inf, 0, 16k^3-2 +- 8 sqrt(4k^6-k^3)}", "exact", || {
        let m = member("d3g1", &RatFunc::param())?;
        let cd = m.critical_values()?;
        // Conjugates a ± b√Δ with a = 16k³ − 2, b² Δ = 64(4k⁶ − k³).
        let a = rf("16*k^3 - 2", "k")?;
        let b2d = rf("64*(4*k^6 - k^3)", "k")?;
        let e1 = a.clone() + &a;
        let e2 = a.clone() * &a - b2d;
        let expected = rf_poly(vec![RatFunc::zero(), e2.clone(), -e1.clone(), RatFunc::one()]);
        let ok = cd.count == 4 && cd.infinity && cd.finite.monic() == expected;
        Ok((
            ok,
            json!({
                "critical_data": report::generic_critical_data(&cd, "k"),
                "pair_sum": e1.display_in("k"),
                "pair_product": e2.display_in("k"),
            }),
        ))
    });
    let k3 = Check::attempt("closed form depends on k^3 only", "exact", || {
        let ok = k3_dependence(&boxed_formula("d3g1")?)?;
        Ok((ok, json!({"k3_dependence": ok})))
    });
    Criterion::new(
        "4",
        "genus-1 cubic family",
        vec![values, exact_against_box("d3g1", DEFAULT_DEGREE_BUDGET), k3],
    )
}

fn power_curves() -> Criterion {
    let checks = (1..=4)
        .map(|g| {
            Check::attempt(&format!("y^2 = 1 - x^{}", 2 * g + 1), "exact", || {
                let m = power_family(g)?;
                let vals = m.critical_values()?.values();
                let want = vec![P1Point::rational(int(-1)), P1Point::rational(int(1)), P1::Infinity];
                let rh = m.riemann_hurwitz()?;
                let alpha: usize = rh.alphas.iter().sum();
                let d = m.degree();
                let ok = d == 2 * g + 1
                    && vals.points == want
                    && vals.unresolved.is_empty()
                    && rh.pass
                    && d as i64 == 2 * g as i64 - 2 + alpha as i64;
                Ok((
                    ok,
                    json!({
                        "degree": d,
                        "genus": m.genus(),
                        "critical_values": report::critical_values(&vals),
                        "alphas": rh.alphas,
                        "riemann_hurwitz": {"lhs": rh.lhs, "rhs": rh.rhs, "pass": rh.pass},
                    }),
                ))
            })
        })
        .collect();
    Criterion::new("5", "Belyi functions y on y^2 = 1 - x^(2g+1)", checks)
}

fn genus_two_quintic(mode: Mode) -> Criterion {
    let sampled = Check::attempt("sampled agreement above the degree bound", "sampled", || {
        let boxed = boxed_formula("d5g2")?;
        let generic = member("d5g2", &RatFunc::param())?;
        let t = &boxed.value;
        let bound = 6 * elimination_degree_bound(&generic) + t.num().deg0().max(t.den().deg0());
        let rep = beta_bas_sampled_verify("d5g2", &boxed, bound + 1)?;
        Ok((
            rep.pass && rep.bound >= 49,
            json!({
                "bound": rep.bound,
                "requested": rep.requested,
                "agreed": rep.agreed.len(),
                "skipped": rep.skipped.iter().map(|(p, why)| json!({"p": report::rat(p), "reason": why})).collect::<Vec<_>>(),
                "mismatch": rep.mismatch.as_ref().map(report::rat),
            }),
        ))
    });
    let birch = Check::attempt("p = -2 has exactly three critical values", "exact", || {
        let vals = member("d5g2", &int(-2))?.critical_values()?.values();
        Ok((vals.count() == 3, report::critical_values(&vals)))
    });
    let exact = match mode {
        Mode::Full => exact_against_box("d5g2", DEFAULT_DEGREE_BUDGET),
        Mode::Fast => Check::attempt("d5g2: exact elimination", "skipped", || {
            let generic = member("d5g2", &RatFunc::param())?;
            Ok((
                true,
                json!({
                    "attempted": false,
                    "reason": "fast mode",
                    "degree_estimate": elimination_degree_bound(&generic),
                    "degree_budget": DEFAULT_DEGREE_BUDGET,
                }),
            ))
        }),
    };
    Criterion::new("6", "genus-2 quintic family", vec![sampled, birch, exact])
}

fn surd_point(a: Rat, b: Rat, d: i64) -> P1Point {
    P1::Finite(Surd::new(a, b, BigInt::from(d)))
}

fn divisor_check(name: &str, f: &RatFunc, want: Vec<(P1Point, i64)>) -> Check {
    Check::attempt(name, "exact", || {
        let r = RatMap::new(f.num().clone(), f.den().clone())?;
        let div = divisor(&r)?;
        let ok = div.terms.len() == want.len()
            && want.iter().all(|(p, m)| div.multiplicity(p) == *m)
            && div.degree() == 0;
        Ok((ok, report::divisor(&div)))
    })
}

fn degree_six_family() -> Criterion {
    let beta = match boxed_formula("sekividu") {
        Ok(b) => b.value,
        Err(e) => return Criterion::new("7", "degree-6 family", vec![Check::failed("closed form", "exact", &e)]),
    };
    let a1 = P1Point::rational(int(0));
    let a2 = surd_point(rat(175, 54), rat(5, 54), 10);
    let a3 = surd_point(rat(175, 54), rat(-5, 54), 10);
    let b1 = P1Point::rational(rat(5, 2));
    let b2 = P1Point::rational(rat(80, 27));
    let c1 = P1Point::rational(int(3));
    let c2 = P1::Infinity;
    let zeros = divisor_check(
        "div(beta) = A1 + 2A2 + 2A3 - 3C1 - 2C2",
        &beta,
        vec![(a1, 1), (a2, 2), (a3, 2), (c1.clone(), -3), (c2.clone(), -2)],
    );
    let ones = divisor_check(
        "div(beta - 1) = 4B1 + B2 - 3C1 - 2C2",
        &(beta.clone() - RatFunc::one()),
        vec![(b1, 4), (b2, 1), (c1, -3), (c2, -2)],
    );
    Criterion::new(
        "7",
        "degree-6 family",
        vec![exact_against_box("sekividu", DEFAULT_DEGREE_BUDGET), zeros, ones],
    )
}

fn legendre_family() -> Criterion {
    Criterion::new(
        "8",
        "Legendre family",
        vec![exact_against_box("legendre", DEFAULT_DEGREE_BUDGET)],
    )
}

/// Rational parameters where the critical values are forced to collide:
/// poles of a j-valued formula, and preimages of `0, 1, ∞` of a
/// cross-ratio formula.
fn collision_parameters(boxed: &BoxedFormula) -> Vec<Rat> {
    let f = &boxed.value;
    let mut polys = vec![f.den().clone()];
    if boxed.kind == BoxKind::CrossRatio {
        polys.push(f.num().clone());
        polys.push(f.num().clone() - f.den().clone());
    }
    let mut out: Vec<Rat> = polys
        .iter()
        .filter(|p| !p.is_constant())
        .flat_map(|p| rational_roots(&p.squarefree_part()))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn base_functions_are_belyi() -> Criterion {
    let mut checks = Vec::new();
    for family in ["d3g0", "d3g1", "d5g2", "sekividu"] {
        checks.push(Check::attempt(&format!("{family}: closed form has level <= 3"), "exact", || {
            let boxed = boxed_formula(family)?;
            let rep = beta_bas_is_belyi(&boxed)?;
            Ok((
                rep.belyi && rep.level <= 3,
                json!({
                    "level": rep.level,
                    "values": rep.values.iter().map(report::point).collect::<Vec<_>>(),
                }),
            ))
        }));
        checks.push(Check::attempt(&format!("{family}: special members have <= 3 values"), "exact", || {
            let boxed = boxed_formula(family)?;
            let mut ok = true;
            let mut rows = Vec::new();
            for p in collision_parameters(&boxed) {
                let row = match member(family, &p).and_then(|m| m.critical_values()) {
                    Ok(cd) => {
                        let n = cd.values().count();
                        ok &= n <= 3;
                        json!({"parameter": report::rat(&p), "critical_values": n})
                    }
                    Err(e) => json!({"parameter": report::rat(&p), "outside_domain": e.to_string()}),
                };
                rows.push(row);
            }
            Ok((ok, json!({"parameters": rows})))
        }));
    }
    Criterion::new("9", "base functions are Belyi", checks)
}

fn class_counts(k: usize, d: usize) -> Result<std::collections::BTreeMap<usize, usize>> {
    let mut out = std::collections::BTreeMap::new();
    for c in enumerate(k, d, PAIR_DEGREE)? {
        *out.entry(c.genus()?).or_insert(0) += 1;
    }
    Ok(out)
}

/// Multisets of four nontrivial cycle types of degree `d`.
fn nontrivial_passports(d: usize) -> Vec<Vec<CycleType>> {
    let types: Vec<CycleType> = partitions(d).into_iter().filter(|t| t.len() < d).collect();
    let n = types.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                for e in c..n {
                    out.push(vec![types[a].clone(), types[b].clone(), types[c].clone(), types[e].clone()]);
                }
            }
        }
    }
    out
}

fn combinatorics() -> Criterion {
    let cubic = Check::attempt("unique genus-1 degree-3 dessin", "enumeration", || {
        let cls = enumerate_triples(3, Some(1), PAIR_DEGREE)?;
        Ok((cls.len() == 1, json!({"count": cls.len()})))
    });
    let counts = Check::attempt("class counts agree with exhaustive search", "enumeration", || {
        let mut ok = true;
        let mut rows = Vec::new();
        for d in 1..=NAIVE_TRIPLE_DEGREE {
            let fast = class_counts(3, d)?;
            let slow = naive_class_counts(3, d);
            ok &= fast == slow;
            rows.push(json!({"degree": d, "by_genus": fast, "exhaustive": slow}));
        }
        Ok((ok, json!(rows)))
    });
    let pairs = Check::attempt("2-constellations are cyclic", "enumeration", || {
        let mut ok = true;
        for d in 1..=PAIR_DEGREE {
            let cls = enumerate(2, d, PAIR_DEGREE)?;
            ok &= cls.len() == 1 && cls[0].perms()[0].cycle_type() == vec![d];
        }
        Ok((ok, json!({"max_degree": PAIR_DEGREE})))
    });
    let braids = Check::attempt("braid orbits agree with raw closure", "enumeration", || {
        let mut ok = true;
        let mut compared = 0;
        for d in 2..=NAIVE_BRAID_DEGREE {
            for pp in nontrivial_passports(d) {
                let mut fast: Vec<Vec<Vec<u8>>> = braid_orbits(d, &pp, NAIVE_BRAID_DEGREE)?
                    .iter()
                    .map(|o| {
                        let mut keys: Vec<Vec<u8>> = o.members.iter().map(naive_key).collect();
                        keys.sort();
                        keys
                    })
                    .collect();
                fast.sort();
                ok &= fast == naive_braid_orbits(d, &pp);
                compared += 1;
            }
        }
        Ok((ok, json!({"passports_compared": compared, "max_degree": NAIVE_BRAID_DEGREE})))
    });
    Criterion::new("10", "permutation combinatorics", vec![cubic, counts, pairs, braids])
}

fn dimensions() -> Criterion {
    let cases = [((3, 0), (4, 1)), ((4, 0), (6, 3)), ((3, 1), (6, 3))];
    let checks = cases
        .iter()
        .map(|&((d, g), want)| {
            Check::attempt(&format!("dimensions for (d, g) = ({d}, {g})"), "formula", || {
                let got = hurwitz_dims(d, g)?;
                Ok((got == want, json!({"hurwitz": got.0, "quotient": got.1})))
            })
        })
        .collect();
    Criterion::new("dims", "Hurwitz space dimensions", checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_id() {
        assert!(criterion("12", Mode::Fast).is_err());
    }

    #[test]
    fn dimension_formula() {
        assert!(criterion("dims", Mode::Fast).unwrap().pass);
    }

    #[test]
    fn passports_of_degree_three() {
        // Two nontrivial types, four slots: five multisets.
        assert_eq!(nontrivial_passports(3).len(), 5);
    }

    #[test]
    fn collisions_of_the_degree_three_box() {
        let b = boxed_formula("d3g0").unwrap();
        assert_eq!(collision_parameters(&b), vec![int(0), int(1), int(9)]);
    }
}
