//! Frozen critical data of the registered families.

use critfilt::exactnum::{int, rat, Poly, RatFunc};
use critfilt::expr::{parse_map, parse_ratfunc};
use critfilt::friedbase::{beta_bas_exact, boxed_formula, compare_with_box, BoxKind};
use critfilt::hypercurve::{member, power_family, FamilyMember};
use critfilt::ratmap::{critical_data, filtration_level, P1Point, P1};

fn coeffs(texts: &[&str], var: &str) -> Poly<RatFunc> {
    Poly::new(texts.iter().map(|t| parse_ratfunc(t, var).unwrap()).collect())
}

#[test]
fn cubic_genus_one_critical_polynomial() {
    let cd = member("d3g1", &RatFunc::param()).unwrap().critical_values().unwrap();
    assert!(cd.infinity);
    assert_eq!(cd.finite, coeffs(&["0", "4", "4 - 32*k^3", "1"], "k"));
}

#[test]
fn quintic_genus_two_critical_polynomial() {
    let cd = member("d5g2", &RatFunc::param()).unwrap().critical_values().unwrap();
    assert!(cd.infinity);
    let want = coeffs(
        &[
            "0",
            "2*p^5 + 15*p^4 + 75/2*p^3 + 125/4*p^2",
            "1/8*p^5 - 5/2*p^3 - 5*p^2 - 5*p - 8",
            "1",
        ],
        "p",
    );
    assert_eq!(cd.finite, want);
}

#[test]
fn sextic_box_is_a_critical_value() {
    let beta = beta_bas_exact("sekividu", 64).unwrap();
    let boxed = boxed_formula("sekividu").unwrap();
    assert_eq!(boxed.kind, BoxKind::CrossRatio);
    let cmp = compare_with_box(&beta, &boxed).unwrap();
    assert!(cmp.equal);
    assert_eq!(cmp.is_critical_value, Some(true));
}

#[test]
fn cubic_box_is_off_by_four() {
    let beta = beta_bas_exact("d3g1", 64).unwrap();
    let cmp = compare_with_box(&beta, &boxed_formula("d3g1").unwrap()).unwrap();
    assert!(!cmp.equal);
    assert_eq!(cmp.ratio, Some(int(4)));
}

#[test]
fn birch_passport() {
    let FamilyMember::Hyper(m) = member("birch", &int(-2)).unwrap() else {
        panic!("hyperelliptic");
    };
    let pp = m.passport().unwrap();
    let values: Vec<P1Point> = pp.entries.iter().map(|(v, _)| v.clone()).collect();
    assert_eq!(values, vec![P1Point::rational(int(0)), P1Point::rational(int(1)), P1::Infinity]);
    assert!(m.riemann_hurwitz().unwrap().pass);
}

#[test]
fn power_curves_are_belyi() {
    for g in 1..=4 {
        let m = power_family(g).unwrap();
        let rh = m.riemann_hurwitz().unwrap();
        assert_eq!(rh.alphas, vec![1, 1, 1]);
        assert_eq!(m.degree(), 2 * g + 1);
    }
}

#[test]
fn parsed_degree_three_member() {
    let (var, r) = parse_map("(z^3+z^2)/(9*z+1)").unwrap();
    assert_eq!(var, "z");
    let cls = filtration_level(&r).unwrap();
    assert_eq!((cls.level, cls.verdict()), (3, "belyi"));
    let vals = critical_data(&r).values();
    assert_eq!(vals.points[0], P1Point::rational(rat(-1, 27)));
}

#[test]
fn common_factors_cancel() {
    // The cubic vanishes at x = −1, so (x + 1)² cancels.
    let (_, r) = parse_map("(3*x^3+15*x^2+20*x+8)^2/(64*(x+1)^5)").unwrap();
    assert_eq!(r.degree(), 4);
}
