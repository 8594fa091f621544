//! Randomized exact identities, 256 cases per property.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use critfilt::constellation::{Constellation, Perm};
use critfilt::exactnum::{int, rat, Poly, Rat};
use critfilt::expr::{parse, Expr};
use critfilt::friedbase::{cross_ratio, cross_ratio_orbit, j_of_quadruple, legendre_j, Quadruple};
use critfilt::ratmap::{critical_data, divisor, Moebius, RatMap, P1};

const CASES: u32 = 256;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(CASES)
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |r| !r.is_zero())
}

/// Degree between 1 and `max_deg`.
fn poly(max_deg: usize) -> impl Strategy<Value = Poly<Rat>> {
    (prop::collection::vec(small_rat(), 1..=max_deg), nonzero_rat()).prop_map(|(mut c, lc)| {
        c.push(lc);
        Poly::new(c)
    })
}

fn distinct_points(n: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::btree_set(small_rat(), n).prop_map(|s| s.into_iter().collect())
}

fn from_roots(lc: &Rat, roots: &[Rat]) -> Poly<Rat> {
    roots
        .iter()
        .fold(Poly::constant(lc.clone()), |acc, r| acc * Poly::new(vec![-r.clone(), int(1)]))
}

fn moebius() -> impl Strategy<Value = Moebius<Rat>> {
    (small_rat(), small_rat(), small_rat(), small_rat())
        .prop_filter_map("invertible", |(a, b, c, d)| Moebius::new(a, b, c, d).ok())
}

fn quadruple() -> impl Strategy<Value = Vec<P1<Rat>>> {
    (distinct_points(4), prop::option::of(0usize..4)).prop_map(|(pts, inf)| {
        let mut pts: Vec<P1<Rat>> = pts.into_iter().map(P1::Finite).collect();
        if let Some(i) = inf {
            pts[i] = P1::Infinity;
        }
        pts
    })
}

fn perm(d: usize) -> impl Strategy<Value = Perm> {
    Just((0..d).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|img| Perm::from_images(img).unwrap())
}

fn fried_tuple() -> impl Strategy<Value = Constellation> {
    (2usize..=6).prop_flat_map(|d| {
        (perm(d), perm(d), perm(d)).prop_filter_map("transitive", |(a, b, c)| {
            let last = a.then(&b).then(&c).inverse();
            Constellation::new(vec![a, b, c, last]).ok()
        })
    })
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u32..50).prop_map(|n| Expr::Int(BigInt::from(n))),
        Just(Expr::Var("z".into())),
        Just(Expr::Var("lambda".into())),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
            (inner, 0u32..4).prop_map(|(a, e)| Expr::Pow(Box::new(a), e)),
        ]
    })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn resultant_by_roots_and_multiplicativity(
        roots in distinct_points(3), lc in nonzero_rat(), g in poly(4), h in poly(3)
    ) {
        let f = from_roots(&lc, &roots);
        let by_roots = roots
            .iter()
            .fold(num_traits::pow(lc.clone(), g.deg0()), |acc, a| acc * g.eval(a));
        prop_assert_eq!(f.resultant(&g), by_roots);
        prop_assert_eq!(f.resultant(&(g.clone() * h.clone())), f.resultant(&g) * f.resultant(&h));
    }

    #[test]
    fn discriminant_product_rule(f in poly(4), g in poly(3)) {
        let r = f.resultant(&g);
        prop_assert_eq!(
            (f.clone() * g.clone()).discriminant(),
            f.discriminant() * g.discriminant() * &r * &r
        );
        prop_assert_eq!(f.discriminant().is_zero(), !f.is_squarefree());
    }

    #[test]
    fn squarefree_reassembly(factors in prop::collection::vec((poly(2), 1u32..4), 1..4), lc in nonzero_rat()) {
        let p = factors
            .iter()
            .fold(Poly::constant(lc), |acc, (f, e)| acc * f.pow(*e));
        let parts = p.squarefree_decomposition();
        let back = parts
            .iter()
            .fold(Poly::constant(p.lc()), |acc, (f, i)| acc * f.pow(*i as u32));
        prop_assert_eq!(back, p);
        for (a, (f, _)) in parts.iter().enumerate() {
            prop_assert!(f.is_squarefree());
            for (g, _) in &parts[a + 1..] {
                prop_assert!(f.gcd(g).is_constant());
            }
        }
    }

    #[test]
    fn j_is_invariant(pts in quadruple(), order in Just(vec![0usize, 1, 2, 3]).prop_shuffle(), m in moebius()) {
        let j = j_of_quadruple(&Quadruple::new(&pts, None).unwrap());
        let p: Vec<P1<Rat>> = order.iter().map(|&i| pts[i].clone()).collect();
        let P1::Finite(t) = cross_ratio(&p[0], &p[1], &p[2], &p[3]).unwrap() else {
            panic!("finite cross-ratio");
        };
        prop_assert_eq!(legendre_j(&t).unwrap(), j.clone());
        let moved: Vec<P1<Rat>> = pts.iter().map(|x| m.apply(x)).collect();
        prop_assert_eq!(j_of_quadruple(&Quadruple::new(&moved, None).unwrap()), j);
    }

    #[test]
    fn cross_ratio_collision(pts in quadruple(), collide in prop::option::of((0usize..4, 1usize..4))) {
        let mut pts = pts;
        if let Some((i, k)) = collide {
            pts[(i + k) % 4] = pts[i].clone();
        }
        match cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3]) {
            Ok(P1::Finite(t)) => {
                prop_assert!(collide.is_none());
                prop_assert!(!t.is_zero() && !t.is_one());
            }
            Ok(P1::Infinity) => prop_assert!(false, "finite points give a finite ratio"),
            Err(_) => prop_assert!(collide.is_some()),
        }
    }

    #[test]
    fn orbit_is_closed(t in small_rat().prop_filter("not 0 or 1", |t| !t.is_zero() && !t.is_one())) {
        let mut base = cross_ratio_orbit(&P1::Finite(t)).unwrap().values;
        base.sort();
        for v in &base {
            let mut again = cross_ratio_orbit(&P1::Finite(v.clone())).unwrap().values;
            again.sort();
            prop_assert_eq!(&again, &base);
        }
    }

    #[test]
    fn braid_moves_preserve_invariants(c in fried_tuple(), i in 1usize..=3) {
        let b = c.braid_act(i).unwrap();
        prop_assert!(Constellation::new(b.perms().to_vec()).is_ok());
        prop_assert_eq!(b.genus().unwrap(), c.genus().unwrap());
        prop_assert_eq!(b.passport_multiset(), c.passport_multiset());
        prop_assert_eq!(b.braid_act_inverse(i).unwrap(), c);
    }

    #[test]
    fn canonical_key_is_a_class_invariant(
        (c, pi) in fried_tuple().prop_flat_map(|c| {
            let d = c.degree();
            (Just(c), perm(d))
        })
    ) {
        prop_assert_eq!(c.conjugate_by(&pi).canonical_key(), c.canonical_key());
    }

    #[test]
    fn divisor_has_degree_zero(
        zeros in prop::collection::vec((small_rat(), 1u32..4), 0..4),
        poles in prop::collection::vec((small_rat(), 1u32..4), 0..4),
        k in nonzero_rat(),
        conj in prop::option::of(prop::sample::select(vec![2i64, 3, 5, 10])),
    ) {
        let split = |fs: &[(Rat, u32)]| {
            fs.iter()
                .fold(Poly::constant(Rat::one()), |acc, (r, e)| acc * Poly::new(vec![-r.clone(), int(1)]).pow(*e))
        };
        let mut num = split(&zeros).scale(&k);
        if let Some(d) = conj {
            num = num * Poly::new(vec![int(-d), int(0), int(1)]);
        }
        let r = RatMap::function(num, split(&poles)).unwrap();
        prop_assume!(!r.is_constant());
        let div = divisor(&r).unwrap();
        prop_assert_eq!(div.degree(), 0);
        prop_assert_eq!(div.positive_degree(), r.degree() as i64);
    }

    #[test]
    fn moebius_keeps_the_critical_count(f in poly(4), g in poly(2), m in moebius()) {
        let r = RatMap::new(f, g);
        prop_assume!(r.is_ok());
        let r = r.unwrap();
        let before = critical_data(&r).count;
        prop_assert_eq!(critical_data(&m.post(&r)).count, before);
        prop_assert_eq!(critical_data(&m.pre(&r)).count, before);
    }

    #[test]
    fn expressions_round_trip(e in expr()) {
        let text = e.to_string();
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &e, "printed as {}", text);
        prop_assert_eq!(back.to_string(), text);
    }
}
