//! Rational and quadratic roots of rational polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Poly;
use super::rat::{primitive_part, Rat};
use super::surd::{squarefree_split, Surd};

/// A root found exactly: one rational, or a conjugate pair `s`, `s̄`
/// (stored with positive irrational coefficient).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Root {
    Rational(Rat),
    Conjugates(Surd),
}

impl Root {
    pub fn count(&self) -> usize {
        match self {
            Root::Rational(_) => 1,
            Root::Conjugates(_) => 2,
        }
    }
}

/// Result of [`locate_roots`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Located {
    /// Roots with multiplicities.
    pub roots: Vec<(Root, usize)>,
    /// Squarefree monic factors of degree ≥ 3 without rational roots, with
    /// the multiplicity of each of their roots.
    pub unresolved: Vec<(Poly<Rat>, usize)>,
}

impl Located {
    /// Sum of multiplicities, counting conjugate pairs twice and each
    /// unresolved block by its degree.
    pub fn total_degree(&self) -> usize {
        self.roots.iter().map(|(r, m)| r.count() * m).sum::<usize>()
            + self
                .unresolved
                .iter()
                .map(|(p, m)| p.deg0() * m)
                .sum::<usize>()
    }

    pub fn is_resolved(&self) -> bool {
        self.unresolved.is_empty()
    }
}

/// Locates every rational root and every root of a quadratic squarefree
/// block; what remains is reported as unresolved.
pub fn locate_roots(p: &Poly<Rat>) -> Located {
    let mut out = Located::default();
    if p.is_zero() {
        return out;
    }
    for (factor, mult) in p.squarefree_decomposition() {
        let mut rest = factor;
        let mut rats = rational_roots(&rest);
        rats.sort();
        for r in &rats {
            rest = rest.div_by(&Poly::new(vec![-r.clone(), Rat::one()]));
            out.roots.push((Root::Rational(r.clone()), mult));
        }
        match rest.deg0() {
            0 => {}
            1 => unreachable!("linear factor left after rational root extraction"),
            2 => out.roots.push((Root::Conjugates(quadratic_root(&rest)), mult)),
            _ => out.unresolved.push((rest.monic(), mult)),
        }
    }
    out
}

/// `(−b + √(b² − 4ac)) / 2a` for an irreducible quadratic.
pub fn quadratic_root(q: &Poly<Rat>) -> Surd {
    assert_eq!(q.degree(), Some(2));
    let (c, b, a) = (q.coeff(0), q.coeff(1), q.coeff(2));
    let disc = &b * &b - Rat::from_integer(4.into()) * &a * &c;
    let n = disc.numer() * disc.denom();
    let (s, d) = squarefree_split(&n);
    let two_a = Rat::from_integer(2.into()) * &a;
    let re = -b / &two_a;
    let im = (Rat::from_integer(s) / Rat::from_integer(disc.denom().clone()) / two_a).abs();
    Surd::new(re, im, d)
}

fn eval_int(c: &[BigInt], x: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a)
}

fn eval_mod(c: &[BigInt], x: u64, p: u64) -> u64 {
    c.iter().rev().fold(0u64, |acc, a| {
        let am = a.mod_floor(&BigInt::from(p)).to_u64().unwrap();
        ((acc as u128 * x as u128 + am as u128) % p as u128) as u64
    })
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Distinct rational roots of a squarefree polynomial, by Hensel lifting
/// simple roots modulo a prime.
pub fn rational_roots(p: &Poly<Rat>) -> Vec<Rat> {
    let Some(deg) = p.degree() else {
        return vec![];
    };
    if deg == 0 {
        return vec![];
    }
    let (_, mut c) = primitive_part(p);
    let mut out = Vec::new();
    if c[0].is_zero() {
        out.push(Rat::zero());
        while c.first().is_some_and(|x| x.is_zero()) {
            c.remove(0);
        }
    }
    if c.len() == 1 {
        return out;
    }
    if c.len() == 2 {
        out.push(Rat::new(-c[0].clone(), c[1].clone()));
        return out;
    }
    let lc = c.last().unwrap().clone();
    let dc: Vec<BigInt> = c
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, a)| a * BigInt::from(i))
        .collect();
    let height = c.iter().map(|a| a.abs()).max().unwrap();
    let bound = BigInt::from(2) * lc.abs() * height + BigInt::one();

    for prime in small_primes() {
        if (&lc % prime).is_zero() {
            continue;
        }
        let roots: Vec<u64> = (0..prime).filter(|&x| eval_mod(&c, x, prime) == 0).collect();
        if roots.iter().any(|&r| eval_mod(&dc, r, prime) == 0) {
            continue;
        }
        for r in roots {
            let mut q = BigInt::from(prime);
            let mut x = BigInt::from(r);
            while q < bound {
                q = &q * &q;
                let fx = eval_int(&c, &x);
                let dfx = eval_int(&dc, &x);
                let inv = mod_inverse(&dfx, &q);
                x = (x - fx * inv).mod_floor(&q);
            }
            let mut y = (&lc * &x).mod_floor(&q);
            if &y * 2 > q {
                y -= &q;
            }
            let cand = Rat::new(y, lc.clone());
            let num = cand.numer().clone();
            let den = cand.denom().clone();
            // Homogeneous evaluation avoids rational arithmetic.
            let n = c.len() - 1;
            let val = c.iter().enumerate().fold(BigInt::zero(), |acc, (i, a)| {
                acc + a * num.pow(i as u32) * den.pow((n - i) as u32)
            });
            if val.is_zero() {
                out.push(cand);
            }
        }
        return out;
    }
    unreachable!("prime search is unbounded")
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "derivative not invertible");
    e.x.mod_floor(m)
}

/// True iff `p` has `a` as a root.
pub fn is_root(p: &Poly<Rat>, a: &Rat) -> bool {
    p.eval(a).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::{int, rat};

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_ints(c)
    }

    #[test]
    fn quadratic_from_the_special_fiber() {
        let q = p(&[1125, -700, 108]);
        let loc = locate_roots(&q);
        assert_eq!(loc.roots.len(), 1);
        let (Root::Conjugates(s), 1) = &loc.roots[0] else {
            panic!("expected a conjugate pair");
        };
        assert_eq!(s.a(), &rat(175, 54));
        assert_eq!(s.b(), &rat(5, 54));
        assert_eq!(s.radicand(), &BigInt::from(10));
    }

    #[test]
    fn repeated_rational_root() {
        let q = p(&[-3, 1]).pow(3);
        assert_eq!(locate_roots(&q).roots, vec![(Root::Rational(int(3)), 3)]);
    }

    #[test]
    fn cubic_is_unresolved() {
        let loc = locate_roots(&p(&[-2, 0, 0, 1]));
        assert!(loc.roots.is_empty());
        assert_eq!(loc.unresolved, vec![(p(&[-2, 0, 0, 1]), 1)]);
    }

    #[test]
    fn rational_roots_with_large_denominators() {
        let q = p(&[-5, 2]) * p(&[-80, 27]) * p(&[0, 1]) * p(&[7, 0, 1]);
        let mut r = rational_roots(&q);
        r.sort();
        assert_eq!(r, vec![int(0), rat(5, 2), rat(80, 27)]);
        assert_eq!(locate_roots(&q).total_degree(), 5);
    }
}
