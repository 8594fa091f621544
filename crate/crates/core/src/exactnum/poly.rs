use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{Field, Ring};

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// The coefficient vector never has a zero last entry, so the zero
/// polynomial is the empty vector and `degree()` is `None` for it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    c: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut c: Vec<R>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(a: R) -> Self {
        Self::new(vec![a])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn monomial(a: R, k: usize) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        let mut c = vec![R::zero(); k + 1];
        c[k] = a;
        Poly { c }
    }

    /// Builds from small integer coefficients, lowest degree first.
    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&n| R::from_i64(n)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.c
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> R {
        self.c.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> R {
        self.c.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn eval(&self, x: &R) -> R {
        self.c
            .iter()
            .rev()
            .fold(R::zero(), |acc, a| acc * x + a)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.clone() * R::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, a: &R) -> Self {
        Self::new(self.c.iter().map(|x| x.clone() * a).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![R::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.c.iter().map(f).collect())
    }

    /// `self(q(x))`.
    pub fn compose(&self, q: &Self) -> Self {
        self.c
            .iter()
            .rev()
            .fold(Self::zero(), |acc, a| acc * q + &Self::constant(a.clone()))
    }

    /// `x^n · self(1/x)` for `n ≥ deg self`.
    pub fn reverse_to(&self, n: usize) -> Self {
        let mut c = self.c.clone();
        c.resize(n + 1, R::zero());
        c.reverse();
        Self::new(c)
    }

    /// `sum c_i · (a x + b)^i · (c x + d)^(n−i)`, the degree-`n` homogenized
    /// substitution of a Moebius map.
    pub fn homogeneous_substitute(&self, n: usize, a: &R, b: &R, c: &R, d: &R) -> Self {
        let num = Self::new(vec![b.clone(), a.clone()]);
        let den = Self::new(vec![d.clone(), c.clone()]);
        let mut out = Self::zero();
        for (i, ci) in self.c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            out = out + num.pow(i as u32) * den.pow((n - i) as u32).scale(ci);
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }

    /// Exact quotient in `R[x]`; `None` if `rhs` does not divide `self`.
    pub fn try_div_exact(&self, rhs: &Self) -> Option<Self> {
        let db = rhs.degree()?;
        let lb = rhs.lc();
        let mut r = self.c.clone();
        if r.len() < db + 1 {
            return if r.is_empty() { Some(Self::zero()) } else { None };
        }
        let mut q = vec![R::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let top = r[k + db].clone();
            if top.is_zero() {
                continue;
            }
            let t = top.div_exact(&lb);
            if t.clone() * &lb != top {
                return None;
            }
            for (i, b) in rhs.c.iter().enumerate() {
                r[k + i] = r[k + i].clone() - t.clone() * b;
            }
            q[k] = t;
        }
        if r.iter().all(|x| x.is_zero()) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Writes the polynomial in `var`, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let s = a.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if is_atomic(rest) => (true, rest.to_string()),
                _ => (false, s),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                out.push_str(&wrap(&body));
            } else if body == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{mono}", wrap(&body)));
            }
        }
        out
    }
}

fn is_atomic(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|ch| ch.is_ascii_alphanumeric() || ch == '/')
}

fn wrap(s: &str) -> String {
    if is_atomic(s) || (s.starts_with('-') && is_atomic(&s[1..])) {
        s.to_string()
    } else {
        format!("({s})")
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.display_in("x"))
    }
}

fn add_vecs<R: Ring>(a: &[R], b: &[R], negate_b: bool) -> Vec<R> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(R::zero);
            match b.get(i) {
                None => x,
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
            }
        })
        .collect()
}

fn mul_vecs<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![R::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = std::mem::replace(&mut out[i + j], R::zero()) + x.clone() * y;
        }
    }
    out
}

impl<R: Ring> Add<&Poly<R>> for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        Poly::new(add_vecs(&self.c, &rhs.c, false))
    }
}
impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Poly<R>) -> Poly<R> {
        self + &rhs
    }
}
impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        Poly::new(add_vecs(&self.c, &rhs.c, false))
    }
}
impl<R: Ring> Sub<&Poly<R>> for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        Poly::new(add_vecs(&self.c, &rhs.c, true))
    }
}
impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Poly<R>) -> Poly<R> {
        self - &rhs
    }
}
impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        Poly::new(add_vecs(&self.c, &rhs.c, true))
    }
}
impl<R: Ring> Mul<&Poly<R>> for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        Poly::new(mul_vecs(&self.c, &rhs.c))
    }
}
impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Poly<R>) -> Poly<R> {
        self * &rhs
    }
}
impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        Poly::new(mul_vecs(&self.c, &rhs.c))
    }
}
impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            c: self.c.into_iter().map(|x| -x).collect(),
        }
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { c: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly::constant(R::one())
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn from_i64(n: i64) -> Self {
        Poly::constant(R::from_i64(n))
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self.try_div_exact(rhs)
            .unwrap_or_else(|| panic!("inexact polynomial division"))
    }
    fn pow(&self, e: u32) -> Self {
        Poly::pow(self, e)
    }
}

impl<F: Field> Poly<F> {
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().inv();
        self.scale(&inv)
    }

    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        let db = rhs.degree().expect("division by the zero polynomial");
        let inv = rhs.lc().inv();
        let mut r = self.c.clone();
        if r.len() <= db {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let top = std::mem::replace(&mut r[k + db], F::zero());
            if top.is_zero() {
                continue;
            }
            let t = top * &inv;
            for (i, b) in rhs.c.iter().enumerate().take(db) {
                r[k + i] = r[k + i].clone() - t.clone() * b;
            }
            q[k] = t;
        }
        r.truncate(db);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, rhs: &Self) -> Self {
        self.div_rem(rhs).1
    }

    /// Quotient by an exact divisor. Panics if the remainder is nonzero.
    pub fn div_by(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        F::poly_gcd(self, other)
    }

    /// Plain Euclidean monic gcd over the field.
    pub fn euclid_gcd(a: &Self, b: &Self) -> Self {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let r = x.rem(&y);
            x = y;
            y = r.monic();
        }
        x.monic()
    }

    /// Yun's squarefree decomposition: monic pairwise coprime squarefree
    /// factors with multiplicities, in increasing multiplicity.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let dp = self.derivative();
        let b = self.gcd(&dp);
        let mut c = self.div_by(&b);
        let mut d = dp.div_by(&b) - c.derivative();
        let mut i = 1;
        while !c.is_constant() {
            let a = c.gcd(&d);
            c = c.div_by(&a);
            d = d.div_by(&a) - c.derivative();
            if !a.is_constant() {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// Monic product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return if self.is_zero() { Self::zero() } else { Self::one() };
        }
        self.div_by(&self.gcd(&self.derivative())).monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }

    /// Resultant by the Euclidean remainder sequence over the field.
    pub fn resultant(&self, other: &Self) -> F {
        let (Some(_), Some(_)) = (self.degree(), other.degree()) else {
            return F::zero();
        };
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = F::one();
        loop {
            let m = a.deg0();
            let n = b.deg0();
            if n == 0 {
                return acc * b.lc().pow(m as u32);
            }
            let r = a.rem(&b);
            let Some(k) = r.degree() else {
                return F::zero();
            };
            let mut factor = b.lc().pow((m - k) as u32);
            if (m * n) % 2 == 1 {
                factor = -factor;
            }
            acc = acc * factor;
            a = b;
            b = r;
        }
    }

    /// `(−1)^(n(n−1)/2) · Res(p, p′) / lc(p)`.
    pub fn discriminant(&self) -> F {
        let n = self.deg0();
        if n == 0 {
            return F::one();
        }
        let r = self.resultant(&self.derivative()) / self.lc();
        if (n * (n - 1) / 2) % 2 == 1 {
            -r
        } else {
            r
        }
    }

    /// Multiplicity of `a` as a root.
    pub fn root_multiplicity(&self, a: &F) -> usize {
        let lin = Self::new(vec![-a.clone(), F::one()]);
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() {
            let (q, r) = p.div_rem(&lin);
            if !r.is_zero() {
                break;
            }
            p = q;
            m += 1;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::{int, rat, Rat};

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[-1, 1])), Poly::one());
        let a = p(&[-2, 1]).pow(3) * p(&[1, 1]);
        let b = p(&[-2, 1]) * p(&[5, 1]);
        assert_eq!(a.gcd(&b), p(&[-2, 1]));
        assert_eq!(Poly::<Rat>::zero().gcd(&Poly::zero()), Poly::zero());
        assert_eq!(Poly::euclid_gcd(&a, &b), p(&[-2, 1]));
    }

    #[test]
    fn yun_examples() {
        let q = p(&[-1, 1]).pow(2) * p(&[2, 1]);
        assert_eq!(
            q.squarefree_decomposition(),
            vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]
        );
        assert_eq!(p(&[0, 0, 0, 1]).squarefree_decomposition(), vec![(p(&[0, 1]), 3)]);
        let lam9 = p(&[1, 54, 729]);
        let r = Poly::new(vec![rat(1, 27), int(1)]);
        assert_eq!(lam9.squarefree_decomposition(), vec![(r, 2)]);
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(p(&[-2, 0, 1]).resultant(&p(&[-3, 0, 1])), int(1));
        // Res(x − 3, x − 5) = 3 − 5
        assert_eq!(p(&[-3, 1]).resultant(&p(&[-5, 1])), int(-2));
        // Res(x² − 7, 2x) = −28
        assert_eq!(p(&[-7, 0, 1]).resultant(&p(&[0, 2])), int(-28));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(p(&[3, 5, 2]).discriminant(), int(25 - 24));
        // x³ + 2x + 5: −4·8 − 27·25
        assert_eq!(p(&[5, 2, 0, 1]).discriminant(), int(-32 - 675));
        // (λ²+18λ−27)² − 64λ³ at λ = 9
        assert_eq!(p(&[4, 216, 4 * 729]).discriminant(), int(0));
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(p(&[1, -2, 0, 1]).to_string(), "x^3 - 2*x + 1");
        assert_eq!(Poly::new(vec![rat(-1, 2), int(-1)]).display_in("c"), "-c - 1/2");
    }

    #[test]
    fn homogeneous_substitution_matches_composition() {
        // x² under z ↦ 1/z, homogenized to degree 2: 1.
        let sq = p(&[0, 0, 1]);
        let one = int(1);
        let zero = int(0);
        assert_eq!(sq.homogeneous_substitute(2, &zero, &one, &one, &zero), p(&[1]));
        assert_eq!(sq.homogeneous_substitute(2, &one, &one, &zero, &one), p(&[1, 2, 1]));
    }

    #[test]
    fn exact_division_in_nested_ring() {
        let a: Poly<Poly<Rat>> = Poly::new(vec![p(&[1, 1]), p(&[0, 1])]);
        let b: Poly<Poly<Rat>> = Poly::new(vec![p(&[1, 0, -1]), p(&[0, 1, -1]), p(&[0, 0, 1])]);
        let prod = a.clone() * &b;
        assert_eq!(prod.div_exact(&a), b);
        assert!(b.try_div_exact(&Poly::new(vec![p(&[0, 1]), p(&[1])])).is_none());
    }
}
