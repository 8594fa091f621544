//! Determinants, Sylvester matrices and resultants with a polynomial
//! parameter.

use super::field::{Field, Ring};
use super::poly::Poly;

/// Determinant over a field by Gaussian elimination.
pub fn det<F: Field>(mut m: Vec<Vec<F>>) -> F {
    let n = m.len();
    let mut acc = F::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return F::zero();
        };
        if p != k {
            m.swap(p, k);
            acc = -acc;
        }
        let inv = m[k][k].inv();
        acc = acc * &m[k][k];
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].clone() * &inv;
            for j in k + 1..n {
                let t = f.clone() * &m[k][j];
                m[i][j] = m[i][j].clone() - t;
            }
        }
    }
    acc
}

/// Fraction-free (Bareiss) determinant over an integral domain.
pub fn det_bareiss<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut sign = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return R::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].clone() * &m[k][k] - m[i][k].clone() * &m[k][j];
                m[i][j] = t.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Sylvester matrix of `a` and `b` taken with formal degrees `m ≥ deg a`
/// and `n ≥ deg b`.
pub fn sylvester<R: Ring>(a: &Poly<R>, m: usize, b: &Poly<R>, n: usize) -> Vec<Vec<R>> {
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![R::zero(); size];
        for k in 0..=m {
            row[i + m - k] = a.coeff(k);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![R::zero(); size];
        for k in 0..=n {
            row[i + n - k] = b.coeff(k);
        }
        rows.push(row);
    }
    rows
}

/// Resultant with formal degrees over any integral domain.
pub fn resultant_formal<R: Ring>(a: &Poly<R>, m: usize, b: &Poly<R>, n: usize) -> R {
    det_bareiss(sylvester(a, m, b, n))
}

fn param_degree<F: Field>(p: &Poly<Poly<F>>) -> usize {
    p.coeffs().iter().map(|c| c.deg0()).max().unwrap_or(0)
}

/// Newton interpolation through `(xs[i], ys[i])`.
pub fn interpolate<F: Field>(xs: &[F], ys: &[F]) -> Poly<F> {
    let n = xs.len();
    let mut dd: Vec<F> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = dd[i].clone() - &dd[i - 1];
            let den = xs[i].clone() - &xs[i - level];
            dd[i] = num / den;
        }
    }
    let mut out = Poly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = Poly::new(vec![-xs[i].clone(), F::one()]);
        out = out * &lin + &Poly::constant(dd[i].clone());
    }
    out
}

/// `Res_z(a, b)` for `a, b ∈ F[c][z]` with formal z-degrees `m`, `n`,
/// returned as a polynomial in `c`.
///
/// Computed by evaluating the Sylvester determinant at enough integer
/// values of `c` and interpolating; the formal degrees keep the matrix
/// shape fixed so every specialization is a true specialization.
pub fn resultant_in_param<F: Field>(
    a: &Poly<Poly<F>>,
    m: usize,
    b: &Poly<Poly<F>>,
    n: usize,
) -> Poly<F> {
    let bound = n * param_degree(a) + m * param_degree(b);
    let xs: Vec<F> = (0..=bound as i64).map(F::from_i64).collect();
    let ys: Vec<F> = xs
        .iter()
        .map(|c| {
            let ac = a.map(|q| q.eval(c));
            let bc = b.map(|q| q.eval(c));
            F::determinant(sylvester(&ac, m, &bc, n))
        })
        .collect();
    interpolate(&xs, &ys)
}

/// Discriminant in `z` of `g ∈ F[c][z]` taken with formal degree `n`,
/// as a polynomial in `c`.
pub fn discriminant_in_param<F: Field>(g: &Poly<Poly<F>>, n: usize) -> Poly<F> {
    let gz = g.derivative();
    let res = resultant_in_param(g, n, &gz, n - 1);
    let lc = g.coeff(n);
    let d = res.div_by(&lc);
    if (n * (n - 1) / 2) % 2 == 1 {
        -d
    } else {
        d
    }
}

/// Monic `∏ (c − a(ζ)/b(ζ))` over the roots `ζ` of `s`; `b` must not vanish
/// at any root of `s`.
pub fn value_polynomial<F: Field>(s: &Poly<F>, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let ds = s.deg0();
    if ds == 0 {
        return Poly::one();
    }
    let sz: Poly<Poly<F>> = s.map(|x| Poly::constant(x.clone()));
    // a(z) − c·b(z)
    let n = a.deg0().max(b.deg0());
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        coeffs.push(Poly::new(vec![a.coeff(k), -b.coeff(k)]));
    }
    let h = Poly::new(coeffs);
    let hn = h.deg0();
    resultant_in_param(&sz, ds, &h, hn).monic()
}

/// Minimal polynomial of `h` in `F[z]/(s)`, monic.
///
/// When `s` is squarefree this is the squarefree part of the
/// characteristic polynomial of multiplication by `h`, so its roots are
/// exactly the values `h(ζ)` at the roots `ζ` of `s`.
pub fn minimal_polynomial_mod<F: Field>(h: &Poly<F>, s: &Poly<F>) -> Poly<F> {
    let n = s.deg0();
    if n == 0 {
        return Poly::one();
    }
    let h = h.rem(s);
    let mut basis: Vec<(Vec<F>, Vec<F>, usize)> = Vec::new();
    let mut pow = Poly::one();
    for k in 0..=n {
        let mut v: Vec<F> = (0..n).map(|i| pow.coeff(i)).collect();
        let mut combo = vec![F::zero(); n + 1];
        combo[k] = F::one();
        for (bv, bc, piv) in &basis {
            if v[*piv].is_zero() {
                continue;
            }
            let f = v[*piv].clone() / &bv[*piv];
            for (x, y) in v.iter_mut().zip(bv) {
                *x = x.clone() - f.clone() * y;
            }
            for (x, y) in combo.iter_mut().zip(bc) {
                *x = x.clone() - f.clone() * y;
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => return Poly::new(combo).monic(),
            Some(piv) => basis.push((v, combo, piv)),
        }
        pow = (pow * &h).rem(s);
    }
    unreachable!("n + 1 vectors in an n-dimensional space are dependent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::{int, Rat};

    fn p(c: &[i64]) -> Poly<Rat> {
        Poly::from_ints(c)
    }

    #[test]
    fn determinants_agree() {
        let m = vec![
            vec![int(2), int(-1), int(0)],
            vec![int(1), int(3), int(4)],
            vec![int(0), int(5), int(-2)],
        ];
        assert_eq!(det(m.clone()), int(2 * (-6 - 20) - 2));
        assert_eq!(det_bareiss(m), int(-54));
    }

    #[test]
    fn sylvester_resultant_matches_euclid() {
        let a = p(&[-2, 0, 1]);
        let b = p(&[-3, 0, 1]);
        assert_eq!(resultant_formal(&a, 2, &b, 2), a.resultant(&b));
        let c = p(&[1, 2, 3, 4]);
        let d = p(&[5, 0, -1]);
        assert_eq!(resultant_formal(&c, 3, &d, 2), c.resultant(&d));
    }

    #[test]
    fn parametric_resultant_res_x2_minus_c_with_2x() {
        let a: Poly<Poly<Rat>> = Poly::new(vec![p(&[0, -1]), p(&[0]), p(&[1])]);
        let b: Poly<Poly<Rat>> = Poly::new(vec![p(&[0]), p(&[2])]);
        assert_eq!(resultant_in_param(&a, 2, &b, 1), p(&[0, -4]));
        let bar = resultant_formal(&a, 2, &b, 1);
        assert_eq!(bar, p(&[0, -4]));
    }

    #[test]
    fn minimal_polynomial_collapses_equal_values() {
        // h = z² on the roots ±1, ±2 of s takes the two values 1 and 4.
        let s = p(&[-1, 0, 1]) * p(&[-4, 0, 1]);
        let m = minimal_polynomial_mod(&p(&[0, 0, 1]), &s);
        assert_eq!(m, p(&[-1, 1]) * p(&[-4, 1]));
        let cp = value_polynomial(&s, &p(&[0, 0, 1]), &p(&[1]));
        assert_eq!(cp, m.pow(2));
    }

    #[test]
    fn value_polynomial_of_z_squared() {
        // Critical point 0 of z² + 1 has value 1.
        let v = value_polynomial(&p(&[0, 1]), &p(&[1, 0, 1]), &p(&[1]));
        assert_eq!(v, p(&[-1, 1]));
    }
}
