use crate::exactnum::{Field, Poly};

/// Splits the roots of a squarefree `t` by their order of vanishing `k` in
/// `p`, returning monic pieces paired with `k`; the order-0 piece is omitted.
///
/// Roots of order at least `k + 1` are the common roots of `t` and
/// `p, p′, …, p⁽ᵏ⁾`.
pub(crate) fn split_by_order<F: Field>(t: &Poly<F>, p: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let mut out = Vec::new();
    if t.is_constant() || p.is_zero() {
        return out;
    }
    let mut current = t.gcd(p);
    let mut deriv = p.derivative();
    let mut k = 1;
    while !current.is_constant() {
        let next = current.gcd(&deriv);
        let piece = current.div_by(&next);
        if !piece.is_constant() {
            out.push((piece, k));
        }
        current = next;
        deriv = deriv.derivative();
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rat;

    #[test]
    fn orders_of_vanishing() {
        // t = x(x−1)(x−2), p = x³(x−1)
        let t: Poly<Rat> = Poly::from_ints(&[0, 2, -3, 1]);
        let p: Poly<Rat> = Poly::from_ints(&[0, 0, 0, -1, 1]);
        let pieces = split_by_order(&t, &p);
        assert_eq!(
            pieces,
            vec![(Poly::from_ints(&[-1, 1]), 1), (Poly::from_ints(&[0, 1]), 3)]
        );
    }
}
