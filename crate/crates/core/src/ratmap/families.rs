use crate::error::{Error, Result};
use crate::exactnum::{Field, Poly, Rat};

use super::RatMap;

/// `(z³ + z²)/(λz + 1)`; `λ = 0` merges the poles, `λ = 1` drops the degree.
pub fn deg3_family<F: Field>(lambda: &F) -> Result<RatMap<F>> {
    let degenerate = |reason: &str| Error::DegenerateParameter {
        family: "d3g0".into(),
        value: lambda.to_string(),
        reason: reason.into(),
    };
    if lambda.is_zero() {
        return Err(degenerate("the poles collide"));
    }
    if lambda.is_one() {
        return Err(degenerate("degree drops"));
    }
    let num = Poly::new(vec![F::zero(), F::zero(), F::one(), F::one()]);
    let den = Poly::new(vec![F::one(), lambda.clone()]);
    RatMap::new(num, den)
}

/// Degree-4 normal form `(z⁴ + pz³ + qz²)/(rz² + sz + 1)`.
pub fn deg4_map(t: &[Rat; 4]) -> Result<RatMap<Rat>> {
    let [p, q, r, s] = t.clone();
    let zero = Rat::from_integer(0.into());
    let one = Rat::from_integer(1.into());
    RatMap::new(
        Poly::new(vec![zero.clone(), zero, q, p, one.clone()]),
        Poly::new(vec![one, s, r]),
    )
}

/// `μ·(p, q, r, s) = (μp, μ²q, r/μ², s/μ)`; the map becomes `μ⁴R(z/μ)`.
pub fn deg4_weight_action(mu: &Rat, t: &[Rat; 4]) -> Result<[Rat; 4]> {
    if mu == &Rat::from_integer(0.into()) {
        return Err(Error::OutOfRange("weight must be nonzero".into()));
    }
    let [p, q, r, s] = t;
    let m2 = mu * mu;
    Ok([mu * p, &m2 * q, r / &m2, s / mu])
}

/// `(p, q, r, s) ↦ (s, r, q, p)`; the map becomes `1/R(1/z)`.
pub fn deg4_involution(t: &[Rat; 4]) -> [Rat; 4] {
    let [p, q, r, s] = t.clone();
    [s, r, q, p]
}

/// Dimensions of the Hurwitz space and of its quotient by pre- and
/// post-composition: `(2(d+g) − 2, 2(d+g) − 5)`.
pub fn hurwitz_dims(d: usize, g: usize) -> Result<(usize, usize)> {
    let ok = if g == 0 { d >= 3 } else { d > 2 * g };
    if !ok {
        return Err(Error::OutOfRange(format!(
            "need d >= 3 for g = 0 and d >= 2g+1 otherwise (d = {d}, g = {g})"
        )));
    }
    let n = 2 * (d + g);
    Ok((n - 2, n - 5))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::ratmap::Moebius;

    #[test]
    fn degenerate_parameters() {
        assert!(matches!(deg3_family(&int(0)), Err(Error::DegenerateParameter { .. })));
        assert!(matches!(deg3_family(&int(1)), Err(Error::DegenerateParameter { .. })));
        assert_eq!(deg3_family(&int(9)).unwrap().degree(), 3);
    }

    #[test]
    fn weight_two_on_ones() {
        let ones = [int(1), int(1), int(1), int(1)];
        let w = deg4_weight_action(&int(2), &ones).unwrap();
        assert_eq!(w, [int(2), int(4), rat(1, 4), rat(1, 2)]);
        let r = deg4_map(&ones).unwrap();
        let shrink = Moebius::new(int(1), int(0), int(0), int(2)).unwrap();
        let scale = Moebius::new(int(16), int(0), int(0), int(1)).unwrap();
        assert_eq!(scale.post(&shrink.pre(&r)), deg4_map(&w).unwrap());
        assert_eq!(deg4_weight_action(&int(1), &ones).unwrap(), ones);
    }

    #[test]
    fn involution_matches_inversion() {
        let t = [int(3), int(-1), rat(2, 5), int(7)];
        assert_eq!(deg4_involution(&deg4_involution(&t)), t);
        let inv = Moebius::new(int(0), int(1), int(1), int(0)).unwrap();
        let r = deg4_map(&t).unwrap();
        assert_eq!(inv.post(&inv.pre(&r)), deg4_map(&deg4_involution(&t)).unwrap());
    }

    #[test]
    fn dimensions() {
        assert_eq!(hurwitz_dims(3, 0).unwrap(), (4, 1));
        assert_eq!(hurwitz_dims(4, 0).unwrap(), (6, 3));
        assert_eq!(hurwitz_dims(3, 1).unwrap(), (6, 3));
        assert!(hurwitz_dims(2, 0).is_err());
        assert!(hurwitz_dims(4, 2).is_err());
    }
}
