use crate::error::{Error, Result};
use crate::exactnum::{locate_roots, Poly, Rat, Root};

use super::{P1Point, RatMap, P1};

/// Zeros with positive and poles with negative multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorSupport {
    pub terms: Vec<(P1Point, i64)>,
}

impl DivisorSupport {
    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|(_, m)| m).sum()
    }

    /// Sum of the positive multiplicities.
    pub fn positive_degree(&self) -> i64 {
        self.terms.iter().map(|(_, m)| *m).filter(|m| *m > 0).sum()
    }

    pub fn multiplicity(&self, p: &P1Point) -> i64 {
        self.terms
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }
}

fn push_roots(out: &mut Vec<(P1Point, i64)>, p: &Poly<Rat>, sign: i64) -> Result<()> {
    let loc = locate_roots(p);
    if let Some((block, _)) = loc.unresolved.first() {
        return Err(Error::UnresolvedBlock {
            degree: block.deg0(),
            poly: block.display_in("z"),
        });
    }
    for (root, m) in loc.roots {
        let m = sign * m as i64;
        match root {
            Root::Rational(r) => out.push((P1Point::rational(r), m)),
            Root::Conjugates(s) => {
                out.push((P1::Finite(s.conj()), m));
                out.push((P1::Finite(s), m));
            }
        }
    }
    Ok(())
}

/// Divisor of a nonzero function, ∞ included.
pub fn divisor(r: &RatMap<Rat>) -> Result<DivisorSupport> {
    let mut terms = Vec::new();
    push_roots(&mut terms, r.num(), 1)?;
    push_roots(&mut terms, r.den(), -1)?;
    let at_inf = r.den().deg0() as i64 - r.num().deg0() as i64;
    if at_inf != 0 {
        terms.push((P1::Infinity, at_inf));
    }
    terms.sort_by(|a, b| a.0.report_cmp(&b.0));
    Ok(DivisorSupport { terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn divisor_of_a_simple_quotient() {
        let r = RatMap::new(Poly::from_ints(&[0, 0, 1]), Poly::from_ints(&[-3, 1])).unwrap();
        let d = divisor(&r).unwrap();
        assert_eq!(
            d.terms,
            vec![
                (P1Point::rational(int(0)), 2),
                (P1Point::rational(int(3)), -1),
                (P1::Infinity, -1)
            ]
        );
        assert_eq!(d.degree(), 0);
        assert_eq!(d.positive_degree(), 2);
    }

    #[test]
    fn unresolved_block_is_an_error() {
        let r = RatMap::new(Poly::from_ints(&[-2, 0, 0, 1]), Poly::one()).unwrap();
        assert!(matches!(divisor(&r), Err(Error::UnresolvedBlock { degree: 3, .. })));
        let half = RatMap::new(Poly::new(vec![rat(-1, 2), int(1)]), Poly::one()).unwrap();
        assert_eq!(divisor(&half).unwrap().multiplicity(&P1Point::rational(rat(1, 2))), 1);
    }
}
