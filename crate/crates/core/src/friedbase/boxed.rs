use crate::error::Result;
use crate::exactnum::{int, rat, Rat, RatFunc};
use crate::expr::parse_ratfunc;
use crate::hypercurve::canonical_name;

/// What a printed base function measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoxKind {
    /// The j-invariant of the critical quadruple.
    JInvariant,
    /// A cross-ratio of the critical quadruple with three values pinned at
    /// `0, 1, ∞`; its j-invariant is `256(t²−t+1)³/(t²(t−1)²)` of it.
    CrossRatio,
}

/// A closed-form base function for a registered family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxedFormula {
    pub family: &'static str,
    pub param: &'static str,
    pub text: String,
    pub value: RatFunc,
    /// Parameter values outside the family's domain.
    pub excluded: Vec<Rat>,
    pub kind: BoxKind,
}

impl BoxedFormula {
    /// A formula not tied to the registry, e.g. a perturbed control.
    pub fn custom(
        family: &'static str,
        param: &'static str,
        text: &str,
        excluded: Vec<Rat>,
        kind: BoxKind,
    ) -> Result<Self> {
        Ok(BoxedFormula {
            family,
            param,
            text: text.to_string(),
            value: parse_ratfunc(text, param)?,
            excluded,
            kind,
        })
    }
}

const QUINTIC_N: &str = "(p^10 - 40*p^8 - 80*p^7 + 320*p^6 + 1088*p^5 + 320*p^4 \
                         - 1440*p^3 + 720*p^2 + 5120*p + 4096)";

/// The published base function of a family.
pub fn boxed_formula(family: &str) -> Result<BoxedFormula> {
    let name = canonical_name(family)?;
    let (param, text, excluded, kind) = match name {
        "d3g0" => (
            "lambda",
            "(lambda - 3)^3*(lambda^3 - 9*lambda^2 + 243*lambda - 243)^3\
             /((lambda - 1)*(lambda - 9)^3*lambda^6)"
                .to_string(),
            vec![int(0), int(1)],
            BoxKind::JInvariant,
        ),
        "d3g1" => (
            "k",
            "(256*k^6 - 64*k^3 + 1)^3/(k^3*(4*k^3 - 1))".to_string(),
            vec![],
            BoxKind::JInvariant,
        ),
        "d5g2" => (
            "p",
            format!(
                "{QUINTIC_N}^3/(p^4*(2*p + 5)^6*(p^2 - 4*p - 16)*(p - 2)^3*(p + 2)^5)"
            ),
            vec![int(0), int(2), rat(-5, 2)],
            BoxKind::JInvariant,
        ),
        "sekividu" => (
            "s",
            "-s*(108*s^2 - 700*s + 1125)^2/(50000*(s - 3)^3)".to_string(),
            vec![int(3)],
            BoxKind::CrossRatio,
        ),
        "legendre" => (
            "t",
            "256*(t^2 - t + 1)^3/(t^2*(t - 1)^2)".to_string(),
            vec![int(0), int(1)],
            BoxKind::JInvariant,
        ),
        other => unreachable!("registry name {other}"),
    };
    BoxedFormula::custom(name, param, &text, excluded, kind)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_degrees() {
        let q = boxed_formula("birch").unwrap();
        assert_eq!(q.value.num().deg0(), 30);
        assert_eq!(q.value.den().deg0(), 20);
        let s = boxed_formula("sekividu").unwrap();
        assert_eq!(s.value.degree(), 5);
        assert_eq!(s.kind, BoxKind::CrossRatio);
        let d = boxed_formula("d3g0").unwrap();
        assert_eq!(d.value.eval(&int(-1)), Some(rat(488095744, 125)));
    }
}
