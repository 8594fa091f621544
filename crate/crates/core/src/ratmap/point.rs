use std::cmp::Ordering;
use std::fmt;

use crate::exactnum::{Rat, Surd};

/// A point of the projective line over `F`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum P1<F> {
    Finite(F),
    Infinity,
}

/// Points with rational or quadratic coordinates.
pub type P1Point = P1<Surd>;

impl<F> P1<F> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, P1::Infinity)
    }

    pub fn finite(&self) -> Option<&F> {
        match self {
            P1::Finite(x) => Some(x),
            P1::Infinity => None,
        }
    }
}

impl P1Point {
    pub fn rational(r: Rat) -> Self {
        P1::Finite(Surd::rational(r))
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        self.finite().and_then(|s| s.as_rational())
    }

    /// Total order used for reports: finite values by `(a, b, D)`, then ∞.
    pub fn report_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (P1::Infinity, P1::Infinity) => Ordering::Equal,
            (P1::Infinity, _) => Ordering::Greater,
            (_, P1::Infinity) => Ordering::Less,
            (P1::Finite(x), P1::Finite(y)) => x
                .a()
                .cmp(y.a())
                .then_with(|| x.radicand().cmp(y.radicand()))
                .then_with(|| x.b().cmp(y.b())),
        }
    }
}

impl From<Rat> for P1Point {
    fn from(r: Rat) -> Self {
        P1Point::rational(r)
    }
}

impl<F: fmt::Display> fmt::Display for P1<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1::Finite(x) => write!(f, "{x}"),
            P1::Infinity => f.write_str("oo"),
        }
    }
}
