//! JSON encodings shared by the verification driver and the command line.
//!
//! Rationals are strings `"num/den"`, quadratic irrationals are objects
//! `{"a", "b", "D"}` meaning `a + b√D`, and ∞ is the string `"infinity"`.
//! Objects use sorted keys, so output is byte-stable.

use serde_json::{json, Value};

use crate::exactnum::{rat_to_string, Poly, Rat, RatFunc, Surd};
use crate::ratmap::{CriticalData, CriticalValues, DivisorSupport, P1Point, P1};

/// Version stamped on every report.
pub const SCHEMA: u32 = 1;

pub fn rat(r: &Rat) -> Value {
    Value::String(rat_to_string(r))
}

pub fn surd(s: &Surd) -> Value {
    match s.as_rational() {
        Some(r) => rat(r),
        None => json!({
            "a": rat_to_string(s.a()),
            "b": rat_to_string(s.b()),
            "D": radicand(s),
        }),
    }
}

fn radicand(s: &Surd) -> Value {
    match i64::try_from(s.radicand()) {
        Ok(n) => json!(n),
        Err(_) => Value::String(s.radicand().to_string()),
    }
}

pub fn point(p: &P1Point) -> Value {
    match p {
        P1::Infinity => Value::String("infinity".into()),
        P1::Finite(s) => surd(s),
    }
}

pub fn rat_point(p: &P1<Rat>) -> Value {
    match p {
        P1::Infinity => Value::String("infinity".into()),
        P1::Finite(r) => rat(r),
    }
}

/// Coefficients from the constant term up, plus a readable form.
pub fn poly(p: &Poly<Rat>, var: &str) -> Value {
    json!({
        "coefficients": p.coeffs().iter().map(rat).collect::<Vec<_>>(),
        "text": p.display_in(var),
    })
}

pub fn ratfunc(f: &RatFunc, var: &str) -> Value {
    json!({
        "numerator": poly(f.num(), var),
        "denominator": poly(f.den(), var),
        "text": f.display_in(var),
    })
}

pub fn critical_values(cv: &CriticalValues) -> Value {
    json!({
        "count": cv.count(),
        "values": cv.points.iter().map(point).collect::<Vec<_>>(),
        "unresolved": cv.unresolved.iter().map(|p| p.display_in("c")).collect::<Vec<_>>(),
    })
}

pub fn critical_data(cd: &CriticalData<Rat>) -> Value {
    json!({
        "count": cd.count,
        "finite_polynomial": poly(&cd.finite, "c"),
        "infinity": cd.infinity,
        "explicit": critical_values(&cd.values()),
    })
}

/// Critical data of a generic member: symbolic in the parameter.
pub fn generic_critical_data(cd: &CriticalData<RatFunc>, param: &str) -> Value {
    let coeffs: Vec<Value> = cd
        .finite
        .coeffs()
        .iter()
        .map(|c| Value::String(c.display_in(param)))
        .collect();
    json!({
        "count": cd.count,
        "finite_polynomial": coeffs,
        "infinity": cd.infinity,
    })
}

pub fn divisor(d: &DivisorSupport) -> Value {
    let terms: Vec<Value> = d
        .terms
        .iter()
        .map(|(p, m)| json!({"point": point(p), "multiplicity": m}))
        .collect();
    json!({"terms": terms, "degree": d.degree()})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat as mk};
    use num_bigint::BigInt;

    #[test]
    fn encodings() {
        assert_eq!(rat(&int(3)), json!("3/1"));
        assert_eq!(rat(&mk(-1, 27)), json!("-1/27"));
        let s = Surd::new(mk(175, 54), mk(5, 54), BigInt::from(10));
        assert_eq!(
            serde_json::to_string(&surd(&s)).unwrap(),
            r#"{"D":10,"a":"175/54","b":"5/54"}"#
        );
        assert_eq!(point(&P1::Infinity), json!("infinity"));
    }
}
