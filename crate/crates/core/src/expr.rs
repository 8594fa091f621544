//! Infix expressions for polynomials and rational functions.
//!
//! The grammar is in `docs/grammar.ebnf`. Implicit multiplication is not
//! accepted and `^` takes a nonnegative integer literal, so every string
//! has one parse.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactnum::{Field, Poly, Rat, RatFunc};
use crate::ratmap::RatMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        if ch.is_ascii_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if "+-*/^()".contains(ch) {
            out.push((i, Tok::Op(ch)));
            i += 1;
        } else {
            let c = text[i..].chars().next().expect("nonempty");
            return Err(syntax(i, format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::SyntaxError {
        position,
        message: message.into(),
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let e = n
                    .to_u32()
                    .ok_or_else(|| syntax(at, "exponent too large"))?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            _ => Err(syntax(at, "expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Var(s))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(syntax(self.offset(), "expected ')'"));
                }
                Ok(e)
            }
            Some(Tok::Op(c)) => Err(syntax(at, format!("unexpected {c:?}"))),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(syntax(p.offset(), "trailing input"));
    }
    Ok(e)
}

impl Expr {
    /// Identifiers in sorted order.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Int(_) => {}
            Expr::Var(v) => {
                out.insert(v.clone());
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Var(_) => 5,
        }
    }

    /// `num/den` in the variable `var`; other identifiers are looked up in
    /// `bind`.
    pub fn eval<F: Field>(
        &self,
        var: &str,
        bind: &dyn Fn(&str) -> Option<F>,
    ) -> Result<(Poly<F>, Poly<F>)> {
        Ok(match self {
            Expr::Int(n) => (
                Poly::constant(F::from_rat(&Rat::from_integer(n.clone()))),
                Poly::one(),
            ),
            Expr::Var(v) if v == var => (Poly::x(), Poly::one()),
            Expr::Var(v) => match bind(v) {
                Some(c) => (Poly::constant(c), Poly::one()),
                None => return Err(Error::MultipleVariables(vec![var.into(), v.clone()])),
            },
            Expr::Neg(a) => {
                let (n, d) = a.eval(var, bind)?;
                (-n, d)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let (an, ad) = a.eval(var, bind)?;
                let (bn, bd) = b.eval(var, bind)?;
                let (l, r) = (an * &bd, bn * &ad);
                let n = if matches!(self, Expr::Add(..)) { l + r } else { l - r };
                reduce(n, ad * bd)
            }
            Expr::Mul(a, b) => {
                let (an, ad) = a.eval(var, bind)?;
                let (bn, bd) = b.eval(var, bind)?;
                reduce(an * bn, ad * bd)
            }
            Expr::Div(a, b) => {
                let (an, ad) = a.eval(var, bind)?;
                let (bn, bd) = b.eval(var, bind)?;
                if bn.is_zero() {
                    return Err(Error::OutOfRange("division by zero".into()));
                }
                reduce(an * bd, ad * bn)
            }
            Expr::Pow(a, e) => {
                let (n, d) = a.eval(var, bind)?;
                (n.pow(*e), d.pow(*e))
            }
        })
    }
}

fn reduce<F: Field>(n: Poly<F>, d: Poly<F>) -> (Poly<F>, Poly<F>) {
    if n.is_zero() {
        return (n, Poly::one());
    }
    let g = n.gcd(&d);
    let (n, d) = (n.div_by(&g), d.div_by(&g));
    let inv = d.lc().inv();
    (n.scale(&inv), d.scale(&inv))
}

fn write_child(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Prints with the fewest parentheses that reparse to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Var(v) => f.write_str(v),
            Expr::Neg(a) => {
                f.write_str("-")?;
                write_child(f, a, 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                write_child(f, a, 1)?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                write_child(f, b, 2)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                write_child(f, a, 2)?;
                f.write_str(if matches!(self, Expr::Mul(..)) { "*" } else { "/" })?;
                write_child(f, b, 3)
            }
            Expr::Pow(a, e) => {
                write_child(f, a, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

/// A map in one variable over the rationals.
pub fn parse_map(text: &str) -> Result<(String, RatMap<Rat>)> {
    let e = parse(text)?;
    let vars = e.variables();
    if vars.len() > 1 {
        return Err(Error::MultipleVariables(vars.into_iter().collect()));
    }
    let var = vars.into_iter().next().unwrap_or_else(|| "z".into());
    let (n, d) = e.eval::<Rat>(&var, &|_| None)?;
    Ok((var, RatMap::new(n, d)?))
}

/// A map whose coefficients depend on one parameter.
///
/// The map variable is `z` or `x`, whichever occurs; the other identifier is
/// the parameter. With `value`, the parameter is substituted.
pub struct ParsedMap {
    pub var: String,
    pub param: Option<String>,
    pub expr: Expr,
}

pub fn parse_parametric(text: &str, param: Option<&str>) -> Result<ParsedMap> {
    let expr = parse(text)?;
    let vars: Vec<String> = expr.variables().into_iter().collect();
    let (var, param) = match (vars.len(), param) {
        (0, _) => ("z".to_string(), param.map(str::to_string)),
        (1, Some(p)) if vars[0] == p => ("z".to_string(), Some(p.to_string())),
        (1, _) => (vars[0].clone(), param.map(str::to_string)),
        (2, Some(p)) if vars.iter().any(|v| v == p) => {
            let var = vars.iter().find(|v| *v != p).expect("two names").clone();
            (var, Some(p.to_string()))
        }
        (2, None) => {
            let mapvars: Vec<&String> = vars.iter().filter(|v| *v == "z" || *v == "x").collect();
            if mapvars.len() != 1 {
                return Err(Error::MultipleVariables(vars));
            }
            let var = mapvars[0].clone();
            let p = vars.iter().find(|v| **v != var).expect("two names").clone();
            (var, Some(p))
        }
        _ => return Err(Error::MultipleVariables(vars)),
    };
    Ok(ParsedMap { var, param, expr })
}

impl ParsedMap {
    pub fn at(&self, value: &Rat) -> Result<RatMap<Rat>> {
        let p = self.param.clone();
        let (n, d) = self
            .expr
            .eval::<Rat>(&self.var, &|s| (Some(s) == p.as_deref()).then(|| value.clone()))?;
        RatMap::new(n, d)
    }

    pub fn generic(&self) -> Result<RatMap<RatFunc>> {
        let p = self.param.clone();
        let (n, d) = self
            .expr
            .eval::<RatFunc>(&self.var, &|s| (Some(s) == p.as_deref()).then(RatFunc::param))?;
        RatMap::new(n, d)
    }
}

/// A rational function of the single variable `var` (constants allowed).
pub fn parse_ratfunc(text: &str, var: &str) -> Result<RatFunc> {
    let e = parse(text)?;
    let extra: Vec<String> = e.variables().into_iter().filter(|v| v != var).collect();
    if !extra.is_empty() {
        let mut all = vec![var.to_string()];
        all.extend(extra);
        return Err(Error::MultipleVariables(all));
    }
    let (n, d) = e.eval::<Rat>(var, &|_| None)?;
    Ok(RatFunc::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn degree_three_member() {
        let (var, r) = parse_map("(z^3+z^2)/(9*z+1)").unwrap();
        assert_eq!(var, "z");
        assert_eq!(r, crate::ratmap::deg3_family(&int(9)).unwrap());
        assert_eq!(parse_map("z^5").unwrap().1.degree(), 5);
    }

    #[test]
    fn error_positions() {
        assert_eq!(
            parse("(z^").unwrap_err(),
            Error::SyntaxError {
                position: 3,
                message: "expected a nonnegative integer exponent".into()
            }
        );
        assert!(matches!(parse("2z"), Err(Error::SyntaxError { position: 1, .. })));
        assert!(matches!(parse("z^-1"), Err(Error::SyntaxError { position: 2, .. })));
        assert!(matches!(parse("z $ 1"), Err(Error::SyntaxError { position: 2, .. })));
        assert!(matches!(parse("(z+1"), Err(Error::SyntaxError { position: 4, .. })));
    }

    #[test]
    fn round_trip() {
        for s in [
            "-x^2",
            "(-x)^2",
            "a - -b",
            "a - (b - c)",
            "a/(b*c)",
            "(a/b)/c",
            "(x^2)^3",
            "-(a + b)*c",
            "--x",
            "1/2*x^3 - (x + 1)^2/(3*x - 7)",
        ] {
            let e = parse(s).unwrap();
            let printed = e.to_string();
            assert_eq!(parse(&printed).unwrap(), e, "{s} -> {printed}");
        }
        assert_eq!(parse("a-(b-c)").unwrap().to_string(), "a - (b - c)");
    }

    #[test]
    fn two_variables() {
        assert!(matches!(parse_map("x*y"), Err(Error::MultipleVariables(_))));
        let pm = parse_parametric("(z^3+z^2)/(lambda*z+1)", None).unwrap();
        assert_eq!(pm.param.as_deref(), Some("lambda"));
        assert_eq!(pm.at(&int(9)).unwrap(), parse_map("(z^3+z^2)/(9*z+1)").unwrap().1);
        assert_eq!(pm.generic().unwrap().degree(), 3);
    }

    #[test]
    fn ratfunc_text() {
        let f = parse_ratfunc("256*(t^2-t+1)^3/(t^2*(t-1)^2)", "t").unwrap();
        assert_eq!(f.eval(&int(-1)), Some(int(1728)));
        assert!(parse_ratfunc("1/(t-t)", "t").is_err());
    }
}
