//! First-order sentences in the language of rings, in prefix notation.
//!
//! ```text
//! formula := 'E' var formula | 'A' var formula
//!          | '!' formula | '&' formula formula | '|' formula formula
//!          | '->' formula formula | '=' term term
//! term    := '0' | '1' | var | '+' term term | '*' term term
//! var     := [a-z][a-z0-9_]*
//! ```
//!
//! Tokens are separated by whitespace; rendering uses single spaces.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::PolyZ;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Zero,
    One,
    Var(String),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    Eq(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Zero => write!(f, "0"),
            Term::One => write!(f, "1"),
            Term::Var(v) => write!(f, "{v}"),
            Term::Add(a, b) => write!(f, "+ {a} {b}"),
            Term::Mul(a, b) => write!(f, "* {a} {b}"),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Eq(a, b) => write!(f, "= {a} {b}"),
            Formula::Not(a) => write!(f, "! {a}"),
            Formula::And(a, b) => write!(f, "& {a} {b}"),
            Formula::Or(a, b) => write!(f, "| {a} {b}"),
            Formula::Implies(a, b) => write!(f, "-> {a} {b}"),
            Formula::Exists(v, a) => write!(f, "E {v} {a}"),
            Formula::Forall(v, a) => write!(f, "A {v} {a}"),
        }
    }
}

fn add(a: Term, b: Term) -> Term {
    Term::Add(Box::new(a), Box::new(b))
}

fn mul(a: Term, b: Term) -> Term {
    Term::Mul(Box::new(a), Box::new(b))
}

/// Right-nested sum; the empty sum is `0`.
pub fn sum(mut terms: Vec<Term>) -> Term {
    let Some(mut acc) = terms.pop() else {
        return Term::Zero;
    };
    while let Some(t) = terms.pop() {
        acc = add(t, acc);
    }
    acc
}

/// Right-nested product; the empty product is `1`.
pub fn product(mut terms: Vec<Term>) -> Term {
    let Some(mut acc) = terms.pop() else {
        return Term::One;
    };
    while let Some(t) = terms.pop() {
        acc = mul(t, acc);
    }
    acc
}

/// A positive integer as a sum of ones.
pub fn numeral(k: &BigInt) -> Term {
    assert!(!k.is_negative());
    let n: usize = k.try_into().expect("small numeral");
    sum(vec![Term::One; n])
}

/// `sum c_i v^i` for nonnegative coefficients, highest degree first.
pub fn poly_term(coeffs: &[BigInt], var: &str) -> Term {
    let mut terms = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mut factors = Vec::new();
        if !c.is_one() || i == 0 {
            factors.push(numeral(c));
        }
        factors.extend(std::iter::repeat_n(Term::Var(var.to_string()), i));
        terms.push(product(factors));
    }
    sum(terms)
}

/// Splits `f` as `P - N` with `P`, `N` having nonnegative coefficients.
pub fn split_signs(f: &PolyZ) -> (Vec<BigInt>, Vec<BigInt>) {
    let pos = f.coeffs().iter().map(|c| if c.is_positive() { c.clone() } else { BigInt::zero() }).collect();
    let neg = f.coeffs().iter().map(|c| if c.is_negative() { -c } else { BigInt::zero() }).collect();
    (pos, neg)
}

/// The atom `f(var) = 0`, written `= P(var) N(var)`.
pub fn zero_atom(f: &PolyZ, var: &str) -> Formula {
    let (p, n) = split_signs(f);
    Formula::Eq(poly_term(&p, var), poly_term(&n, var))
}

/// `! E x f(x) = 0`
pub fn no_root(f: &PolyZ) -> Formula {
    Formula::Not(Box::new(Formula::Exists("x".into(), Box::new(zero_atom(f, "x")))))
}

/// `E x1 .. E xn A y  f(y) = prod (y + xi)`, written `= P(y) + prod N(y)`
/// (or `= P(y) prod` when `N = 0`). The `xi` are the negated roots.
pub fn splits(f: &PolyZ) -> Formula {
    let n = f.deg().max(0) as usize;
    let (p, neg) = split_signs(f);
    let prod = product(
        (1..=n)
            .map(|i| add(Term::Var("y".into()), Term::Var(format!("x{i}"))))
            .collect(),
    );
    let rhs = if neg.iter().all(|c| c.is_zero()) {
        prod
    } else {
        add(prod, poly_term(&neg, "y"))
    };
    let mut body = Formula::Forall("y".into(), Box::new(Formula::Eq(poly_term(&p, "y"), rhs)));
    for i in (1..=n).rev() {
        body = Formula::Exists(format!("x{i}"), Box::new(body));
    }
    body
}

pub fn dichotomy(f: &PolyZ) -> Formula {
    Formula::Or(Box::new(no_root(f)), Box::new(splits(f)))
}

struct Parser<'a> {
    toks: Vec<(usize, &'a str)>,
    i: usize,
    len: usize,
}

const MAX_DEPTH: usize = 10_000;

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        let mut toks = Vec::new();
        let mut start = None;
        for (i, ch) in s.char_indices() {
            if ch.is_whitespace() {
                if let Some(b) = start.take() {
                    toks.push((b, &s[b..i]));
                }
            } else if start.is_none() {
                start = Some(i);
            }
        }
        if let Some(b) = start {
            toks.push((b, &s[b..]));
        }
        Parser { toks, i: 0, len: s.len() }
    }

    fn next(&mut self) -> Result<(usize, &'a str)> {
        let t = self
            .toks
            .get(self.i)
            .copied()
            .ok_or_else(|| Error::parse(self.len, "unexpected end of sentence"))?;
        self.i += 1;
        Ok(t)
    }

    fn var(&mut self) -> Result<String> {
        let (pos, t) = self.next()?;
        if is_var(t) {
            Ok(t.to_string())
        } else {
            Err(Error::parse(pos, format!("expected a variable, found `{t}`")))
        }
    }

    fn formula(&mut self, depth: usize) -> Result<Formula> {
        let (pos, t) = self.next()?;
        if depth > MAX_DEPTH {
            return Err(Error::parse(pos, "nesting too deep"));
        }
        let d = depth + 1;
        Ok(match t {
            "E" => {
                let v = self.var()?;
                Formula::Exists(v, Box::new(self.formula(d)?))
            }
            "A" => {
                let v = self.var()?;
                Formula::Forall(v, Box::new(self.formula(d)?))
            }
            "!" => Formula::Not(Box::new(self.formula(d)?)),
            "&" => Formula::And(Box::new(self.formula(d)?), Box::new(self.formula(d)?)),
            "|" => Formula::Or(Box::new(self.formula(d)?), Box::new(self.formula(d)?)),
            "->" => Formula::Implies(Box::new(self.formula(d)?), Box::new(self.formula(d)?)),
            "=" => Formula::Eq(self.term(d)?, self.term(d)?),
            _ => return Err(Error::parse(pos, format!("expected a formula, found `{t}`"))),
        })
    }

    fn term(&mut self, depth: usize) -> Result<Term> {
        let (pos, t) = self.next()?;
        if depth > MAX_DEPTH {
            return Err(Error::parse(pos, "nesting too deep"));
        }
        Ok(match t {
            "0" => Term::Zero,
            "1" => Term::One,
            "+" => add(self.term(depth + 1)?, self.term(depth + 1)?),
            "*" => mul(self.term(depth + 1)?, self.term(depth + 1)?),
            v if is_var(v) => Term::Var(v.to_string()),
            _ => return Err(Error::parse(pos, format!("expected a term, found `{t}`"))),
        })
    }
}

fn is_var(t: &str) -> bool {
    let mut cs = t.chars();
    cs.next().is_some_and(|c| c.is_ascii_lowercase())
        && cs.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

pub fn parse_sentence(s: &str) -> Result<Formula> {
    let mut p = Parser::new(s);
    let f = p.formula(0)?;
    if let Some(&(pos, t)) = p.toks.get(p.i) {
        return Err(Error::parse(pos, format!("trailing input `{t}`")));
    }
    Ok(f)
}

/// A term as a polynomial in `var`; `None` if another variable occurs.
pub fn term_poly(t: &Term, var: &str) -> Option<PolyZ> {
    Some(match t {
        Term::Zero => PolyZ::zero(),
        Term::One => PolyZ::one(),
        Term::Var(v) if v == var => PolyZ::x(),
        Term::Var(_) => return None,
        Term::Add(a, b) => term_poly(a, var)?.add(&term_poly(b, var)?),
        Term::Mul(a, b) => term_poly(a, var)?.mul(&term_poly(b, var)?),
    })
}

/// Which of the three axiom shapes a sentence has, with its polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Dichotomy,
    NoRoot,
    Splits,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Dichotomy => "DICHOTOMY",
            Family::NoRoot => "NO_ROOT",
            Family::Splits => "SPLITS",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "DICHOTOMY" => Some(Family::Dichotomy),
            "NO_ROOT" => Some(Family::NoRoot),
            "SPLITS" => Some(Family::Splits),
            _ => None,
        }
    }
}

fn decode_no_root(f: &Formula) -> Option<PolyZ> {
    let Formula::Not(inner) = f else { return None };
    let Formula::Exists(v, atom) = inner.as_ref() else { return None };
    let Formula::Eq(l, r) = atom.as_ref() else { return None };
    Some(term_poly(l, v)?.sub(&term_poly(r, v)?))
}

/// Product of `(y + x_i)` factors, returning the `x_i` in order.
fn decode_product(t: &Term, y: &str) -> Option<Vec<String>> {
    let linear = |t: &Term| match t {
        Term::Add(a, b) => match (a.as_ref(), b.as_ref()) {
            (Term::Var(u), Term::Var(x)) if u == y && x != y => Some(x.clone()),
            _ => None,
        },
        _ => None,
    };
    match t {
        Term::Mul(a, b) => {
            let mut v = vec![linear(a)?];
            v.extend(decode_product(b, y)?);
            Some(v)
        }
        _ => Some(vec![linear(t)?]),
    }
}

fn decode_splits(f: &Formula) -> Option<PolyZ> {
    let mut vars = Vec::new();
    let mut cur = f;
    while let Formula::Exists(v, inner) = cur {
        vars.push(v.clone());
        cur = inner;
    }
    let Formula::Forall(y, atom) = cur else { return None };
    let Formula::Eq(l, r) = atom.as_ref() else { return None };
    let p = term_poly(l, y)?;
    let (prod, neg) = match r {
        Term::Add(a, b) if decode_product(a, y).is_some() => (a.as_ref(), term_poly(b, y)?),
        _ => (r, PolyZ::zero()),
    };
    let xs = decode_product(prod, y)?;
    if xs != vars || vars.contains(y) {
        return None;
    }
    let f = p.sub(&neg);
    (f.deg() == xs.len() as isize && f.is_monic()).then_some(f)
}

/// Recovers the family and polynomial of a rendered axiom.
pub fn decode(f: &Formula) -> Option<(Family, PolyZ)> {
    if let Formula::Or(a, b) = f {
        let g = decode_no_root(a)?;
        let h = decode_splits(b)?;
        return (g == h).then_some((Family::Dichotomy, g));
    }
    if let Some(g) = decode_no_root(f) {
        return Some((Family::NoRoot, g));
    }
    decode_splits(f).map(|g| (Family::Splits, g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> PolyZ {
        PolyZ::from_i64s(c)
    }

    #[test]
    fn rendering() {
        assert_eq!(no_root(&z(&[-2, 0, 1])).to_string(), "! E x = * x x + 1 1");
        assert_eq!(splits(&z(&[1, 1])).to_string(), "E x1 A y = + y 1 + y x1");
        assert_eq!(
            splits(&z(&[-2, 0, 1])).to_string(),
            "E x1 E x2 A y = * y y + * + y x1 + y x2 + 1 1"
        );
        assert_eq!(numeral(&BigInt::from(3)).to_string(), "+ 1 + 1 1");
    }

    #[test]
    fn round_trip() {
        for c in [vec![1i64, 1], vec![-2, 0, 1], vec![2, -3, 0, 1], vec![0, 0, 1], vec![-1, 1]] {
            let f = z(&c);
            for (fam, s) in [
                (Family::NoRoot, no_root(&f)),
                (Family::Splits, splits(&f)),
                (Family::Dichotomy, dichotomy(&f)),
            ] {
                let text = s.to_string();
                let parsed = parse_sentence(&text).unwrap();
                assert_eq!(parsed, s);
                assert_eq!(decode(&parsed), Some((fam, f.clone())), "{text}");
            }
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_sentence("= x"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_sentence("= 0 0 0"), Err(Error::Parse { pos: 6, .. })));
        assert!(matches!(parse_sentence("E X = 0 0"), Err(Error::Parse { pos: 2, .. })));
        assert!(parse_sentence("-> = 0 1 & ! = 1 1 A z = z z").is_ok());
    }
}
