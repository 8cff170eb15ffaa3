//! Text front ends: polynomial expressions and key=value configuration.
//!
//! Polynomial grammar, whitespace ignored between tokens:
//!
//! ```text
//! expr := sign? term (('+'|'-') term)*
//! term := coeff | coeff? '*'? 'x' ('^' nat)?
//! ```
//!
//! The optional leading sign and `*` let the rendered form of a [`PolyZ`]
//! (`-3*x^2 + x - 1`) parse back to itself. Repeated powers add up.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::factor::DEFAULT_MAX_INPUT_DEGREE;
use crate::galois::DEFAULT_MAX_SPLITTING_DEGREE;
use crate::poly::PolyZ;

/// Exponents above this are rejected before any allocation.
pub const MAX_PARSE_EXPONENT: usize = 4096;

struct Lexer<'a> {
    b: &'a [u8],
    i: usize,
}

impl Lexer<'_> {
    fn skip(&mut self) {
        while self.i < self.b.len() && self.b[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip();
        self.b.get(self.i).copied()
    }

    fn digits(&mut self) -> Option<(usize, &str)> {
        self.skip();
        let start = self.i;
        while self.i < self.b.len() && self.b[self.i].is_ascii_digit() {
            self.i += 1;
        }
        (self.i > start).then(|| (start, std::str::from_utf8(&self.b[start..self.i]).unwrap()))
    }
}

pub fn parse_poly(text: &str) -> Result<PolyZ> {
    let mut lx = Lexer { b: text.as_bytes(), i: 0 };
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut negative = match lx.peek() {
        Some(b'-') => {
            lx.i += 1;
            true
        }
        Some(b'+') => {
            lx.i += 1;
            false
        }
        _ => false,
    };
    loop {
        let (c, e) = term(&mut lx)?;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigInt::zero());
        }
        if negative {
            coeffs[e] -= c;
        } else {
            coeffs[e] += c;
        }
        match lx.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(_) => return Err(Error::parse(lx.i, "expected `+`, `-` or end of input")),
        }
        lx.i += 1;
    }
    Ok(PolyZ::new(coeffs))
}

fn term(lx: &mut Lexer) -> Result<(BigInt, usize)> {
    let coeff = lx.digits().map(|(_, d)| d.parse::<BigInt>().unwrap());
    let mut star = false;
    if coeff.is_some() && lx.peek() == Some(b'*') {
        lx.i += 1;
        star = true;
    }
    if lx.peek() != Some(b'x') {
        return match coeff {
            Some(c) if !star => Ok((c, 0)),
            _ => Err(Error::parse(lx.i, if star { "expected `x`" } else { "expected a coefficient or `x`" })),
        };
    }
    lx.i += 1;
    let mut e = 1;
    if lx.peek() == Some(b'^') {
        lx.i += 1;
        lx.skip();
        let at = lx.i;
        let (pos, d) = lx.digits().ok_or_else(|| Error::parse(at, "expected an exponent"))?;
        e = d
            .parse::<usize>()
            .ok()
            .filter(|&e| e <= MAX_PARSE_EXPONENT)
            .ok_or_else(|| Error::parse(pos, format!("exponent exceeds {MAX_PARSE_EXPONENT}")))?;
    }
    Ok((coeff.unwrap_or_else(|| BigInt::from(1)), e))
}

/// Optional settings read from a key=value file. `None` means unset.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub max_splitting_degree: Option<usize>,
    pub max_input_degree: Option<usize>,
    pub default_p: Option<u64>,
}

impl Config {
    pub fn splitting_degree(&self) -> usize {
        self.max_splitting_degree.unwrap_or(DEFAULT_MAX_SPLITTING_DEGREE)
    }

    pub fn input_degree(&self) -> usize {
        self.max_input_degree.unwrap_or(DEFAULT_MAX_INPUT_DEGREE)
    }
}

/// One `key = value` per line; `#` starts a comment; blank lines are skipped.
/// Unknown and repeated keys are errors.
pub fn parse_config(text: &str) -> Result<Config> {
    let mut cfg = Config::default();
    let mut off = 0;
    for raw in text.split_inclusive('\n') {
        let line_start = off;
        off += raw.len();
        let line = raw.split('#').next().unwrap();
        if line.trim().is_empty() {
            continue;
        }
        let eq = line
            .find('=')
            .ok_or_else(|| Error::parse(line_start, "expected `key = value`"))?;
        let key = line[..eq].trim();
        let val = line[eq + 1..].trim();
        let vpos = line_start + eq + 1 + (line[eq + 1..].len() - line[eq + 1..].trim_start().len());
        let num = || {
            val.parse::<u64>()
                .map_err(|_| Error::parse(vpos, format!("bad value `{val}` for `{key}`")))
        };
        let dup = || Error::parse(line_start, format!("repeated key `{key}`"));
        match key {
            "max_splitting_degree" => {
                if cfg.max_splitting_degree.replace(num()? as usize).is_some() {
                    return Err(dup());
                }
            }
            "max_input_degree" => {
                if cfg.max_input_degree.replace(num()? as usize).is_some() {
                    return Err(dup());
                }
            }
            "default_p" => {
                if cfg.default_p.replace(num()?).is_some() {
                    return Err(dup());
                }
            }
            _ => return Err(Error::parse(line_start, format!("unknown key `{key}`"))),
        }
    }
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        assert_eq!(parse_poly("x^2 - 2").unwrap(), PolyZ::from_i64s(&[-2, 0, 1]));
        assert_eq!(parse_poly("3").unwrap(), PolyZ::from_i64s(&[3]));
        assert_eq!(parse_poly("x^2 + x - 1").unwrap(), PolyZ::from_i64s(&[-1, 1, 1]));
    }

    #[test]
    fn extensions_and_round_trip() {
        assert_eq!(parse_poly("-x").unwrap(), PolyZ::from_i64s(&[0, -1]));
        assert_eq!(parse_poly("x^5-2").unwrap(), PolyZ::pure_power(5, 2));
        assert_eq!(parse_poly("2x + 3*x").unwrap(), PolyZ::from_i64s(&[0, 5]));
        assert_eq!(parse_poly("x - x").unwrap(), PolyZ::zero());
        for c in [&[-1, 0, 3][..], &[0, -7, 0, 1], &[5], &[0], &[2, -1]] {
            let f = PolyZ::from_i64s(c);
            assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn errors_carry_positions() {
        let pos = |s: &str| match parse_poly(s) {
            Err(Error::Parse { pos, .. }) => pos,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(pos(""), 0);
        assert_eq!(pos("x^"), 2);
        assert_eq!(pos("x + y"), 4);
        assert_eq!(pos("3*"), 2);
        assert_eq!(pos("x x"), 2);
        assert_eq!(pos("x^99999"), 2);
        assert_eq!(pos("x +"), 3);
    }

    #[test]
    fn config() {
        let c = parse_config("# caps\nmax_splitting_degree = 100\n\ndefault_p=5 # note\n").unwrap();
        assert_eq!(c.max_splitting_degree, Some(100));
        assert_eq!(c.default_p, Some(5));
        assert_eq!(c.input_degree(), DEFAULT_MAX_INPUT_DEGREE);
        assert!(matches!(parse_config("a\nbogus = 1"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_config("default_p = 5\ncolour = 1"), Err(Error::Parse { pos: 14, .. })));
        assert!(matches!(parse_config("default_p = z"), Err(Error::Parse { pos: 12, .. })));
        assert!(parse_config("default_p = 5\ndefault_p = 7").is_err());
    }
}
