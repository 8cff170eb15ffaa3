//! The axiom stream for the algebraic part of the theory of `E`, and ground
//! root queries `R_n(a_0, .., a_{n-1})`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::membership::{ClassKind, FieldTag, Oracle};
use crate::poly::PolyZ;
use crate::sentence::{decode, dichotomy, no_root, parse_sentence, splits, Family};

/// Default cap on `max_deg` for the stream.
pub const DEFAULT_MAX_STREAM_DEGREE: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomRecord {
    pub family: Family,
    /// `a_0, .., a_{n-1}` of the monic polynomial.
    pub coeffs: Vec<BigInt>,
    pub p: u64,
    pub rendered: String,
}

impl AxiomRecord {
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn poly(&self) -> PolyZ {
        PolyZ::monic_from_tail(&self.coeffs)
    }

    /// `family TAB degree TAB a0,..,a_{n-1} TAB p TAB sentence`
    pub fn to_line(&self) -> String {
        let cs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.family.name(),
            self.degree(),
            cs.join(","),
            self.p,
            self.rendered
        )
    }
}

/// Parses one stream line (without the trailing newline).
pub fn parse_record_line(line: &str) -> Result<AxiomRecord> {
    let mut fields = Vec::new();
    let mut start = 0;
    for (i, ch) in line.char_indices() {
        if ch == '\t' {
            fields.push((start, &line[start..i]));
            start = i + 1;
        }
    }
    fields.push((start, &line[start..]));
    if fields.len() != 5 {
        return Err(Error::parse(line.len(), format!("expected 5 tab-separated fields, found {}", fields.len())));
    }
    let (fpos, fam) = fields[0];
    let family = Family::from_name(fam).ok_or_else(|| Error::parse(fpos, format!("unknown family `{fam}`")))?;
    let (dpos, deg) = fields[1];
    let degree: usize = deg
        .parse()
        .map_err(|_| Error::parse(dpos, format!("bad degree `{deg}`")))?;
    let (cpos, cs) = fields[2];
    let mut coeffs = Vec::new();
    let mut off = cpos;
    for tok in cs.split(',') {
        let c: BigInt = tok
            .parse()
            .map_err(|_| Error::parse(off, format!("bad coefficient `{tok}`")))?;
        coeffs.push(c);
        off += tok.len() + 1;
    }
    if coeffs.len() != degree {
        return Err(Error::parse(cpos, format!("{} coefficients for degree {degree}", coeffs.len())));
    }
    let (ppos, ps) = fields[3];
    let p: u64 = ps.parse().map_err(|_| Error::parse(ppos, format!("bad prime `{ps}`")))?;
    let (spos, s) = fields[4];
    parse_sentence(s).map_err(|e| match e {
        Error::Parse { pos, msg } => Error::parse(spos + pos, msg),
        other => other,
    })?;
    Ok(AxiomRecord {
        family,
        coeffs,
        p,
        rendered: s.to_string(),
    })
}

/// The ground atom `R_n(a)` over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootQuery {
    pub a: Vec<BigInt>,
    pub field: FieldTag,
}

impl RootQuery {
    pub fn n(&self) -> usize {
        self.a.len()
    }
}

pub fn eval_r(q: &RootQuery, oracle: &Oracle) -> Result<bool> {
    if q.a.is_empty() {
        return Err(Error::DegreeTooSmall);
    }
    oracle.has_root(&PolyZ::monic_from_tail(&q.a), q.field)
}

/// Records for one coefficient tuple: none if reducible, otherwise
/// DICHOTOMY followed by NO_ROOT or SPLITS.
pub fn records_for(a: &[BigInt], p: u64, oracle: &Oracle) -> Result<Vec<AxiomRecord>> {
    let label = oracle.classify(a, p)?;
    let f = PolyZ::monic_from_tail(a);
    let rec = |family: Family, s: String| AxiomRecord {
        family,
        coeffs: a.to_vec(),
        p,
        rendered: s,
    };
    Ok(match label.kind {
        ClassKind::NotIrreducible => vec![],
        ClassKind::IrrNoRootInE => vec![
            rec(Family::Dichotomy, dichotomy(&f).to_string()),
            rec(Family::NoRoot, no_root(&f).to_string()),
        ],
        ClassKind::IrrSplitsInE => vec![
            rec(Family::Dichotomy, dichotomy(&f).to_string()),
            rec(Family::Splits, splits(&f).to_string()),
        ],
    })
}

/// Coefficient tuples of length `n` in `[-h, h]^n`, lexicographic with `a_0`
/// most significant.
pub fn tuples(n: usize, h: i64) -> impl Iterator<Item = Vec<BigInt>> {
    let width = (2 * h + 1) as u64;
    let total = width.pow(n as u32);
    (0..total).map(move |mut k| {
        let mut v = vec![BigInt::from(0); n];
        for i in (0..n).rev() {
            v[i] = BigInt::from((k % width) as i64 - h);
            k /= width;
        }
        v
    })
}

pub fn axiom_stream(max_deg: usize, max_height: i64, p: u64, oracle: &Oracle) -> Result<Vec<AxiomRecord>> {
    let mut out = Vec::new();
    axiom_stream_with(max_deg, max_height, p, oracle, |r| {
        out.push(r);
        Ok(())
    })?;
    Ok(out)
}

/// Streams records to `sink` in canonical order.
pub fn axiom_stream_with(
    max_deg: usize,
    max_height: i64,
    p: u64,
    oracle: &Oracle,
    mut sink: impl FnMut(AxiomRecord) -> Result<()>,
) -> Result<()> {
    let cap = oracle.caps().max_defining_degree.min(DEFAULT_MAX_STREAM_DEGREE);
    if max_deg > cap {
        return Err(Error::DegreeCapExceeded {
            estimate: max_deg as u64,
            cap: cap as u64,
        });
    }
    if max_height < 0 {
        return Err(Error::Invalid("height must be nonnegative".into()));
    }
    for n in 1..=max_deg {
        for a in tuples(n, max_height) {
            for r in records_for(&a, p, oracle)? {
                sink(r)?;
            }
        }
    }
    Ok(())
}

/// Re-derives a record: the sentence must parse, decode to the record's
/// family and polynomial, render identically, and the family must agree
/// with `classify`.
pub fn axiom_check(rec: &AxiomRecord, oracle: &Oracle) -> bool {
    let Ok(s) = parse_sentence(&rec.rendered) else {
        return false;
    };
    if s.to_string() != rec.rendered {
        return false;
    }
    let f = rec.poly();
    if decode(&s) != Some((rec.family, f)) {
        return false;
    }
    let Ok(label) = oracle.classify(&rec.coeffs, rec.p) else {
        return false;
    };
    match rec.family {
        Family::Dichotomy => label.kind != ClassKind::NotIrreducible,
        Family::NoRoot => label.kind == ClassKind::IrrNoRootInE,
        Family::Splits => label.kind == ClassKind::IrrSplitsInE,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn eval_r_examples() {
        let o = Oracle::default();
        let q = |a: &[i64], field| RootQuery { a: b(a), field };
        assert!(eval_r(&q(&[5], FieldTag::QBar), &o).unwrap());
        assert!(eval_r(&q(&[-2, 0], FieldTag::E(3)), &o).unwrap());
        assert!(!eval_r(&q(&[1, 0], FieldTag::TotR), &o).unwrap());
    }

    #[test]
    fn stream_examples() {
        let o = Oracle::default();
        let s = axiom_stream(1, 1, 5, &o).unwrap();
        let x_plus_1: Vec<&AxiomRecord> = s.iter().filter(|r| r.coeffs == b(&[1])).collect();
        assert_eq!(x_plus_1.len(), 2);
        assert_eq!(x_plus_1[0].family, Family::Dichotomy);
        assert_eq!(x_plus_1[1].family, Family::Splits);

        let s = axiom_stream(2, 2, 3, &o).unwrap();
        assert!(s.iter().any(|r| r.coeffs == b(&[2, 0]) && r.family == Family::Splits));

        let r = records_for(&b(&[-2, 0, 0, 0, 0]), 3, &o).unwrap();
        assert_eq!(r[1].family, Family::NoRoot);
    }

    #[test]
    fn checks() {
        let o = Oracle::default();
        let f = PolyZ::from_i64s(&[-2, 0, 1]);
        let good = AxiomRecord {
            family: Family::Splits,
            coeffs: b(&[-2, 0]),
            p: 3,
            rendered: splits(&f).to_string(),
        };
        assert!(axiom_check(&good, &o));
        let forged = AxiomRecord {
            family: Family::NoRoot,
            rendered: no_root(&f).to_string(),
            ..good.clone()
        };
        assert!(!axiom_check(&forged, &o));
        let line = good.to_line();
        assert_eq!(parse_record_line(&line).unwrap(), good);
        assert!(matches!(
            parse_record_line("SPLITS\t2\t-2,x\t3\t= 0 0"),
            Err(Error::Parse { pos: 12, .. })
        ));
    }
}
