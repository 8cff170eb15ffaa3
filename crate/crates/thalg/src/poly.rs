//! Dense univariate polynomials over Z and Q.
//!
//! Coefficients are stored constant term first and are always trimmed, so the
//! zero polynomial is the empty vector and `coeffs.last()` is the leading
//! coefficient. Gcd and resultant use the subresultant remainder sequence over
//! Z; rational inputs are cleared to primitive integer polynomials first.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_rat(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

/// Dense polynomial with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyZ {
    coeffs: Vec<BigInt>,
}

/// Dense polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    coeffs: Vec<Rat>,
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl PolyZ {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        PolyZ { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        PolyZ::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        PolyZ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyZ::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        PolyZ::new(vec![c])
    }

    /// `x`
    pub fn x() -> Self {
        PolyZ::from_i64s(&[0, 1])
    }

    /// `x^n - a`
    pub fn pure_power(n: usize, a: i64) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::from(-a);
        c[n] += BigInt::one();
        PolyZ::new(c)
    }

    /// The monic polynomial `x^n + a[n-1] x^(n-1) + ... + a[0]`.
    pub fn monic_from_tail(a: &[BigInt]) -> Self {
        let mut c = a.to_vec();
        c.push(BigInt::one());
        PolyZ::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = -1`.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> PolyZ {
        if self.is_zero() {
            return PolyZ::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        PolyZ::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn neg(&self) -> PolyZ {
        PolyZ::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, o: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyZ::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyZ::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &PolyZ) -> PolyZ {
        if self.is_zero() || o.is_zero() {
            return PolyZ::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        PolyZ::new(c)
    }

    pub fn scale(&self, k: &BigInt) -> PolyZ {
        PolyZ::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, e: u32) -> PolyZ {
        (0..e).fold(PolyZ::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> PolyZ {
        PolyZ::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + int_rat(c))
    }

    /// Sign of `f(x)` without building the full rational value.
    pub fn sign_at(&self, x: &Rat) -> i32 {
        // Clear denominators: d^n f(n/d) is an integer with the same sign
        // up to the sign of d^n, and d > 0.
        let (num, den) = (x.numer(), x.denom());
        let n = match self.degree() {
            None => return 0,
            Some(n) => n,
        };
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        let mut terms = Vec::with_capacity(n + 1);
        for _ in 0..=n {
            terms.push(dpow.clone());
            dpow *= den;
        }
        // sum c_i num^i den^(n-i)
        let mut npow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * &npow * &terms[n - i];
            npow *= num;
        }
        sign_of(&acc)
    }

    /// `f(x + s)`
    pub fn shift(&self, s: &BigInt) -> PolyZ {
        let mut out = PolyZ::zero();
        let lin = PolyZ::new(vec![s.clone(), BigInt::one()]);
        for c in self.coeffs.iter().rev() {
            out = out.mul(&lin).add(&PolyZ::constant(c.clone()));
        }
        out
    }

    /// `x^deg f(1/x)`
    pub fn reversed(&self) -> PolyZ {
        let mut c = self.coeffs.clone();
        c.reverse();
        PolyZ::new(c)
    }

    /// `f(-x)`
    pub fn mirrored(&self) -> PolyZ {
        PolyZ::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Pseudo-remainder: `lc(g)^(deg f - deg g + 1) f = q g + r`.
    pub fn prem(&self, g: &PolyZ) -> PolyZ {
        assert!(!g.is_zero(), "pseudo-division by zero polynomial");
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return self.clone();
        }
        let lg = g.lc();
        let mut r = self.coeffs.clone();
        let mut e = self.coeffs.len() - dg;
        while r.len() > dg {
            let lr = r.last().unwrap().clone();
            let shift = r.len() - 1 - dg;
            for c in r.iter_mut() {
                *c *= &lg;
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                r[shift + j] -= &lr * gc;
            }
            r.pop();
            trim(&mut r);
            e -= 1;
        }
        let k = num_traits::pow(lg, e);
        PolyZ::new(r.into_iter().map(|c| c * &k).collect())
    }

    /// Exact division over Z; `None` if `g` does not divide `self` in Z[x].
    pub fn div_exact(&self, g: &PolyZ) -> Option<PolyZ> {
        if g.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(PolyZ::zero());
        }
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return None;
        }
        let lg = g.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len() - dg];
        while r.len() > dg {
            let lr = r.last().unwrap().clone();
            let (qc, rem) = lr.div_rem(&lg);
            if !rem.is_zero() {
                return None;
            }
            let shift = r.len() - 1 - dg;
            for (j, gc) in g.coeffs.iter().enumerate() {
                r[shift + j] -= &qc * gc;
            }
            q[shift] = qc;
            r.pop();
        }
        trim(&mut r);
        if r.is_empty() {
            Some(PolyZ::new(q))
        } else {
            None
        }
    }

    pub fn divides(&self, f: &PolyZ) -> bool {
        f.div_exact(self).is_some()
    }

    pub fn to_q(&self) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(int_rat).collect())
    }

    /// Height: max absolute coefficient.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_one()
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        trim(&mut coeffs);
        PolyQ { coeffs }
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyQ::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        PolyQ::new(vec![c])
    }

    pub fn x() -> Self {
        PolyQ::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        PolyZ::from_i64s(c).to_q()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn monic(&self) -> PolyQ {
        if self.is_zero() {
            return PolyQ::zero();
        }
        let l = self.lc();
        PolyQ::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn neg(&self) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, o: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &PolyQ) -> PolyQ {
        if self.is_zero() || o.is_zero() {
            return PolyQ::zero();
        }
        let mut c = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        PolyQ::new(c)
    }

    pub fn scale(&self, k: &Rat) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> PolyQ {
        PolyQ::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division: `self = q * g + r`, `deg r < deg g`.
    pub fn div_rem(&self, g: &PolyQ) -> (PolyQ, PolyQ) {
        assert!(!g.is_zero(), "division by zero polynomial");
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return (PolyQ::zero(), self.clone());
        }
        let inv = g.lc().recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rat::zero(); r.len() - dg];
        while r.len() > dg {
            let qc = r.last().unwrap() * &inv;
            let shift = r.len() - 1 - dg;
            if !qc.is_zero() {
                for (j, gc) in g.coeffs.iter().enumerate() {
                    r[shift + j] -= &qc * gc;
                }
            }
            q[shift] = qc;
            r.pop();
        }
        (PolyQ::new(q), PolyQ::new(r))
    }

    pub fn rem(&self, g: &PolyQ) -> PolyQ {
        self.div_rem(g).1
    }

    /// Common denominator times self, as a primitive integer polynomial with
    /// positive leading coefficient.
    pub fn to_primitive_z(&self) -> PolyZ {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        PolyZ::new(
            self.coeffs
                .iter()
                .map(|c| (c * Rat::from_integer(den.clone())).to_integer())
                .collect(),
        )
        .primitive()
    }

    /// Composition `self(g)`.
    pub fn compose(&self, g: &PolyQ) -> PolyQ {
        self.coeffs
            .iter()
            .rev()
            .fold(PolyQ::zero(), |acc, c| acc.mul(g).add(&PolyQ::constant(c.clone())))
    }
}

/// Monic greatest common divisor over Q; `gcd(0, 0) = 0`.
pub fn poly_gcd(f: &PolyQ, g: &PolyQ) -> PolyQ {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    gcd_z(&f.to_primitive_z(), &g.to_primitive_z()).to_q().monic()
}

/// Primitive gcd over Z with positive leading coefficient (subresultant PRS).
pub fn gcd_z(f: &PolyZ, g: &PolyZ) -> PolyZ {
    if f.is_zero() {
        return g.primitive();
    }
    if g.is_zero() {
        return f.primitive();
    }
    let (mut a, mut b) = (f.primitive(), g.primitive());
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (a.deg() - b.deg()) as u32;
        let r = a.prem(&b);
        if r.is_zero() {
            return b.primitive();
        }
        if r.deg() == 0 {
            return PolyZ::one();
        }
        a = b;
        let d = &gg * num_traits::pow(h.clone(), delta as usize);
        b = PolyZ::new(r.coeffs.iter().map(|c| c / &d).collect());
        gg = a.lc();
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(gg.clone(), delta as usize) / num_traits::pow(h, delta as usize - 1)
        };
    }
}

/// Resultant of two integer polynomials (subresultant algorithm).
pub fn resultant_z(f: &PolyZ, g: &PolyZ) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut s = BigInt::one();
    if a.deg() < b.deg() {
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.deg() == 0 {
        return s * num_traits::pow(b.lc(), a.deg() as usize);
    }
    let ca = a.content();
    let cb = b.content();
    let t = num_traits::pow(ca.clone(), b.deg() as usize) * num_traits::pow(cb.clone(), a.deg() as usize);
    a = PolyZ::new(a.coeffs.iter().map(|c| c / &ca).collect());
    b = PolyZ::new(b.coeffs.iter().map(|c| c / &cb).collect());
    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (a.deg() - b.deg()) as usize;
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
        let r = a.prem(&b);
        a = b;
        let d = &gg * num_traits::pow(h.clone(), delta);
        b = PolyZ::new(r.coeffs.iter().map(|c| c / &d).collect());
        gg = a.lc();
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(gg.clone(), delta) / num_traits::pow(h, delta - 1)
        };
        if b.deg() <= 0 {
            break;
        }
    }
    if b.is_zero() {
        return BigInt::zero();
    }
    let da = a.deg() as usize;
    // h <- h^(1 - deg a) lc(b)^deg a
    let hb = if da == 0 {
        h
    } else {
        num_traits::pow(b.lc(), da) / num_traits::pow(h, da - 1)
    };
    s * t * hb
}

/// Resultant over Q.
pub fn resultant(f: &PolyQ, g: &PolyQ) -> Result<Rat> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    // f = cf * F with F integral, likewise g; Res(f,g) = cf^deg g cg^deg f Res(F,G).
    let (fz, cf) = clear_denominators(f);
    let (gz, cg) = clear_denominators(g);
    let r = int_rat(&resultant_z(&fz, &gz));
    let df = f.deg() as i32;
    let dg = g.deg() as i32;
    Ok(r * pow_rat(&cf, dg) * pow_rat(&cg, df))
}

fn pow_rat(x: &Rat, e: i32) -> Rat {
    num_traits::pow(x.clone(), e as usize)
}

/// `f = c * F` with `F` in Z[x] primitive; returns `(F, c)`.
pub fn clear_denominators(f: &PolyQ) -> (PolyZ, Rat) {
    let fz = f.to_primitive_z();
    if fz.is_zero() {
        return (fz, Rat::zero());
    }
    let c = f.lc() / int_rat(&fz.lc());
    (fz, c)
}

/// Discriminant `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &PolyZ) -> Result<BigInt> {
    let n = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::DegreeTooSmall),
        Some(n) => n,
    };
    let r = resultant_z(f, &f.derivative());
    let d = r / f.lc();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

/// Primitive `f / gcd(f, f')`: same roots, all simple.
pub fn squarefree_part(f: &PolyZ) -> Result<PolyZ> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok(PolyZ::one());
    }
    let g = gcd_z(f, &f.derivative());
    Ok(f.primitive()
        .div_exact(&g)
        .expect("gcd divides f")
        .primitive())
}

pub fn is_squarefree(f: &PolyZ) -> bool {
    !f.is_zero() && gcd_z(f, &f.derivative()).deg() == 0
}

/// Squarefree decomposition of a primitive polynomial: `f = prod a_i^i`.
/// Returns the nonconstant `(a_i, i)` in increasing multiplicity.
pub fn squarefree_decomposition(f: &PolyZ) -> Vec<(PolyZ, usize)> {
    let mut out = Vec::new();
    if f.deg() <= 0 {
        return out;
    }
    let f = f.to_q().monic();
    let fp = f.derivative();
    let a0 = poly_gcd(&f, &fp);
    let mut b = f.div_rem(&a0).0;
    let c = fp.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.deg() > 0 {
        let a = poly_gcd(&b, &d);
        if a.deg() > 0 {
            out.push((a.to_primitive_z(), i));
        }
        b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

fn fmt_poly<T: fmt::Display + Zero + One + PartialOrd + Clone + std::ops::Neg<Output = T>>(
    coeffs: &[T],
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = *c < T::zero();
        let a = if neg { -c.clone() } else { c.clone() };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        let unit = a.is_one();
        match i {
            0 => write!(f, "{a}")?,
            _ => {
                if !unit {
                    write!(f, "{a}*")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(&self.coeffs, f)
    }
}

impl fmt::Debug for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyZ({self})")
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(&self.coeffs, f)
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQ({self})")
    }
}
