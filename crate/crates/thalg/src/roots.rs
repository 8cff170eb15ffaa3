//! Certified isolation of all complex roots of a squarefree integer polynomial.
//!
//! Real roots come from Sturm bisection. Non-real roots are approximated by
//! Aberth iteration in fixed-point arithmetic and certified with the exact
//! inclusion bound `min_j |z - z_j| <= n |f(z) / f'(z)|`: once the `(n-k)/2`
//! upper-half-plane disks are pairwise disjoint, stay above the real axis and
//! are mirrored below it, each disk holds exactly one root. Refinement uses
//! exact Newton steps intersected with the previous box, so boxes are nested.
//!
//! Canonical labelling: roots are sorted once, on the initial certified
//! boxes, by `(re.lo, im.lo)`. Refinement never reorders them.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{int_rat, is_squarefree, PolyZ, Rat};
use crate::sturm::{cauchy_bound, isolate_real, Interval, RealRoot};

/// Axis-parallel isolating box of one complex root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootBox {
    pub re: Interval,
    pub im: Interval,
}

impl RootBox {
    pub fn is_real(&self) -> bool {
        self.im.lo.is_zero() && self.im.hi.is_zero()
    }

    /// Largest side length.
    pub fn width(&self) -> Rat {
        let a = self.re.width();
        let b = self.im.width();
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn overlaps(&self, o: &RootBox) -> bool {
        self.re.overlaps(&o.re) && self.im.overlaps(&o.im)
    }

    pub fn contains_box(&self, o: &RootBox) -> bool {
        self.re.contains_interval(&o.re) && self.im.contains_interval(&o.im)
    }

    pub fn conj(&self) -> RootBox {
        RootBox {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }
}

#[derive(Clone, Debug)]
struct UpperRoot {
    // center as exact rationals (dyadic)
    x: Rat,
    y: Rat,
    bx: RootBox,
    extra: u32,
}

#[derive(Clone, Debug)]
enum Slot {
    Real(usize),
    Upper(usize),
    Lower(usize),
}

/// All roots of a squarefree polynomial with nested, refinable boxes.
#[derive(Clone, Debug)]
pub struct RootSet {
    f: PolyZ,
    fd: PolyZ,
    real: Vec<RealRoot>,
    upper: Vec<UpperRoot>,
    order: Vec<Slot>,
}

impl RootSet {
    pub fn new(f: &PolyZ) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !is_squarefree(f) {
            return Err(Error::NotSquarefree);
        }
        let n = f.deg() as usize;
        let real = isolate_real(f);
        let k = real.len();
        let fd = f.derivative();
        let mut upper = Vec::new();
        if n > k {
            let mut bits = 64u32;
            loop {
                if let Some(u) = certify_upper(f, &fd, (n - k) / 2, bits) {
                    upper = u;
                    break;
                }
                bits *= 2;
                if bits > 1 << 16 {
                    return Err(Error::EmbeddingUnresolved);
                }
            }
        }
        let mut order: Vec<Slot> = (0..k)
            .map(Slot::Real)
            .chain((0..upper.len()).flat_map(|i| [Slot::Upper(i), Slot::Lower(i)]))
            .collect();
        let mut rs = RootSet {
            f: f.clone(),
            fd,
            real,
            upper,
            order: Vec::new(),
        };
        order.sort_by(|a, b| {
            let (ba, bb) = (rs.slot_box(a), rs.slot_box(b));
            ba.re.lo.cmp(&bb.re.lo).then(ba.im.lo.cmp(&bb.im.lo))
        });
        rs.order = order;
        Ok(rs)
    }

    pub fn poly(&self) -> &PolyZ {
        &self.f
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn real_count(&self) -> usize {
        self.real.len()
    }

    fn slot_box(&self, s: &Slot) -> RootBox {
        match *s {
            Slot::Real(i) => RootBox {
                re: self.real[i].iv.clone(),
                im: Interval::zero(),
            },
            Slot::Upper(i) => self.upper[i].bx.clone(),
            Slot::Lower(i) => self.upper[i].bx.conj(),
        }
    }

    pub fn root_box(&self, i: usize) -> RootBox {
        self.slot_box(&self.order[i])
    }

    pub fn boxes(&self) -> Vec<RootBox> {
        (0..self.len()).map(|i| self.root_box(i)).collect()
    }

    pub fn is_real(&self, i: usize) -> bool {
        matches!(self.order[i], Slot::Real(_))
    }

    /// Label of the complex conjugate of root `i`.
    pub fn conjugate_of(&self, i: usize) -> usize {
        let target = match self.order[i] {
            Slot::Real(_) => return i,
            Slot::Upper(j) => (j, false),
            Slot::Lower(j) => (j, true),
        };
        self.order
            .iter()
            .position(|s| match (s, target) {
                (Slot::Upper(j), (t, true)) => *j == t,
                (Slot::Lower(j), (t, false)) => *j == t,
                _ => false,
            })
            .expect("conjugate present")
    }

    /// Refine every box to width at most `eps`.
    pub fn refine(&mut self, eps: &Rat) {
        for r in self.real.iter_mut() {
            r.refine_to(&self.f, eps);
        }
        for u in self.upper.iter_mut() {
            while &u.bx.width() > eps {
                newton_step(&self.f, &self.fd, u);
            }
        }
    }

    /// Complex interval enclosing root `i`.
    pub fn enclosure(&self, i: usize) -> crate::cinterval::CInterval {
        let b = self.root_box(i);
        crate::cinterval::CInterval::new(b.re, b.im)
    }
}

/// Isolate every complex root of squarefree `f` with boxes of width at most
/// `precision`, in canonical order.
pub fn isolate_roots(f: &PolyZ, precision: &Rat) -> Result<Vec<RootBox>> {
    if !precision.is_positive() {
        return Err(Error::Invalid("precision must be positive".into()));
    }
    let mut rs = RootSet::new(f)?;
    rs.refine(precision);
    Ok(rs.boxes())
}

// ---- fixed-point complex arithmetic for Aberth iteration ----

#[derive(Clone, Debug)]
struct Fx {
    re: BigInt,
    im: BigInt,
}

struct FxCtx {
    bits: u32,
}

impl FxCtx {
    fn one(&self) -> BigInt {
        BigInt::one() << self.bits
    }
    fn add(&self, a: &Fx, b: &Fx) -> Fx {
        Fx { re: &a.re + &b.re, im: &a.im + &b.im }
    }
    fn sub(&self, a: &Fx, b: &Fx) -> Fx {
        Fx { re: &a.re - &b.re, im: &a.im - &b.im }
    }
    fn mul(&self, a: &Fx, b: &Fx) -> Fx {
        Fx {
            re: (&a.re * &b.re - &a.im * &b.im) >> self.bits,
            im: (&a.re * &b.im + &a.im * &b.re) >> self.bits,
        }
    }
    fn div(&self, a: &Fx, b: &Fx) -> Option<Fx> {
        let d = &b.re * &b.re + &b.im * &b.im;
        if d.is_zero() {
            return None;
        }
        let nr = (&a.re * &b.re + &a.im * &b.im) << self.bits;
        let ni = (&a.im * &b.re - &a.re * &b.im) << self.bits;
        Some(Fx { re: nr / &d, im: ni / &d })
    }
    fn from_int(&self, c: &BigInt) -> Fx {
        Fx { re: c << self.bits, im: BigInt::zero() }
    }
    fn eval(&self, f: &[Fx], z: &Fx) -> Fx {
        let mut acc = Fx { re: BigInt::zero(), im: BigInt::zero() };
        for c in f.iter().rev() {
            acc = self.add(&self.mul(&acc, z), c);
        }
        acc
    }
    fn to_rat(&self, z: &Fx) -> (Rat, Rat) {
        let d = self.one();
        (
            Rat::new(z.re.clone(), d.clone()),
            Rat::new(z.im.clone(), d),
        )
    }
    fn small(&self, z: &Fx) -> bool {
        // |z| below ~2^(-bits/2)
        let lim = BigInt::one() << (self.bits / 2);
        z.re.abs() < lim && z.im.abs() < lim
    }
}

fn aberth(f: &PolyZ, bits: u32) -> Option<Vec<Fx>> {
    let ctx = FxCtx { bits };
    let n = f.deg() as usize;
    let fc: Vec<Fx> = f.coeffs().iter().map(|c| ctx.from_int(c)).collect();
    let fd = f.derivative();
    let fdc: Vec<Fx> = fd.coeffs().iter().map(|c| ctx.from_int(c)).collect();
    // initial points on a circle, offset angle to break symmetry
    let r = cauchy_bound(f).to_string().parse::<f64>().unwrap_or(1e6).min(1e12) / 2.0;
    let scale = 2f64.powi(52);
    let mut z: Vec<Fx> = (0..n)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            let (re, im) = (r * t.cos(), r * t.sin());
            let sh = |v: f64| -> BigInt {
                let m = BigInt::from((v * scale) as i128);
                if bits >= 52 {
                    m << (bits - 52)
                } else {
                    m >> (52 - bits)
                }
            };
            Fx { re: sh(re), im: sh(im) }
        })
        .collect();
    let one = Fx { re: ctx.one(), im: BigInt::zero() };
    for _ in 0..(50 + 20 * n + bits as usize) {
        let mut done = true;
        for k in 0..n {
            let fz = ctx.eval(&fc, &z[k]);
            let dz = ctx.eval(&fdc, &z[k]);
            let ratio = match ctx.div(&fz, &dz) {
                Some(r) => r,
                None => continue,
            };
            let mut s = Fx { re: BigInt::zero(), im: BigInt::zero() };
            for j in 0..n {
                if j != k {
                    if let Some(inv) = ctx.div(&one, &ctx.sub(&z[k], &z[j])) {
                        s = ctx.add(&s, &inv);
                    }
                }
            }
            let denom = ctx.sub(&one, &ctx.mul(&ratio, &s));
            let w = match ctx.div(&ratio, &denom) {
                Some(w) => w,
                None => continue,
            };
            if !ctx.small(&w) {
                done = false;
            }
            z[k] = ctx.sub(&z[k], &w);
        }
        if done {
            return Some(z);
        }
    }
    Some(z)
}

/// Squared modulus of a complex polynomial value at rational `(x, y)`.
fn eval_complex(f: &PolyZ, x: &Rat, y: &Rat) -> (Rat, Rat) {
    let mut re = Rat::zero();
    let mut im = Rat::zero();
    for c in f.coeffs().iter().rev() {
        let nr = &re * x - &im * y + int_rat(c);
        let ni = &re * y + &im * x;
        re = nr;
        im = ni;
    }
    (re, im)
}

/// Rational `r >= sqrt(q)`, with relative slack about `2^-bits`.
fn sqrt_upper(q: &Rat, bits: u32) -> Rat {
    let scale = BigInt::one() << (2 * bits);
    let t = (q * Rat::from_integer(scale)).ceil().to_integer();
    let s = t.sqrt() + BigInt::one();
    Rat::new(s, BigInt::one() << bits)
}

/// Certified inclusion radius `n |f(z)/f'(z)|` at `z = (x, y)`.
fn inclusion_radius(f: &PolyZ, fd: &PolyZ, x: &Rat, y: &Rat, bits: u32) -> Option<Rat> {
    let n = Rat::from_integer(BigInt::from(f.deg()));
    let (a, b) = eval_complex(f, x, y);
    let (c, d) = eval_complex(fd, x, y);
    let den = &c * &c + &d * &d;
    if den.is_zero() {
        return None;
    }
    let q = &n * &n * (&a * &a + &b * &b) / den;
    if q.is_zero() {
        // exact root; any positive radius works
        return Some(Rat::new(BigInt::one(), BigInt::one() << bits));
    }
    Some(sqrt_upper(&q, bits))
}

fn square(x: &Rat, y: &Rat, r: &Rat) -> RootBox {
    RootBox {
        re: Interval::new(x - r, x + r),
        im: Interval::new(y - r, y + r),
    }
}

fn linf_separated(a: &RootBox, b: &RootBox) -> bool {
    !a.overlaps(b)
}

fn certify_upper(f: &PolyZ, fd: &PolyZ, m: usize, bits: u32) -> Option<Vec<UpperRoot>> {
    let z = aberth(f, bits)?;
    let ctx = FxCtx { bits };
    let mut approx: Vec<(Rat, Rat)> = z.iter().map(|w| ctx.to_rat(w)).collect();
    approx.sort_by(|a, b| b.1.cmp(&a.1));
    let mut out: Vec<UpperRoot> = Vec::with_capacity(m);
    for (x, y) in approx.into_iter().take(m) {
        if !y.is_positive() {
            return None;
        }
        let r = inclusion_radius(f, fd, &x, &y, bits)?;
        let bx = square(&x, &y, &r);
        if !bx.im.lo.is_positive() {
            return None;
        }
        if out.iter().any(|u| !linf_separated(&u.bx, &bx)) {
            return None;
        }
        out.push(UpperRoot { x, y, bx, extra: 0 });
    }
    Some(out)
}

fn round_dyadic(q: &Rat, bits: u32) -> Rat {
    let s = Rat::from_integer(BigInt::one() << bits);
    Rat::new((q * &s).round().to_integer(), BigInt::one() << bits)
}

fn intersect(a: &Interval, b: &Interval) -> Interval {
    let lo = if a.lo > b.lo { a.lo.clone() } else { b.lo.clone() };
    let hi = if a.hi < b.hi { a.hi.clone() } else { b.hi.clone() };
    Interval::new(lo, hi)
}

/// One refinement step. Precision depends only on the current box width, so
/// the box sequence is independent of the requested target.
fn newton_step(f: &PolyZ, fd: &PolyZ, u: &mut UpperRoot) {
    let w = u.bx.width();
    // bits ~ 2 * log2(1/w) + 40
    let mut lg = 0u32;
    let mut t = w.clone();
    let one = Rat::one();
    while t < one && lg < 1 << 20 {
        t *= Rat::from_integer(BigInt::from(2));
        lg += 1;
    }
    let bits = 2 * lg + 40 + u.extra;
    let (a, b) = eval_complex(f, &u.x, &u.y);
    let (c, d) = eval_complex(fd, &u.x, &u.y);
    let den = &c * &c + &d * &d;
    let (mut nx, mut ny) = (u.x.clone(), u.y.clone());
    if !den.is_zero() {
        // (a + bi) / (c + di)
        let qr = (&a * &c + &b * &d) / &den;
        let qi = (&b * &c - &a * &d) / &den;
        nx = round_dyadic(&(&u.x - qr), bits);
        ny = round_dyadic(&(&u.y - qi), bits);
    }
    let candidate = inclusion_radius(f, fd, &nx, &ny, bits).map(|r| square(&nx, &ny, &r));
    let shrunk = match candidate {
        Some(c) if c.overlaps(&u.bx) => {
            let re = intersect(&c.re, &u.bx.re);
            let im = intersect(&c.im, &u.bx.im);
            RootBox { re, im }
        }
        _ => u.bx.clone(),
    };
    if shrunk.width() * Rat::new(BigInt::from(4), BigInt::from(3)) > w {
        // Newton made no progress from this center: bisect-free fallback is
        // to recenter at the box center and halve the scale of the search.
        let cx = shrunk.re.mid();
        let cy = shrunk.im.mid();
        if let Some(r) = inclusion_radius(f, fd, &cx, &cy, bits + 8) {
            let c = square(&cx, &cy, &r);
            if c.overlaps(&shrunk) {
                let re = intersect(&c.re, &shrunk.re);
                let im = intersect(&c.im, &shrunk.im);
                u.bx = RootBox { re, im };
            }
        }
        u.x = cx;
        u.y = cy;
        u.extra += 16;
        return;
    }
    u.bx = shrunk;
    u.x = nx;
    u.y = ny;
}
