//! Sturm chains and exact real-root counting.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::factor::is_irreducible;
use crate::poly::{int_rat, is_squarefree, squarefree_part, PolyZ, Rat};

/// Signed remainder sequence `f, f', -rem(f, f'), ...`, kept primitive.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<PolyZ>,
}

impl SturmChain {
    pub fn new(f: &PolyZ) -> Self {
        let mut chain = vec![f.clone()];
        let d = f.derivative();
        if !d.is_zero() {
            chain.push(d);
        }
        while chain.len() >= 2 {
            let a = &chain[chain.len() - 2];
            let b = &chain[chain.len() - 1];
            if b.deg() == 0 {
                break;
            }
            let delta = (a.deg() - b.deg()) as u32;
            let mut r = a.prem(b);
            // prem multiplies by lc(b)^(delta+1); undo a negative factor
            if b.lc().is_negative() && delta.is_multiple_of(2) {
                r = r.neg();
            }
            if r.is_zero() {
                break;
            }
            let c = r.content();
            let r = PolyZ::new(r.coeffs().iter().map(|x| -(x / &c)).collect());
            chain.push(r);
        }
        SturmChain { chain }
    }

    pub fn polys(&self) -> &[PolyZ] {
        &self.chain
    }

    /// Sign variations of the chain at `x`.
    pub fn variations(&self, x: &Rat) -> usize {
        count_variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    /// Sign variations at `+inf` (`pos = true`) or `-inf`.
    pub fn variations_at_infinity(&self, pos: bool) -> usize {
        count_variations(self.chain.iter().map(|p| {
            let s = if p.lc().is_positive() { 1 } else { -1 };
            if !pos && p.deg() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }
}

fn count_variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut v = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Number of distinct real roots of squarefree `f` in `(a, b]`.
pub fn sturm_count(f: &PolyZ, a: &Rat, b: &Rat) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    if a >= b {
        return Err(Error::Invalid("sturm_count requires a < b".into()));
    }
    if f.sign_at(a) == 0 || f.sign_at(b) == 0 {
        return Err(Error::EndpointIsRoot);
    }
    let chain = SturmChain::new(f);
    Ok(chain.variations(a) - chain.variations(b))
}

/// Integer `B` with every complex root of `f` satisfying `|z| < B`
/// (Cauchy: `1 + max |a_i / a_n|`).
pub fn cauchy_bound(f: &PolyZ) -> BigInt {
    let lc = f.lc().abs();
    let m = f
        .coeffs()
        .iter()
        .take(f.coeffs().len().saturating_sub(1))
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    // ceil(m / lc) + 1
    let q = (&m + &lc - BigInt::one()) / &lc;
    q + BigInt::one()
}

/// Number of distinct real roots of `f`.
pub fn count_real_roots(f: &PolyZ) -> Result<usize> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Ok(0),
        Some(_) => {
            let g = squarefree_part(f)?;
            let b = int_rat(&cauchy_bound(&g));
            sturm_count(&g, &-b.clone(), &b)
        }
    }
}

/// Decides whether an irreducible `f` has only real roots, i.e. whether its
/// splitting field is totally real.
pub fn is_totally_real(f: &PolyZ) -> Result<bool> {
    if !is_irreducible(f)? {
        return Err(Error::NotIrreducible);
    }
    Ok(count_real_roots(f)? == f.deg() as usize)
}

/// Closed rational interval.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn zero() -> Self {
        Interval::point(Rat::zero())
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, o: &Interval) -> bool {
        self.lo <= o.lo && o.hi <= self.hi
    }

    pub fn overlaps(&self, o: &Interval) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-&self.hi, -&self.lo)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

/// Isolating interval of one real root: either a point or `(lo, hi]` with
/// `f(lo), f(hi)` nonzero of opposite sign.
#[derive(Clone, Debug)]
pub(crate) struct RealRoot {
    pub iv: Interval,
    sign_hi: i32,
}

impl RealRoot {
    /// One bisection step; the sequence of intervals is determined by `f`
    /// and the starting interval only.
    pub fn bisect(&mut self, f: &PolyZ) {
        if self.iv.is_point() {
            return;
        }
        let m = self.iv.mid();
        let s = f.sign_at(&m);
        if s == 0 {
            self.iv = Interval::point(m);
        } else if s == self.sign_hi {
            self.iv.hi = m;
        } else {
            self.iv.lo = m;
        }
    }

    pub fn refine_to(&mut self, f: &PolyZ, eps: &Rat) {
        while &self.iv.width() > eps {
            self.bisect(f);
        }
    }
}

/// Isolate all real roots of squarefree `f` in increasing order.
pub(crate) fn isolate_real(f: &PolyZ) -> Vec<RealRoot> {
    let chain = SturmChain::new(f);
    let b = int_rat(&cauchy_bound(f));
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.variations(&lo) - chain.variations(&hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            let sign_hi = f.sign_at(&hi);
            out.push(RealRoot {
                iv: Interval::new(lo, hi),
                sign_hi,
            });
            continue;
        }
        let two = Rat::from_integer(BigInt::from(2));
        let mid = (&lo + &hi) / &two;
        let split = if f.sign_at(&mid) != 0 {
            mid
        } else {
            // choose a nearby non-root split point deterministically
            let w = &hi - &lo;
            (1..)
                .map(|k| &mid + &w / Rat::from_integer(BigInt::from(4 * k + 1)))
                .find(|x| f.sign_at(x) != 0)
                .unwrap()
        };
        stack.push((split.clone(), hi));
        stack.push((lo, split));
    }
    out.sort_by(|a, b| a.iv.lo.cmp(&b.iv.lo));
    out
}
