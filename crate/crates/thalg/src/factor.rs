//! Factorization of integer polynomials over Q.
//!
//! Squarefree decomposition, Berlekamp factorization modulo a good prime,
//! multifactor Hensel lifting past a Mignotte-style coefficient bound, and
//! subset recombination with trace and trailing-coefficient pruning.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::modp::{berlekamp, PolyP};
use crate::poly::{discriminant, squarefree_decomposition, PolyZ};

/// Default cap on the input degree accepted by [`factor`].
pub const DEFAULT_MAX_INPUT_DEGREE: usize = 24;

/// How many good primes are tried before Hensel lifting; the one giving the
/// fewest modular factors wins (ties go to the smaller prime).
const PRIME_TRIALS: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    /// Irreducible primitive factors with positive leading coefficient, in
    /// canonical order (degree, then coefficients), with multiplicities.
    pub factors: Vec<(PolyZ, usize)>,
}

impl Factorization {
    /// `content * prod factor^mult`
    pub fn reassemble(&self) -> PolyZ {
        self.factors
            .iter()
            .fold(PolyZ::constant(self.content.clone()), |acc, (g, m)| {
                acc.mul(&g.pow(*m as u32))
            })
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Irreducible factors without multiplicity.
    pub fn distinct(&self) -> Vec<PolyZ> {
        self.factors.iter().map(|(g, _)| g.clone()).collect()
    }
}

pub fn canonical_cmp(a: &PolyZ, b: &PolyZ) -> std::cmp::Ordering {
    a.deg()
        .cmp(&b.deg())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

/// Factor `f` into irreducibles over Q. The content carries the sign so that
/// every factor has positive leading coefficient.
pub fn factor(f: &PolyZ) -> Result<Factorization> {
    factor_with_cap(f, DEFAULT_MAX_INPUT_DEGREE)
}

pub fn factor_with_cap(f: &PolyZ, cap: usize) -> Result<Factorization> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n > cap {
        return Err(Error::DegreeCapExceeded {
            estimate: n as u64,
            cap: cap as u64,
        });
    }
    Ok(factor_unbounded(f))
}

/// Factorization without a degree cap; used internally for norms.
pub(crate) fn factor_unbounded(f: &PolyZ) -> Factorization {
    let mut content = f.content();
    if f.lc().is_negative() {
        content = -content;
    }
    let prim = f.primitive();
    let mut factors = Vec::new();
    for (a, m) in squarefree_decomposition(&prim) {
        for g in factor_squarefree(&a) {
            factors.push((g, m));
        }
    }
    factors.sort_by(|(a, _), (b, _)| canonical_cmp(a, b));
    Factorization { content, factors }
}

/// `deg f >= 1` and irreducible over Q.
pub fn is_irreducible(f: &PolyZ) -> Result<bool> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::DegreeTooSmall),
        Some(_) => {
            let fac = factor(f)?;
            // A nontrivial integer content does not break irreducibility over Q.
            Ok(fac.is_irreducible())
        }
    }
}

pub(crate) fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Smallest primes >= 3 not dividing `lc(f) * disc(f)`, in increasing order.
pub fn good_primes(f: &PolyZ) -> impl Iterator<Item = u64> {
    let bad = f.lc() * discriminant(f).unwrap_or_else(|_| BigInt::one());
    small_primes().filter(move |&p| !(&bad % BigInt::from(p)).is_zero())
}

/// Irreducible factors of a primitive squarefree polynomial with positive
/// leading coefficient, in canonical order.
pub(crate) fn factor_squarefree(f: &PolyZ) -> Vec<PolyZ> {
    let f = f.primitive();
    let n = f.deg();
    if n <= 1 {
        return vec![f];
    }
    // Factor out x first; keeps trailing-coefficient pruning sharp.
    if f.coeff(0).is_zero() {
        let rest = f.div_exact(&PolyZ::x()).unwrap();
        let mut out = factor_squarefree(&rest);
        out.push(PolyZ::x());
        out.sort_by(canonical_cmp);
        return out;
    }
    let mut best: Option<(u64, Vec<PolyP>)> = None;
    for p in good_primes(&f).take(PRIME_TRIALS) {
        let fs = berlekamp(&PolyP::from_z(&f, p));
        if fs.len() == 1 {
            return vec![f];
        }
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((p, fs));
        }
    }
    let (p, modular) = best.expect("good primes exist");
    // extra precision makes the trace filter in `recombine` selective
    let bound = coefficient_bound(&f) << TRACE_BITS;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(&f, &modular, p, k);
    let mut out = recombine(&f, lifted, &modulus);
    out.sort_by(canonical_cmp);
    out
}

/// `2 |lc| 2^n ||f||_2`, bounding coefficients of `lc * g / lc(g)` for every
/// factor `g` of `f`.
fn coefficient_bound(f: &PolyZ) -> BigInt {
    let n = f.deg() as usize;
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + BigInt::one();
    BigInt::from(2) * f.lc().abs() * (BigInt::one() << n) * norm
}

const TRACE_BITS: u32 = 48;

/// `x / m` as a fraction in `[0, 1)`.
fn frac(x: &BigInt, m: &BigInt) -> f64 {
    let q: BigInt = (mods(x, m) << 64u32) / m;
    q.to_u64().unwrap_or(u64::MAX) as f64 / 18446744073709551616.0
}

fn mods(x: &BigInt, m: &BigInt) -> BigInt {
    x.mod_floor(m)
}

fn reduce(f: &PolyZ, m: &BigInt) -> PolyZ {
    PolyZ::new(f.coeffs().iter().map(|c| mods(c, m)).collect())
}

fn symmetric(f: &PolyZ, m: &BigInt) -> PolyZ {
    let half = m >> 1;
    PolyZ::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = mods(c, m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn lift_p(g: &PolyP) -> PolyZ {
    PolyZ::new(g.c.iter().map(|&x| BigInt::from(x)).collect())
}

/// Lift `f = lc * prod factors (mod p)` to the same identity mod `p^k`; the
/// returned factors are monic mod `p^k`.
fn hensel_lift(f: &PolyZ, factors: &[PolyP], p: u64, k: u32) -> Vec<PolyZ> {
    if factors.len() == 1 {
        // f / lc mod p^k
        let m = num_traits::pow(BigInt::from(p), k as usize);
        let inv = f.lc().modinv(&m).expect("lc invertible mod p");
        return vec![reduce(&f.scale(&inv), &m)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let g0 = left.iter().fold(PolyP::one(p), |a, g| a.mul(g));
    let h0 = right
        .iter()
        .fold(PolyP::one(p), |a, g| a.mul(g))
        .scale(crate::modp::reduce_int(&f.lc(), p));
    let (g, h) = lift_pair(f, &g0, &h0, p, k);
    let mut out = hensel_lift(&g, left, p, k);
    out.extend(hensel_lift(&h, right, p, k));
    out
}

/// Linear Hensel lifting of `f = g h (mod p)` with `g` monic to `mod p^k`.
fn lift_pair(f: &PolyZ, g0: &PolyP, h0: &PolyP, p: u64, k: u32) -> (PolyZ, PolyZ) {
    let (d, s, t) = g0.xgcd(h0);
    debug_assert_eq!(d.deg(), 0);
    let pb = BigInt::from(p);
    let mut g = lift_p(g0);
    let mut h = lift_p(h0);
    let mut pj = pb.clone();
    for _ in 1..k {
        let next = &pj * &pb;
        let diff = reduce(&f.sub(&g.mul(&h)), &next);
        let e = PolyZ::new(diff.coeffs().iter().map(|c| c / &pj).collect());
        let ep = PolyP::from_z(&e, p);
        let (q, r) = t.mul(&ep).div_rem(g0);
        let dg = r;
        let dh = s.mul(&ep).add(&q.mul(h0));
        g = reduce(&g.add(&lift_p(&dg).scale(&pj)), &next);
        h = reduce(&h.add(&lift_p(&dh).scale(&pj)), &next);
        pj = next;
    }
    (g, h)
}

fn recombine(f: &PolyZ, mut lifted: Vec<PolyZ>, m: &BigInt) -> Vec<PolyZ> {
    let mut f = f.clone();
    let mut out = Vec::new();
    let mut s = 1usize;
    while 2 * s <= lifted.len() {
        let mut found = false;
        let r = lifted.len();
        let mut subset: Vec<usize> = (0..s).collect();
        let lc = f.lc();
        // lc times the subleading coefficient of each factor, as a fraction of m;
        // a true factor's sum lies within 2^-TRACE_BITS of an integer
        let traces: Vec<f64> = lifted
            .iter()
            .map(|g| frac(&(&lc * g.coeff(g.deg() as usize - 1)), m))
            .collect();
        let tol = 2f64.powi(-(TRACE_BITS as i32) + 2);
        loop {
            let t: f64 = subset.iter().map(|&i| traces[i]).sum();
            if (t - t.round()).abs() > tol {
                if !next_subset(&mut subset, r) {
                    break;
                }
                continue;
            }
            // trailing coefficient test
            let tail = subset
                .iter()
                .fold(lc.clone(), |acc, &i| mods(&(acc * lifted[i].coeff(0)), m));
            let tail = symmetric(&PolyZ::constant(tail), m).coeff(0);
            let f0 = f.coeff(0) * &lc;
            if !tail.is_zero() && (&f0 % &tail).is_zero() {
                let cand = subset
                    .iter()
                    .fold(PolyZ::constant(lc.clone()), |acc, &i| reduce(&acc.mul(&lifted[i]), m));
                let cand = symmetric(&cand, m).primitive();
                if let Some(q) = f.div_exact(&cand) {
                    out.push(cand);
                    f = q.primitive();
                    let mut keep = Vec::new();
                    for (i, g) in lifted.drain(..).enumerate() {
                        if !subset.contains(&i) {
                            keep.push(g);
                        }
                    }
                    lifted = keep;
                    found = true;
                    break;
                }
            }
            if !next_subset(&mut subset, r) {
                break;
            }
        }
        if !found {
            s += 1;
        }
    }
    if f.deg() > 0 {
        out.push(f.primitive());
    }
    out
}

fn next_subset(sub: &mut [usize], n: usize) -> bool {
    let k = sub.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if sub[i] < n - k + i {
            sub[i] += 1;
            for j in i + 1..k {
                sub[j] = sub[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> PolyZ {
        PolyZ::from_i64s(c)
    }

    #[test]
    fn factor_examples() {
        let f = factor(&z(&[-6, 0, 6])).unwrap();
        assert_eq!(f.content, BigInt::from(6));
        assert_eq!(f.distinct(), vec![z(&[-1, 1]), z(&[1, 1])]);

        let f = factor(&z(&[4, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.distinct(), vec![z(&[2, -2, 1]), z(&[2, 2, 1])]);

        let f = factor(&z(&[0, -1, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.content, BigInt::one());
        assert_eq!(
            f.distinct(),
            vec![z(&[-1, 1]), z(&[0, 1]), z(&[1, 1]), z(&[1, 0, 1])]
        );
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&z(&[-2, 0, 1])).unwrap());
        assert!(!is_irreducible(&z(&[-1, 0, 1])).unwrap());
        assert!(is_irreducible(&z(&[1, 0, 0, 0, 1])).unwrap());
        assert!(is_irreducible(&z(&[4, 6])).unwrap());
        assert_eq!(is_irreducible(&z(&[5])), Err(Error::DegreeTooSmall));
        assert_eq!(is_irreducible(&PolyZ::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn multiplicities_and_sign() {
        let g = z(&[-1, 1]).pow(2).mul(&z(&[1, 0, 1])).scale(&BigInt::from(-3));
        let f = factor(&g).unwrap();
        assert_eq!(f.content, BigInt::from(-3));
        assert_eq!(f.factors, vec![(z(&[-1, 1]), 2), (z(&[1, 0, 1]), 1)]);
        assert_eq!(f.reassemble(), g);
    }

    #[test]
    fn swinnerton_dyer_like_many_modular_factors() {
        // x^4 - 10x^2 + 1 (minimal polynomial of √2+√3) is irreducible but
        // splits into linear or quadratic factors modulo every prime.
        assert!(is_irreducible(&z(&[1, 0, -10, 0, 1])).unwrap());
        let prod = z(&[1, 0, -10, 0, 1]).mul(&z(&[-5, 0, 0, 1]));
        let f = factor(&prod).unwrap();
        assert_eq!(f.distinct(), vec![z(&[-5, 0, 0, 1]), z(&[1, 0, -10, 0, 1])]);
    }

    #[test]
    fn higher_degree_products() {
        let parts = [z(&[1, 1, 0, 1]), z(&[-7, 0, 3]), z(&[2, -1, 0, 0, 1]), z(&[1, 1, 1, 1, 1])];
        let prod = parts.iter().fold(PolyZ::one(), |a, g| a.mul(g));
        let f = factor(&prod).unwrap();
        assert_eq!(f.reassemble(), prod);
        assert_eq!(f.factors.len(), 4);
        assert!(f.factors.iter().all(|(g, m)| *m == 1 && parts.contains(g)));
    }

    #[test]
    fn degree_cap() {
        let f = PolyZ::pure_power(30, 2);
        assert!(matches!(factor(&f), Err(Error::DegreeCapExceeded { .. })));
        assert!(factor_with_cap(&f, 40).unwrap().is_irreducible());
    }
}
