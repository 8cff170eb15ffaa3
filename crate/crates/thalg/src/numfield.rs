//! Simple algebraic number fields `Q(θ) = Q[t]/(m)` and polynomials over them.
//!
//! Factorization over a number field uses the norm technique: shift the
//! polynomial by a multiple of the generator until its norm is squarefree,
//! factor the norm over Q, and pull each factor back with a gcd over the field.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::factor::factor_unbounded;
use crate::modp::{interpolate as interpolate_p, inv_mod, reduce_int, resultant, PolyP};
use crate::poly::{is_squarefree, resultant as resultant_q, PolyQ, Rat};

/// `Q[t]/(m)` with `m` monic irreducible over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    m: PolyQ,
}

/// Element of a number field: a reduced polynomial in the generator.
pub type Elem = PolyQ;

impl NumberField {
    pub fn new(m: PolyQ) -> Self {
        NumberField { m: m.monic() }
    }

    pub fn rationals() -> Self {
        NumberField::new(PolyQ::x())
    }

    pub fn modulus(&self) -> &PolyQ {
        &self.m
    }

    pub fn degree(&self) -> usize {
        self.m.deg() as usize
    }

    pub fn reduce(&self, a: &PolyQ) -> Elem {
        if a.deg() < self.m.deg() {
            a.clone()
        } else {
            a.rem(&self.m)
        }
    }

    pub fn generator(&self) -> Elem {
        self.reduce(&PolyQ::x())
    }

    pub fn from_rat(&self, q: Rat) -> Elem {
        PolyQ::constant(q)
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.add(b)
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        a.sub(b)
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.reduce(&a.mul(b))
    }

    pub fn inv(&self, a: &Elem) -> Elem {
        assert!(!a.is_zero(), "inverse of zero");
        // extended Euclid: s a + t m = 1
        let (mut r0, mut r1) = (self.m.clone(), a.clone());
        let (mut s0, mut s1) = (PolyQ::zero(), PolyQ::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant since m is irreducible
        let c = r0.coeff(0);
        self.reduce(&s0.scale(&c.recip()))
    }

    /// Norm `N(a) = Res(m, a)`.
    pub fn norm(&self, a: &Elem) -> Rat {
        if a.is_zero() {
            return Rat::zero();
        }
        resultant_q(&self.m, a).expect("nonzero operands")
    }
}

/// Polynomial over a number field, coefficients constant-first and trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyK {
    pub c: Vec<Elem>,
}

impl PolyK {
    pub fn new(mut c: Vec<Elem>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        PolyK { c }
    }

    pub fn from_q(f: &PolyQ) -> Self {
        PolyK::new(f.coeffs().iter().map(|x| PolyQ::constant(x.clone())).collect())
    }

    pub fn deg(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn lc(&self) -> Elem {
        self.c.last().cloned().unwrap_or_default()
    }

    /// Coefficients all rational?
    pub fn is_rational(&self) -> bool {
        self.c.iter().all(|x| x.deg() <= 0)
    }

    pub fn to_q(&self) -> Option<PolyQ> {
        self.is_rational()
            .then(|| PolyQ::new(self.c.iter().map(|x| x.coeff(0)).collect()))
    }
}

impl NumberField {
    pub fn padd(&self, a: &PolyK, b: &PolyK) -> PolyK {
        let n = a.c.len().max(b.c.len());
        let z = PolyQ::zero();
        PolyK::new(
            (0..n)
                .map(|i| self.add(a.c.get(i).unwrap_or(&z), b.c.get(i).unwrap_or(&z)))
                .collect(),
        )
    }

    pub fn psub(&self, a: &PolyK, b: &PolyK) -> PolyK {
        let n = a.c.len().max(b.c.len());
        let z = PolyQ::zero();
        PolyK::new(
            (0..n)
                .map(|i| self.sub(a.c.get(i).unwrap_or(&z), b.c.get(i).unwrap_or(&z)))
                .collect(),
        )
    }

    pub fn pmul(&self, a: &PolyK, b: &PolyK) -> PolyK {
        if a.is_zero() || b.is_zero() {
            return PolyK::new(vec![]);
        }
        let mut c = vec![PolyQ::zero(); a.c.len() + b.c.len() - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                c[i + j] = c[i + j].add(&x.mul(y));
            }
        }
        PolyK::new(c.into_iter().map(|x| self.reduce(&x)).collect())
    }

    pub fn pscale(&self, a: &PolyK, k: &Elem) -> PolyK {
        PolyK::new(a.c.iter().map(|x| self.mul(x, k)).collect())
    }

    pub fn pmonic(&self, a: &PolyK) -> PolyK {
        if a.is_zero() {
            return a.clone();
        }
        let inv = self.inv(&a.lc());
        self.pscale(a, &inv)
    }

    pub fn pdiv_rem(&self, a: &PolyK, b: &PolyK) -> (PolyK, PolyK) {
        assert!(!b.is_zero());
        let db = b.c.len() - 1;
        if a.c.len() <= db {
            return (PolyK::new(vec![]), a.clone());
        }
        let inv = self.inv(&b.lc());
        let mut r = a.c.clone();
        let mut q = vec![PolyQ::zero(); r.len() - db];
        while r.len() > db {
            let qc = self.mul(r.last().unwrap(), &inv);
            let shift = r.len() - 1 - db;
            if !qc.is_zero() {
                for (j, bc) in b.c.iter().enumerate() {
                    r[shift + j] = self.sub(&r[shift + j], &self.mul(&qc, bc));
                }
            }
            q[shift] = qc;
            r.pop();
        }
        (PolyK::new(q), PolyK::new(r))
    }

    /// Monic gcd.
    pub fn pgcd(&self, a: &PolyK, b: &PolyK) -> PolyK {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.pdiv_rem(&x, &y).1;
            x = std::mem::replace(&mut y, r);
        }
        self.pmonic(&x)
    }

    pub fn pderivative(&self, a: &PolyK) -> PolyK {
        PolyK::new(
            a.c.iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x.scale(&Rat::from_integer(BigInt::from(i))))
                .collect(),
        )
    }

    /// Evaluate at a field element.
    pub fn peval(&self, a: &PolyK, x: &Elem) -> Elem {
        a.c.iter()
            .rev()
            .fold(PolyQ::zero(), |acc, c| self.add(&self.mul(&acc, x), c))
    }

    /// `a(X + s)` for a field element `s`.
    pub fn pshift(&self, a: &PolyK, s: &Elem) -> PolyK {
        let lin = PolyK::new(vec![s.clone(), PolyQ::one()]);
        a.c.iter().rev().fold(PolyK::new(vec![]), |acc, c| {
            self.padd(&self.pmul(&acc, &lin), &PolyK::new(vec![c.clone()]))
        })
    }

    /// Norm of `a` down to Q: `prod_σ a^σ(X)`, by interpolation of
    /// `N(a(x_j))` at `deg(m) * deg(a) + 1` integer points.
    pub fn pnorm(&self, a: &PolyK) -> PolyQ {
        let d = self.degree() * a.deg().max(0) as usize;
        let xs: Vec<Rat> = (0..=d as i64).map(|j| Rat::from_integer(BigInt::from(j))).collect();
        let ys: Vec<Rat> = xs
            .iter()
            .map(|x| self.norm(&self.peval(a, &PolyQ::constant(x.clone()))))
            .collect();
        interpolate(&xs, &ys)
    }

    /// Reduction of the norm of `a` modulo `p`, when every denominator is a
    /// unit mod `p`.
    fn pnorm_mod(&self, a: &PolyK, p: u64) -> Option<PolyP> {
        let red = |c: &PolyQ| -> Option<PolyP> {
            let mut v = Vec::with_capacity(c.coeffs().len());
            for x in c.coeffs() {
                let d = reduce_int(x.denom(), p);
                if d == 0 {
                    return None;
                }
                v.push(reduce_int(x.numer(), p) * inv_mod(d, p) % p);
            }
            Some(PolyP::new(p, v))
        };
        let m = red(&self.m)?;
        let coeffs: Vec<PolyP> = a.c.iter().map(red).collect::<Option<_>>()?;
        let d = self.degree() * a.deg().max(0) as usize;
        if d as u64 >= p {
            return None;
        }
        let ys: Vec<u64> = (0..=d as u64)
            .map(|x| {
                let v = coeffs
                    .iter()
                    .rev()
                    .fold(PolyP::new(p, vec![]), |acc, c| acc.scale(x).add(c));
                resultant(&m, &v.rem(&m))
            })
            .collect();
        Some(interpolate_p(&ys, p))
    }

    /// Cheap sufficient test: the norm stays squarefree of full degree modulo
    /// one of a few primes.
    pub(crate) fn norm_squarefree_mod(&self, a: &PolyK) -> bool {
        let d = (self.degree() * a.deg().max(0) as usize) as isize;
        [1_000_003u64, 1_000_033, 1_000_037].iter().any(|&p| {
            self.pnorm_mod(a, p)
                .is_some_and(|n| n.deg() == d && n.is_squarefree())
        })
    }

    /// Monic irreducible factors of a squarefree polynomial over the field.
    pub fn factor(&self, a: &PolyK) -> Vec<PolyK> {
        let a = self.pmonic(a);
        if a.deg() <= 1 {
            return vec![a];
        }
        if self.degree() == 1 {
            let q = a.to_q().expect("rational coefficients over Q");
            return factor_unbounded(&q.to_primitive_z())
                .distinct()
                .into_iter()
                .map(|g| PolyK::from_q(&g.to_q().monic()))
                .collect();
        }
        let t = self.generator();
        for s in shift_sequence() {
            // b(X) = a(X - s t), N(X) = norm of b
            let st = t.scale(&Rat::from_integer(BigInt::from(s)));
            let b = self.pshift(&a, &st.neg());
            if !self.norm_squarefree_mod(&b) {
                continue;
            }
            let n = self.pnorm(&b);
            let nz = n.to_primitive_z();
            if !is_squarefree(&nz) {
                continue;
            }
            let fac = factor_unbounded(&nz);
            if fac.factors.len() == 1 {
                return vec![a];
            }
            let mut out = Vec::new();
            for (g, _) in fac.factors {
                // factor of b is gcd(b, g); shift back by + s t
                let gk = PolyK::from_q(&g.to_q());
                let h = self.pgcd(&b, &gk);
                out.push(self.pmonic(&self.pshift(&h, &st)));
            }
            return out;
        }
        unreachable!("some shift gives a squarefree norm")
    }
}

/// 0, 1, -1, 2, -2, ...
pub(crate) fn shift_sequence() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..).flat_map(|k| [k, -k]))
}

/// Newton interpolation through `(xs[i], ys[i])`.
pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> PolyQ {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut p = PolyQ::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = PolyQ::new(vec![-xs[i].clone(), Rat::one()]);
        p = p.mul(&lin).add(&PolyQ::constant(coef[i].clone()));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn inverse_and_norm() {
        let k = NumberField::new(PolyQ::from_i64s(&[-2, 0, 1])); // Q(√2)
        let a = PolyQ::from_i64s(&[1, 1]); // 1 + √2
        let ai = k.inv(&a);
        assert_eq!(k.mul(&a, &ai), PolyQ::one());
        assert_eq!(k.norm(&a), rat(-1, 1));
    }

    #[test]
    fn factor_over_quadratic_field() {
        // x^2 - 2 splits over Q(√2)
        let k = NumberField::new(PolyQ::from_i64s(&[-2, 0, 1]));
        let f = PolyK::from_q(&PolyQ::from_i64s(&[-2, 0, 1]));
        let fs = k.factor(&f);
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|g| g.deg() == 1));
        // x^2 - 3 stays irreducible over Q(√2)
        let g = PolyK::from_q(&PolyQ::from_i64s(&[-3, 0, 1]));
        assert_eq!(k.factor(&g).len(), 1);
        // x^4 + 1 over Q(i) splits into two quadratics
        let ki = NumberField::new(PolyQ::from_i64s(&[1, 0, 1]));
        let h = PolyK::from_q(&PolyQ::from_i64s(&[1, 0, 0, 0, 1]));
        let hs = ki.factor(&h);
        assert_eq!(hs.len(), 2);
        let prod = hs.iter().fold(PolyK::from_q(&PolyQ::one()), |a, g| ki.pmul(&a, g));
        assert_eq!(prod, h);
    }

    #[test]
    fn cubic_over_its_root_field() {
        // x^3 - 2 over Q(2^(1/3)) = (x - α)(x^2 + αx + α^2)
        let k = NumberField::new(PolyQ::from_i64s(&[-2, 0, 0, 1]));
        let f = PolyK::from_q(&PolyQ::from_i64s(&[-2, 0, 0, 1]));
        let mut fs = k.factor(&f);
        fs.sort_by_key(|g| g.deg());
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].deg(), 1);
        assert_eq!(fs[1].deg(), 2);
        assert_eq!(fs[0].c[0], PolyQ::from_i64s(&[0, -1]));
    }

    #[test]
    fn interpolation_roundtrip() {
        let p = PolyQ::from_i64s(&[3, -1, 0, 2]);
        let xs: Vec<Rat> = (0..4).map(|i| rat(i, 1)).collect();
        let ys: Vec<Rat> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys), p);
    }
}
