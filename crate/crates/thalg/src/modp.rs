//! Polynomial arithmetic over a small prime field F_p.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::poly::PolyZ;

/// Dense polynomial over F_p, constant term first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyP {
    pub p: u64,
    pub c: Vec<u64>,
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

pub fn reduce_int(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

impl PolyP {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyP { p, c }
    }

    pub fn from_z(f: &PolyZ, p: u64) -> Self {
        PolyP::new(p, f.coeffs().iter().map(|x| reduce_int(x, p)).collect())
    }

    pub fn one(p: u64) -> Self {
        PolyP::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        PolyP::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn lc(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lc(), self.p);
        PolyP::new(self.p, self.c.iter().map(|&x| x * inv % self.p).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        PolyP::new(
            p,
            (0..n)
                .map(|i| (self.c.get(i).copied().unwrap_or(0) + o.c.get(i).copied().unwrap_or(0)) % p)
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        PolyP::new(
            p,
            (0..n)
                .map(|i| (self.c.get(i).copied().unwrap_or(0) + p - o.c.get(i).copied().unwrap_or(0)) % p)
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return PolyP::new(self.p, vec![]);
        }
        let p = self.p;
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % p;
            }
        }
        PolyP::new(p, c)
    }

    pub fn scale(&self, k: u64) -> Self {
        PolyP::new(self.p, self.c.iter().map(|&x| x * k % self.p).collect())
    }

    pub fn div_rem(&self, g: &Self) -> (Self, Self) {
        assert!(!g.is_zero());
        let p = self.p;
        let dg = g.c.len() - 1;
        if self.c.len() <= dg {
            return (PolyP::new(p, vec![]), self.clone());
        }
        let inv = inv_mod(g.lc(), p);
        let mut r = self.c.clone();
        let mut q = vec![0u64; r.len() - dg];
        while r.len() > dg {
            let qc = r.last().unwrap() * inv % p;
            let shift = r.len() - 1 - dg;
            if qc != 0 {
                for (j, &gc) in g.c.iter().enumerate() {
                    r[shift + j] = (r[shift + j] + p - qc * gc % p) % p;
                }
            }
            q[shift] = qc;
            r.pop();
        }
        (PolyP::new(p, q), PolyP::new(p, r))
    }

    pub fn rem(&self, g: &Self) -> Self {
        self.div_rem(g).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let zero = PolyP::new(p, vec![]);
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (PolyP::one(p), zero.clone());
        let (mut t0, mut t1) = (zero, PolyP::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = inv_mod(r0.lc(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        PolyP::new(
            p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &x)| (i as u64 % p) * x % p)
                .collect(),
        )
    }

    /// `self^e mod m`
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut r = PolyP::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        r
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).deg() == 0
    }
}

/// Degrees of the irreducible factors of a squarefree polynomial over F_p
/// (distinct-degree factorization), sorted ascending.
/// Resultant over F_p.
pub fn resultant(f: &PolyP, g: &PolyP) -> u64 {
    let p = f.p;
    if f.is_zero() || g.is_zero() {
        return 0;
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut acc = 1u64;
    loop {
        let da = a.deg() as u64;
        if b.deg() == 0 {
            return acc * pow_mod(b.lc(), da, p) % p;
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return 0;
        }
        let db = b.deg() as u64;
        if da % 2 == 1 && db % 2 == 1 {
            acc = (p - acc) % p;
        }
        acc = acc * pow_mod(b.lc(), da - r.deg() as u64, p) % p;
        a = b;
        b = r;
    }
}

/// Interpolating polynomial through `(i, ys[i])` over F_p.
pub fn interpolate(ys: &[u64], p: u64) -> PolyP {
    // Newton form with nodes 0, 1, 2, ...
    let n = ys.len();
    let mut dd: Vec<u64> = ys.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            let num = (dd[i] + p - dd[i - 1]) % p;
            dd[i] = num * inv_mod(k as u64 % p, p) % p;
        }
    }
    let mut acc = PolyP::new(p, vec![dd[n - 1]]);
    for k in (0..n - 1).rev() {
        let lin = PolyP::new(p, vec![(p - k as u64 % p) % p, 1]);
        acc = acc.mul(&lin).add(&PolyP::new(p, vec![dd[k]]));
    }
    acc
}

pub fn factor_degrees(f: &PolyP) -> Vec<usize> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = PolyP::x(p);
    let mut h = x.clone();
    let mut d = 0usize;
    while rest.deg() > 0 {
        d += 1;
        if 2 * d as isize > rest.deg() {
            out.push(rest.deg() as usize);
            break;
        }
        h = h.pow_mod(p as u128, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.deg() > 0 {
            for _ in 0..(g.deg() as usize / d) {
                out.push(d);
            }
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
        }
    }
    out.sort_unstable();
    out
}

/// Complete factorization of a squarefree polynomial into monic irreducibles
/// over F_p (Berlekamp). Deterministic: splitting constants are tried in order.
pub fn berlekamp(f: &PolyP) -> Vec<PolyP> {
    let p = f.p;
    let f = f.monic();
    let n = f.deg();
    if n <= 1 {
        return vec![f];
    }
    let n = n as usize;
    // Q - I where row i is x^(i p) mod f
    let xp = PolyP::x(p).pow_mod(p as u128, &f);
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = PolyP::one(p);
    for i in 0..n {
        let mut row = vec![0u64; n];
        for (j, &c) in cur.c.iter().enumerate() {
            row[j] = c;
        }
        row[i] = (row[i] + p - 1) % p;
        rows.push(row);
        cur = cur.mul(&xp).rem(&f);
    }
    let basis = left_null_space(&rows, p);
    let k = basis.len();
    let mut factors = vec![f.clone()];
    if k == 1 {
        return factors;
    }
    for v in basis.iter() {
        let vp = PolyP::new(p, v.clone());
        if vp.deg() <= 0 {
            continue;
        }
        let mut next = Vec::new();
        for u in factors.drain(..) {
            if u.deg() <= 1 {
                next.push(u);
                continue;
            }
            let mut pending = vec![u];
            for s in 0..p {
                let mut split = Vec::new();
                for w in pending.drain(..) {
                    if w.deg() <= 1 {
                        split.push(w);
                        continue;
                    }
                    let g = w.gcd(&vp.sub(&PolyP::new(p, vec![s])));
                    if g.deg() > 0 && g.deg() < w.deg() {
                        let other = w.div_rem(&g).0.monic();
                        split.push(g);
                        split.push(other);
                    } else {
                        split.push(w);
                    }
                }
                pending = split;
            }
            next.extend(pending);
        }
        factors = next;
        if factors.len() == k {
            break;
        }
    }
    factors.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.c.cmp(&b.c)));
    factors
}

/// Basis of `{v : v M = 0}` over F_p.
fn left_null_space(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    // transpose, then right null space
    let mut a: Vec<Vec<u64>> = (0..n).map(|j| (0..n).map(|i| m[i][j]).collect()).collect();
    let cols = n;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(piv) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + p - f * a[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - a[row][free]) % p;
        }
        basis.push(v);
    }
    basis
}
