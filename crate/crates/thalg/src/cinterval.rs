//! Rectangular complex interval arithmetic with rational endpoints.
//!
//! Endpoints are rounded outward to a dyadic grid after every product so that
//! long Horner chains stay cheap; every result encloses the exact value.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::{PolyQ, Rat};
use crate::roots::RootBox;
use crate::sturm::Interval;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CInterval {
    pub re: Interval,
    pub im: Interval,
}

fn floor_dyadic(x: &Rat, bits: u32) -> Rat {
    let s = BigInt::one() << bits;
    Rat::new((x * Rat::from_integer(s.clone())).floor().to_integer(), s)
}

fn ceil_dyadic(x: &Rat, bits: u32) -> Rat {
    let s = BigInt::one() << bits;
    Rat::new((x * Rat::from_integer(s.clone())).ceil().to_integer(), s)
}

fn iv_add(a: &Interval, b: &Interval) -> Interval {
    Interval::new(&a.lo + &b.lo, &a.hi + &b.hi)
}

fn iv_sub(a: &Interval, b: &Interval) -> Interval {
    Interval::new(&a.lo - &b.hi, &a.hi - &b.lo)
}

fn iv_mul(a: &Interval, b: &Interval) -> Interval {
    let p = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
    let lo = p.iter().min().unwrap().clone();
    let hi = p.iter().max().unwrap().clone();
    Interval::new(lo, hi)
}

fn iv_round(a: &Interval, bits: u32) -> Interval {
    Interval::new(floor_dyadic(&a.lo, bits), ceil_dyadic(&a.hi, bits))
}

impl CInterval {
    pub fn new(re: Interval, im: Interval) -> Self {
        CInterval { re, im }
    }

    pub fn exact(re: Rat, im: Rat) -> Self {
        CInterval::new(Interval::point(re), Interval::point(im))
    }

    pub fn from_rat(x: &Rat) -> Self {
        CInterval::exact(x.clone(), Rat::zero())
    }

    pub fn zero() -> Self {
        CInterval::exact(Rat::zero(), Rat::zero())
    }

    pub fn add(&self, o: &CInterval) -> CInterval {
        CInterval::new(iv_add(&self.re, &o.re), iv_add(&self.im, &o.im))
    }

    pub fn sub(&self, o: &CInterval) -> CInterval {
        CInterval::new(iv_sub(&self.re, &o.re), iv_sub(&self.im, &o.im))
    }

    pub fn mul(&self, o: &CInterval, bits: u32) -> CInterval {
        let re = iv_sub(&iv_mul(&self.re, &o.re), &iv_mul(&self.im, &o.im));
        let im = iv_add(&iv_mul(&self.re, &o.im), &iv_mul(&self.im, &o.re));
        CInterval::new(iv_round(&re, bits), iv_round(&im, bits))
    }

    pub fn scale(&self, k: &Rat, bits: u32) -> CInterval {
        let kk = Interval::point(k.clone());
        CInterval::new(
            iv_round(&iv_mul(&self.re, &kk), bits),
            iv_round(&iv_mul(&self.im, &kk), bits),
        )
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains(&Rat::zero()) && self.im.contains(&Rat::zero())
    }

    pub fn overlaps_box(&self, b: &RootBox) -> bool {
        self.re.overlaps(&b.re) && self.im.overlaps(&b.im)
    }

    pub fn width(&self) -> Rat {
        let a = self.re.width();
        let b = self.im.width();
        if a > b {
            a
        } else {
            b
        }
    }
}

/// Horner evaluation of a rational polynomial on a complex interval.
pub fn eval_poly(p: &PolyQ, z: &CInterval, bits: u32) -> CInterval {
    let mut acc = CInterval::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z, bits).add(&CInterval::from_rat(c));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn enclosure_of_square() {
        // (1 + [0,1/10] i)^2 contains 1 + 0.1 i squared = 0.99 + 0.2 i
        let z = CInterval::new(
            Interval::point(rat(1, 1)),
            Interval::new(rat(0, 1), rat(1, 10)),
        );
        let w = z.mul(&z, 30);
        assert!(w.re.contains(&rat(99, 100)) && w.im.contains(&rat(2, 10)));
        let p = PolyQ::from_i64s(&[1, 0, 1]); // z^2 + 1 at z = i
        let i = CInterval::exact(Rat::zero(), Rat::one());
        assert!(eval_poly(&p, &i, 20).contains_zero());
    }
}
