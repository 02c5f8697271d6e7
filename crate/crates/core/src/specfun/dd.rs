//! Error-free transformations and a minimal double-word type.

use crate::scalar::Real;

#[inline]
pub(crate) fn two_sum<R: Real>(a: R, b: R) -> (R, R) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
pub(crate) fn two_prod<R: Real>(a: R, b: R) -> (R, R) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Dd<R> {
    pub hi: R,
    pub lo: R,
}

impl<R: Real> Dd<R> {
    pub fn new(x: R) -> Self {
        Dd { hi: x, lo: R::zero() }
    }

    fn renorm(hi: R, lo: R) -> Self {
        let (h, l) = two_sum(hi, lo);
        Dd { hi: h, lo: l }
    }

    pub fn add(self, o: Self) -> Self {
        let (s, e) = two_sum(self.hi, o.hi);
        Self::renorm(s, e + self.lo + o.lo)
    }

    pub fn mul(self, o: Self) -> Self {
        let (p, e) = two_prod(self.hi, o.hi);
        Self::renorm(p, e + self.hi * o.lo + self.lo * o.hi)
    }

    pub fn div_real(self, d: R) -> Self {
        let q = self.hi / d;
        let (p, e) = two_prod(q, d);
        let r = (self.hi - p - e + self.lo) / d;
        Self::renorm(q, r)
    }

    pub fn neg(self) -> Self {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn to_real(self) -> R {
        self.hi + self.lo
    }
}
