//! Elements of ℚ(A) in a canonical reduced form.

use super::laurent::LaurentPoly;
use super::qpoly::QPoly;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `A^shift · num(A) / den(A)` with `den` monic, `gcd(num, den) = 1`,
/// and neither `num` nor `den` divisible by `A`. Zero is `0 / 1` with shift 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    shift: i64,
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { shift: 0, num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc::constant(BigRational::one())
    }

    pub fn constant(v: BigRational) -> Self {
        RatFunc { shift: 0, num: QPoly::constant(v), den: QPoly::one() }
    }

    /// `A^k`.
    pub fn a_pow(k: i64) -> Self {
        RatFunc { shift: k, num: QPoly::one(), den: QPoly::one() }
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let (shift, num) = p.to_shifted_poly();
        if num.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { shift, num, den: QPoly::one() }
    }

    /// Builds `A^shift · num / den` and normalizes.
    pub fn new(shift: i64, num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatFunc { shift, num, den };
        r.normalize();
        r
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            *self = RatFunc::zero();
            return;
        }
        let zn = self.num.low_zeros();
        if zn > 0 {
            self.num = self.num.shift_down(zn);
            self.shift += zn as i64;
        }
        let zd = self.den.low_zeros();
        if zd > 0 {
            self.den = self.den.shift_down(zd);
            self.shift -= zd as i64;
        }
        if !self.den.is_constant() {
            let g = self.num.gcd(&self.den);
            if !g.is_one() {
                self.num = self.num.divrem(&g).0;
                self.den = self.den.divrem(&g).0;
            }
        }
        let lead = self.den.lead().expect("nonzero denominator").clone();
        if !lead.is_one() {
            let inv = lead.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// `Some(c)` when the value is a rational constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.shift == 0 && self.num.is_constant() && self.den.is_one() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// `Some(p)` when the denominator is trivial.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(LaurentPoly::from_shifted_poly(self.shift, &self.num))
        } else {
            None
        }
    }

    pub fn parts(&self) -> (i64, &QPoly, &QPoly) {
        (self.shift, &self.num, &self.den)
    }

    /// Numerator and denominator as Laurent polynomials, shift folded into the numerator.
    pub fn laurent_parts(&self) -> (LaurentPoly, LaurentPoly) {
        (LaurentPoly::from_shifted_poly(self.shift, &self.num), LaurentPoly::from_shifted_poly(0, &self.den))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if let (Some(a), Some(b)) = (self.as_constant(), o.as_constant()) {
            return RatFunc::constant(a + b);
        }
        let s = self.shift.min(o.shift);
        let n1 = self.num.shift_up((self.shift - s) as usize);
        let n2 = o.num.shift_up((o.shift - s) as usize);
        if self.den == o.den {
            let mut r = RatFunc { shift: s, num: n1.add(&n2), den: self.den.clone() };
            r.normalize();
            return r;
        }
        RatFunc::new(s, n1.mul(&o.den).add(&n2.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn neg(&self) -> Self {
        RatFunc { shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if let (Some(a), Some(b)) = (self.as_constant(), o.as_constant()) {
            return RatFunc::constant(a * b);
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { shift: self.shift + o.shift, num: self.num.mul(&o.num), den: QPoly::one() };
        }
        // Cross-cancel before multiplying to keep degrees small.
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let (n1, d2) = (self.num.divrem(&g1).0, o.den.divrem(&g1).0);
        let (n2, d1) = (o.num.divrem(&g2).0, self.den.divrem(&g2).0);
        let mut r = RatFunc { shift: self.shift + o.shift, num: n1.mul(&n2), den: d1.mul(&d2) };
        let lead = r.den.lead().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            r.num = r.num.scale(&inv);
            r.den = r.den.scale(&inv);
        }
        r
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let lead = self.num.lead().unwrap().recip();
        Some(RatFunc { shift: -self.shift, num: self.den.scale(&lead), den: self.num.scale(&lead) })
    }

    pub fn pow(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = RatFunc::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        Some(acc)
    }

    /// The involution `A -> A^{-1}`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let dn = self.num.degree().unwrap() as i64;
        let dd = self.den.degree().unwrap() as i64;
        RatFunc::new(-self.shift - dn + dd, self.num.reversed(), self.den.reversed())
    }

    /// Substitutes `A -> A^k` for `k != 0`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0);
        let (n, d) = self.laurent_parts();
        let (n, d) = (n.substitute_power(k), d.substitute_power(k));
        let (sn, pn) = n.to_shifted_poly();
        let (sd, pd) = d.to_shifted_poly();
        RatFunc::new(sn - sd, pn, pd)
    }

    pub fn eval_c64(&self, a: Complex64) -> Complex64 {
        a.powi(self.shift as i32) * self.num.eval_c64(a) / self.den.eval_c64(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qpoly::rat;

    fn lp(t: &[(i64, i64)]) -> RatFunc {
        RatFunc::from_laurent(&LaurentPoly::from_int_terms(t))
    }

    #[test]
    fn fraction_cancels() {
        // (A^2 - 1) / (A - 1) = A + 1
        let a = lp(&[(2, 1), (0, -1)]);
        let b = lp(&[(1, 1), (0, -1)]);
        let q = a.mul(&b.inv().unwrap());
        assert_eq!(q, lp(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn bar_is_involution() {
        let x = lp(&[(3, 2), (-1, 1)]).mul(&lp(&[(2, 1), (0, 5)]).inv().unwrap());
        assert_eq!(x.bar().bar(), x);
        assert_eq!(RatFunc::a_pow(1).bar(), RatFunc::a_pow(-1));
    }

    #[test]
    fn constants_fast_path() {
        let a = RatFunc::constant(rat(3));
        let b = RatFunc::constant(rat(-3));
        assert!(a.add(&b).is_zero());
        assert_eq!(a.mul(&b).as_constant(), Some(rat(-9)));
    }
}
