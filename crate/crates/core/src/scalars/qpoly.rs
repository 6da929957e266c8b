//! Dense univariate polynomials over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

/// Dense polynomial `c[0] + c[1] x + ...`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    c: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(v: BigRational) -> Self {
        QPoly::from_coeffs(vec![v])
    }

    /// `x^k`.
    pub fn monomial(k: usize, v: BigRational) -> Self {
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = v;
        QPoly::from_coeffs(c)
    }

    pub fn from_coeffs(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        QPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        QPoly::from_coeffs(c.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.c
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.c.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigRational> {
        self.c.last()
    }

    /// Number of leading-order zero coefficients at `x = 0`.
    pub fn low_zeros(&self) -> usize {
        self.c.iter().take_while(|v| v.is_zero()).count()
    }

    pub fn shift_down(&self, k: usize) -> Self {
        QPoly { c: self.c[k.min(self.c.len())..].to_vec() }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![BigRational::zero(); k];
        c.extend(self.c.iter().cloned());
        QPoly { c }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let v = match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            c.push(v);
        }
        QPoly::from_coeffs(c)
    }

    pub fn neg(&self) -> Self {
        QPoly { c: self.c.iter().map(|v| -v).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return QPoly::zero();
        }
        QPoly { c: self.c.iter().map(|v| v * s).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        QPoly::from_coeffs(c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, o: &Self) -> (Self, Self) {
        let dl = o.degree().expect("division by zero polynomial");
        let lead_inv = o.c[dl].recip();
        let mut r = self.c.clone();
        if r.len() <= dl {
            return (QPoly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dl];
        for k in (0..q.len()).rev() {
            let coef = &r[k + dl] * &lead_inv;
            if coef.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    r[k + j] -= &coef * b;
                }
            }
            q[k] = coef;
        }
        r.truncate(dl);
        (QPoly::from_coeffs(q), QPoly::from_coeffs(r))
    }

    pub fn rem(&self, o: &Self) -> Self {
        self.divrem(o).1
    }

    /// Remainder modulo a monic polynomial; avoids the quotient allocation.
    pub fn rem_monic(&self, m: &Self) -> Self {
        let dl = m.degree().expect("zero modulus");
        if self.c.len() <= dl {
            return self.clone();
        }
        let mut r = self.c.clone();
        for k in (dl..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let coef = std::mem::replace(&mut r[k], BigRational::zero());
            for (j, b) in m.c[..dl].iter().enumerate() {
                if !b.is_zero() {
                    r[k - dl + j] -= &coef * b;
                }
            }
        }
        r.truncate(dl);
        QPoly::from_coeffs(r)
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => QPoly::zero(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s·self + t·o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        QPoly::from_coeffs(
            self.c.iter().enumerate().skip(1).map(|(i, v)| v * BigRational::from_integer(BigInt::from(i))).collect(),
        )
    }

    /// Coefficients reversed: `x^deg · p(1/x)`.
    pub fn reversed(&self) -> Self {
        let mut c = self.c.clone();
        c.reverse();
        QPoly::from_coeffs(c)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for v in self.c.iter().rev() {
            acc = acc * x + v;
        }
        acc
    }

    pub fn eval_c64(&self, x: num_complex::Complex64) -> num_complex::Complex64 {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for v in self.c.iter().rev() {
            acc = acc * x + rat_to_f64(v);
        }
        acc
    }

    /// Substitutes `x -> x^k`.
    pub fn inflate(&self, k: usize) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![BigRational::zero(); (self.c.len() - 1) * k + 1];
        for (i, v) in self.c.iter().enumerate() {
            c[i * k] = v.clone();
        }
        QPoly::from_coeffs(c)
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }
}

pub fn rat_to_f64(v: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    match (v.numer().to_f64(), v.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() && d != 0.0 => n / d,
        _ => {
            // Scale both parts down before converting.
            let shift = v.numer().bits().max(v.denom().bits()).saturating_sub(1000) as usize;
            let n = (v.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (v.denom() >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn phi_table() -> &'static RwLock<HashMap<u64, Arc<QPoly>>> {
    static TABLE: OnceLock<RwLock<HashMap<u64, Arc<QPoly>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The m-th cyclotomic polynomial, `(x^m − 1) / ∏_{d | m, d < m} Φ_d`, memoized.
pub fn cyclotomic_poly(m: u64) -> Arc<QPoly> {
    assert!(m >= 1, "cyclotomic order must be positive");
    if let Some(p) = phi_table().read().expect("phi table poisoned").get(&m) {
        return p.clone();
    }
    let mut num = QPoly::monomial(m as usize, rat(1)).sub(&QPoly::one());
    for d in 1..m {
        if m.is_multiple_of(d) {
            let (q, r) = num.divrem(&cyclotomic_poly(d));
            debug_assert!(r.is_zero());
            num = q;
        }
    }
    let p = Arc::new(num);
    phi_table().write().expect("phi table poisoned").entry(m).or_insert(p).clone()
}

pub fn is_integer(v: &BigRational) -> bool {
    v.denom().is_one()
}

pub fn is_nonneg_integer(v: &BigRational) -> bool {
    is_integer(v) && !v.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic_poly(1), QPoly::from_ints(&[-1, 1]));
        assert_eq!(*cyclotomic_poly(4), QPoly::from_ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_poly(6), QPoly::from_ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_poly(12), QPoly::from_ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(16).degree(), Some(8));
        assert_eq!(cyclotomic_poly(20).degree(), Some(8));
    }

    #[test]
    fn division_roundtrip() {
        let a = QPoly::from_ints(&[3, 0, -2, 5, 1]);
        let b = QPoly::from_ints(&[1, 2, 3]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_and_bezout() {
        let f = QPoly::from_ints(&[-1, 0, 1]);
        let g = QPoly::from_ints(&[1, 2, 1]);
        assert_eq!(f.gcd(&g), QPoly::from_ints(&[1, 1]));
        let (h, s, t) = f.ext_gcd(&g);
        assert_eq!(s.mul(&f).add(&t.mul(&g)), h);
    }

    #[test]
    fn monic_remainder_matches_division() {
        let a = QPoly::from_ints(&[7, -1, 0, 4, 2, 9, 1]);
        let m = cyclotomic_poly(5);
        assert_eq!(a.rem_monic(&m), a.rem(&m));
    }
}
