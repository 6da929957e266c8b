use super::cyclo::{Cyclo, CycloField};
use super::laurent::LaurentPoly;
use super::qpoly::rat;
use super::ratfunc::RatFunc;
use num_complex::Complex64;
use num_rational::BigRational;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

/// An exact coefficient: an element of ℚ(A) or of a cyclotomic field.
///
/// Rational constants of the ℚ(A) tag mix freely with cyclotomic values;
/// any other cross-tag operation panics.
#[derive(Clone, Debug)]
pub enum Scalar {
    Func(RatFunc),
    Cyclo(Cyclo),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Func(RatFunc::zero())
    }

    pub fn one() -> Self {
        Scalar::Func(RatFunc::one())
    }

    pub fn from_i64(v: i64) -> Self {
        Scalar::Func(RatFunc::constant(rat(v)))
    }

    pub fn from_rational(v: BigRational) -> Self {
        Scalar::Func(RatFunc::constant(v))
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        Scalar::Func(RatFunc::from_laurent(p))
    }

    /// The generic variable `A^k`.
    pub fn a_generic(k: i64) -> Self {
        Scalar::Func(RatFunc::a_pow(k))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Func(f) => f.is_zero(),
            Scalar::Cyclo(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Func(f) => f.is_one(),
            Scalar::Cyclo(c) => c.is_one(),
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Func(f) => f.as_constant(),
            Scalar::Cyclo(c) => c.as_rational(),
        }
    }

    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        match self {
            Scalar::Func(f) => f.as_laurent(),
            Scalar::Cyclo(_) => None,
        }
    }

    pub fn cyclo_field(&self) -> Option<&Arc<CycloField>> {
        match self {
            Scalar::Func(_) => None,
            Scalar::Cyclo(c) => Some(c.field()),
        }
    }

    fn promote(f: &RatFunc, field: &Arc<CycloField>) -> Cyclo {
        let c = f
            .as_constant()
            .unwrap_or_else(|| panic!("cannot mix a non-constant element of ℚ(A) with a cyclotomic scalar"));
        Cyclo::constant(field, c)
    }

    fn binop(
        &self,
        o: &Self,
        ff: impl Fn(&RatFunc, &RatFunc) -> RatFunc,
        cc: impl Fn(&Cyclo, &Cyclo) -> Cyclo,
    ) -> Self {
        match (self, o) {
            (Scalar::Func(x), Scalar::Func(y)) => Scalar::Func(ff(x, y)),
            (Scalar::Cyclo(x), Scalar::Cyclo(y)) => Scalar::Cyclo(cc(x, y)),
            (Scalar::Func(x), Scalar::Cyclo(y)) => Scalar::Cyclo(cc(&Scalar::promote(x, y.field()), y)),
            (Scalar::Cyclo(x), Scalar::Func(y)) => Scalar::Cyclo(cc(x, &Scalar::promote(y, x.field()))),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Func(f) => f.inv().map(Scalar::Func),
            Scalar::Cyclo(c) => c.inv().map(Scalar::Cyclo),
        }
    }

    /// Integer power; panics for a negative power of zero.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Scalar::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    /// Bar involution: `A -> A^{-1}` on ℚ(A), complex conjugation on cyclotomic values.
    pub fn conj(&self) -> Self {
        match self {
            Scalar::Func(f) => Scalar::Func(f.bar()),
            Scalar::Cyclo(c) => Scalar::Cyclo(c.conj()),
        }
    }

    /// Complex value under the field's embedding; `None` for non-constant ℚ(A) values.
    pub fn to_c64(&self) -> Option<Complex64> {
        match self {
            Scalar::Func(f) => f.as_constant().map(|c| Complex64::new(super::qpoly::rat_to_f64(&c), 0.0)),
            Scalar::Cyclo(c) => Some(c.to_c64()),
        }
    }

    /// Evaluates a ℚ(A) value at a complex point (cyclotomic values ignore `a`).
    pub fn eval_c64(&self, a: Complex64) -> Complex64 {
        match self {
            Scalar::Func(f) => f.eval_c64(a),
            Scalar::Cyclo(c) => c.to_c64(),
        }
    }

    /// Embeds into a cyclotomic field whose order is a multiple of this value's order.
    pub fn lift(&self, target: &Arc<CycloField>) -> Self {
        match self {
            Scalar::Func(f) => Scalar::Cyclo(Scalar::promote(f, target)),
            Scalar::Cyclo(c) => Scalar::Cyclo(c.lift(target)),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        match self {
            Scalar::Func(f) => Scalar::Func(f.mul(&RatFunc::constant(s.clone()))),
            Scalar::Cyclo(c) => Scalar::Cyclo(c.scale(s)),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, o: &Self) -> bool {
        match (self, o) {
            (Scalar::Func(x), Scalar::Func(y)) => x == y,
            (Scalar::Cyclo(x), Scalar::Cyclo(y)) => x == y,
            _ => match (self.as_rational(), o.as_rational()) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            },
        }
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Func(r) => {
                let (n, d) = r.laurent_parts();
                if d == LaurentPoly::one() {
                    write!(f, "{n}")
                } else {
                    write!(f, "({n}) / ({d})")
                }
            }
            Scalar::Cyclo(c) => {
                let p = LaurentPoly::from_shifted_poly(0, c.residue());
                write!(f, "[{}] in Q(zeta_{})", p.to_string().replace('A', "z"), c.field().order())
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $ff:expr, $cc:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.binop(o, $ff, $cc)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RatFunc, b: &RatFunc| a.add(b), |a: &Cyclo, b: &Cyclo| a.add(b));
forward_binop!(Sub, sub, |a: &RatFunc, b: &RatFunc| a.sub(b), |a: &Cyclo, b: &Cyclo| a.sub(b));
forward_binop!(Mul, mul, |a: &RatFunc, b: &RatFunc| a.mul(b), |a: &Cyclo, b: &Cyclo| a.mul(b));

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inv().expect("division by zero scalar")
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, o: Scalar) -> Scalar {
        &self / &o
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Func(f) => Scalar::Func(f.neg()),
            Scalar::Cyclo(c) => Scalar::Cyclo(c.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = &*self + o;
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self = &*self + &o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = &*self - o;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_i64(v)
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}
