//! Quotients `K[x]/(p)` and their Lagrange idempotents.

use crate::error::{Result, TljError};
use crate::scalars::Scalar;
use std::fmt;

/// Dense polynomial, coefficient `k` multiplies `x^k`.
pub type Poly = Vec<Scalar>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    p
}

pub fn poly_mul(a: &[Scalar], b: &[Scalar]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    trim(c)
}

pub fn poly_eval(p: &[Scalar], x: &Scalar) -> Scalar {
    p.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
}

/// `K[x]/(modulus)` with a monic modulus.
#[derive(Clone, Debug)]
pub struct PolyQuotient {
    modulus: Poly,
}

impl PolyQuotient {
    pub fn new(modulus: Poly) -> Result<Self> {
        let m = trim(modulus);
        let lead = m.last().cloned().ok_or_else(|| TljError::InvalidParameters("zero modulus".into()))?;
        if m.len() < 2 {
            return Err(TljError::InvalidParameters("modulus must have positive degree".into()));
        }
        let inv = lead.inv().expect("nonzero leading coefficient");
        Ok(PolyQuotient { modulus: m.iter().map(|c| c * &inv).collect() })
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[Scalar] {
        &self.modulus
    }

    /// Remainder, padded to exactly `degree` coefficients.
    pub fn reduce(&self, p: &[Scalar]) -> Poly {
        let n = self.degree();
        let mut r: Poly = p.to_vec();
        while r.len() > n {
            let top = r.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let shift = r.len() - n;
            for k in 0..n {
                let t = &top * &self.modulus[k];
                r[shift + k] -= &t;
            }
        }
        r.resize(n, Scalar::zero());
        r
    }

    pub fn one(&self) -> Poly {
        self.reduce(&[Scalar::one()])
    }

    pub fn x(&self) -> Poly {
        self.reduce(&[Scalar::zero(), Scalar::one()])
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Poly {
        self.reduce(&poly_mul(a, b))
    }

    pub fn add(&self, a: &[Scalar], b: &[Scalar]) -> Poly {
        let n = a.len().max(b.len());
        let z = Scalar::zero();
        let s: Poly = (0..n).map(|k| a.get(k).unwrap_or(&z) + b.get(k).unwrap_or(&z)).collect();
        self.reduce(&s)
    }

    pub fn sub(&self, a: &[Scalar], b: &[Scalar]) -> Poly {
        let nb: Poly = b.iter().map(|c| -c).collect();
        self.add(a, &nb)
    }

    pub fn scale(&self, a: &[Scalar], s: &Scalar) -> Poly {
        self.reduce(&a.iter().map(|c| c * s).collect::<Vec<_>>())
    }

    pub fn eq(&self, a: &[Scalar], b: &[Scalar]) -> bool {
        self.reduce(a) == self.reduce(b)
    }
}

/// `e_j = u_j / λ_j` with `u_j = ∏_{i≠j} (x − a_i)` and `λ_j = u_j(a_j)`, reduced mod `p`.
pub fn minimal_idempotents(p: &[Scalar], roots: &[Scalar]) -> Result<Vec<Poly>> {
    let q = PolyQuotient::new(p.to_vec())?;
    if q.degree() != roots.len() {
        return Err(TljError::InvalidParameters(format!("degree {} but {} roots supplied", q.degree(), roots.len())));
    }
    for (i, a) in roots.iter().enumerate() {
        if let Some(j) = roots[..i].iter().position(|b| b == a) {
            return Err(TljError::RepeatedRoot(j, i));
        }
        if !poly_eval(q.modulus(), a).is_zero() {
            return Err(TljError::InvalidParameters(format!("{a} is not a root")));
        }
    }
    let mut out = Vec::with_capacity(roots.len());
    for (j, aj) in roots.iter().enumerate() {
        let mut u: Poly = vec![Scalar::one()];
        for (i, ai) in roots.iter().enumerate() {
            if i != j {
                u = poly_mul(&u, &[-ai, Scalar::one()]);
            }
        }
        let lambda = poly_eval(&u, aj);
        let inv = lambda.inv().expect("distinct roots give a nonzero λ");
        out.push(q.scale(&u, &inv));
    }
    Ok(out)
}

/// Idempotency, pairwise orthogonality and completeness of a family in `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdempotentChecks {
    pub idempotent: bool,
    pub orthogonal: bool,
    pub complete: bool,
}

impl IdempotentChecks {
    pub fn all(&self) -> bool {
        self.idempotent && self.orthogonal && self.complete
    }
}

pub fn check_idempotents(q: &PolyQuotient, es: &[Poly]) -> IdempotentChecks {
    let idempotent = es.iter().all(|e| q.eq(&q.mul(e, e), e));
    let zero = vec![Scalar::zero(); q.degree()];
    let orthogonal =
        es.iter().enumerate().all(|(i, a)| es.iter().enumerate().all(|(j, b)| i == j || q.mul(a, b) == zero));
    let sum = es.iter().fold(zero.clone(), |acc, e| q.add(&acc, e));
    IdempotentChecks { idempotent, orthogonal, complete: sum == q.one() }
}

/// Text form `c_0 + c_1 X + c_2 X^2 ...` with exact coefficients.
pub struct PolyDisplay<'a> {
    pub poly: &'a [Scalar],
    pub var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*{}", self.var)?,
                _ => write!(f, "({c})*{}^{k}", self.var)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_i64(v)
    }

    #[test]
    fn level_one_ring() {
        let p = vec![s(-1), s(0), s(1)];
        let es = minimal_idempotents(&p, &[s(1), s(-1)]).unwrap();
        let half = Scalar::from_rational(crate::scalars::qpoly::rat_frac(1, 2));
        assert_eq!(es[0], vec![half.clone(), half.clone()]);
        assert_eq!(es[1], vec![half.clone(), -half]);
        let q = PolyQuotient::new(p).unwrap();
        assert!(check_idempotents(&q, &es).all());
    }

    #[test]
    fn single_root() {
        let es = minimal_idempotents(&[s(0), s(1)], &[s(0)]).unwrap();
        assert_eq!(es, vec![vec![s(1)]]);
    }

    #[test]
    fn repeated_root_rejected() {
        let p = vec![s(1), s(-2), s(1)];
        assert!(matches!(minimal_idempotents(&p, &[s(1), s(1)]), Err(TljError::RepeatedRoot(0, 1))));
    }

    #[test]
    fn reduction_is_idempotent() {
        let q = PolyQuotient::new(vec![s(0), s(-2), s(0), s(1)]).unwrap();
        let x = q.x();
        let x3 = q.mul(&q.mul(&x, &x), &x);
        assert_eq!(x3, q.scale(&x, &s(2)));
        assert_eq!(q.reduce(&x3), x3);
    }
}
