//! Annular closure of rectangular elements.

use super::polyquot::{Poly, PolyQuotient};
use crate::error::{Result, TljError};
use crate::scalars::{chebyshev_coeffs, Scalar};
use crate::tl::TLElement;

/// Result of closing an `(n, n)` element around the annulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnularTrace {
    pub n: usize,
    /// Coefficient `k` multiplies `x^k`, `x` the essential loop.
    pub poly: Poly,
}

impl AnnularTrace {
    /// Remainder modulo `Δ_n(x)`.
    pub fn residue(&self) -> Poly {
        if self.n == 0 {
            return Vec::new();
        }
        PolyQuotient::new(chebyshev_poly(self.n)).expect("Δ_n is monic of degree n").reduce(&self.poly)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.poly.get(k).cloned().unwrap_or_else(Scalar::zero)
    }
}

/// `(contractible, essential)` loop counts of one closed matching. Top point `i` is joined
/// to bottom point `i` by an arc passing around the hole; a loop is essential when its net
/// number of passages is nonzero.
pub fn closure_loop_types(m: &[u16], n: usize) -> (usize, usize) {
    let mut seen = vec![false; 2 * n];
    let (mut contractible, mut essential) = (0, 0);
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        let mut winding = 0i64;
        let mut p = start;
        loop {
            let q = m[p] as usize;
            seen[p] = true;
            seen[q] = true;
            p = if q >= n {
                winding += 1;
                q - n
            } else {
                winding -= 1;
                q + n
            };
            if p == start {
                break;
            }
        }
        if winding == 0 {
            contractible += 1;
        } else {
            essential += 1;
        }
    }
    (contractible, essential)
}

/// Annular trace with `d` per contractible loop and `x` per essential loop.
pub fn annular_trace(p: &TLElement, d: &Scalar) -> Result<AnnularTrace> {
    let n = p.bottom();
    if n != p.top() {
        return Err(TljError::ShapeMismatch(format!("annular trace of a ({n}, {}) element", p.top())));
    }
    let mut poly: Poly = vec![Scalar::zero(); n + 1];
    for (m, c) in p.terms() {
        let (k, e) = closure_loop_types(m, n);
        poly[e] += c * &d.pow(k as i64);
    }
    while poly.last().is_some_and(Scalar::is_zero) {
        poly.pop();
    }
    Ok(AnnularTrace { n, poly })
}

/// `Δ_n(x)` as a polynomial with scalar coefficients.
pub fn chebyshev_poly(n: usize) -> Poly {
    chebyshev_coeffs(n).into_iter().map(Scalar::from_i64).collect()
}

/// Low coefficients of `Δ_n(x)`: whether the constant term is nonzero, and the `x` coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebyshevLowTerms {
    pub n: usize,
    pub constant_nonzero: bool,
    pub linear: i64,
}

pub fn chebyshev_low_terms(nmax: usize) -> Vec<ChebyshevLowTerms> {
    (0..=nmax)
        .map(|n| {
            let c = chebyshev_coeffs(n);
            ChebyshevLowTerms {
                n,
                constant_nonzero: c.first().is_some_and(|v| *v != 0),
                linear: c.get(1).copied().unwrap_or(0),
            }
        })
        .collect()
}
