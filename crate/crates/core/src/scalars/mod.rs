//! Exact scalars: ℚ(A), cyclotomic fields, and the Chebyshev / quantum-integer helpers.

pub mod cyclo;
pub mod laurent;
pub mod qpoly;
pub mod ratfunc;
mod scalar;

pub use cyclo::{cyclo_field, extend_field, unit_root, Cyclo, CycloField};
pub use laurent::LaurentPoly;
pub use qpoly::QPoly;
pub use ratfunc::RatFunc;
pub use scalar::Scalar;

use crate::error::{Result, TljError};

/// Chebyshev polynomial `Δ_n(x)`: `Δ_0 = 1`, `Δ_1 = x`, `Δ_{n+1} = xΔ_n − Δ_{n−1}`.
pub fn chebyshev(n: usize, x: &Scalar) -> Scalar {
    let (mut prev, mut cur) = (Scalar::zero(), Scalar::one());
    for _ in 0..n {
        let next = x * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Coefficients (low to high) of `Δ_n` as an integer polynomial.
pub fn chebyshev_coeffs(n: usize) -> Vec<i64> {
    let (mut prev, mut cur): (Vec<i64>, Vec<i64>) = (vec![], vec![1]);
    for _ in 0..n {
        let mut next = vec![0i64; cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Quantum integer `[n]_A = (A^{2n} − A^{−2n}) / (A² − A⁻²)`.
pub fn quantum_int(n: i64, a: &Scalar) -> Result<Scalar> {
    let den = a.pow(2) - a.pow(-2);
    if den.is_zero() {
        return Err(TljError::DegenerateParameter("A^4 = 1".into()));
    }
    Ok((a.pow(2 * n) - a.pow(-2 * n)) / den)
}

/// The loop value `d = −A² − A⁻²`.
pub fn loop_value(a: &Scalar) -> Scalar {
    -(a.pow(2) + a.pow(-2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chebyshev_base_cases() {
        let x = Scalar::a_generic(1);
        assert_eq!(chebyshev(0, &x), Scalar::one());
        assert_eq!(chebyshev(1, &x), x);
        assert_eq!(chebyshev(2, &x), &x * &x - Scalar::one());
        assert_eq!(chebyshev_coeffs(3), vec![0, -2, 0, 1]);
    }

    #[test]
    fn quantum_int_basics() {
        let a = Scalar::a_generic(1);
        assert!(quantum_int(1, &a).unwrap().is_one());
        assert_eq!(quantum_int(2, &a).unwrap(), a.pow(2) + a.pow(-2));
        assert_eq!(quantum_int(-3, &a).unwrap(), -quantum_int(3, &a).unwrap());
        assert_eq!(quantum_int(0, &a).unwrap(), Scalar::zero());
    }

    #[test]
    fn chebyshev_at_loop_value_is_signed_quantum_int() {
        let a = Scalar::a_generic(1);
        let d = loop_value(&a);
        for n in 0..=8usize {
            let sign = if n % 2 == 0 { Scalar::one() } else { -Scalar::one() };
            assert_eq!(chebyshev(n, &d), sign * quantum_int(n as i64 + 1, &a).unwrap());
        }
    }

    #[test]
    fn degenerate_quantum_int() {
        let f = cyclo_field(4, 1).unwrap();
        let i = Scalar::Cyclo(Cyclo::zeta_pow(&f, 1));
        assert!(matches!(quantum_int(2, &i), Err(TljError::DegenerateParameter(_))));
    }
}
