//! The Markov-trace pairing on `TL_n` and the meander determinant.

use super::diagram::{catalan, closure_loops, compose_matchings, enumerate_matchings, reflect_matching};
use crate::context::Context;
use crate::error::{Result, TljError};
use crate::linalg::{determinant, SMatrix};
use crate::scalars::{chebyshev, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `m_ij = tr(reflect(D_i) D_j)` over the enumerated diagrams of `TL_n`.
pub fn gram_matrix(ctx: &Context, n: usize) -> Result<SMatrix> {
    if n == 0 {
        return Err(TljError::InvalidParameters("gram matrix needs n >= 1".into()));
    }
    let lim = ctx.limits();
    if catalan(n) > lim.max_gram_dim as u128 {
        return Err(TljError::ResourceLimit(format!(
            "Catalan number c_{n} = {} exceeds the Gram bound {}",
            catalan(n),
            lim.max_gram_dim
        )));
    }
    let basis = enumerate_matchings(n, n, lim.max_strands)?;
    let d = ctx.d();
    let mut pw = vec![Scalar::one()];
    for _ in 0..=n {
        let next = pw.last().unwrap() * d;
        pw.push(next);
    }
    let reflected: Vec<_> = basis.iter().map(|m| reflect_matching(m, n, n)).collect();
    let mut g = vec![vec![Scalar::zero(); basis.len()]; basis.len()];
    for (i, ri) in reflected.iter().enumerate() {
        for (j, mj) in basis.iter().enumerate() {
            let (m, loops) = compose_matchings(ri, n, n, mj, n);
            let total = loops + closure_loops(&m, n);
            g[i][j] = pw[total as usize].clone();
        }
    }
    Ok(g)
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `a_{n,i} = C(2n, n−i−2) + C(2n, n−i) − 2 C(2n, n−i−1)`.
pub fn meander_exponent(n: usize, i: usize) -> BigInt {
    let (n, i) = (n as i64, i as i64);
    binom(2 * n, n - i - 2) + binom(2 * n, n - i) - 2 * binom(2 * n, n - i - 1)
}

/// `∏_{i=1}^n Δ_i(d)^{a_{n,i}}`.
pub fn meander_determinant(d: &Scalar, n: usize) -> Scalar {
    let mut acc = Scalar::one();
    for i in 1..=n {
        let e: i64 = meander_exponent(n, i).try_into().expect("exponent fits in i64");
        acc = &acc * &chebyshev(i, d).pow(e);
    }
    acc
}

pub fn gram_determinant(ctx: &Context, n: usize) -> Result<Scalar> {
    Ok(determinant(&gram_matrix(ctx, n)?))
}

/// Eigenvalues of the Gram matrix under the complex embedding, ascending.
/// Needs a root-of-unity or rational loop value.
pub fn gram_spectrum(ctx: &Context, n: usize) -> Result<Vec<f64>> {
    let g = gram_matrix(ctx, n)?;
    let k = g.len();
    let mut m = nalgebra::DMatrix::<f64>::zeros(k, k);
    for (i, row) in g.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let c = x.to_c64().ok_or_else(|| TljError::Unsupported("spectrum needs a numeric loop value".into()))?;
            if c.im.abs() > 1e-9 {
                return Err(TljError::Unsupported("loop value is not real".into()));
            }
            m[(i, j)] = c.re;
        }
    }
    let mut ev: Vec<f64> = nalgebra::SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}
