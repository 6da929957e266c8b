//! Exact dense linear algebra over `Scalar` and over ℚ.

use crate::scalars::Scalar;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type SMatrix = Vec<Vec<Scalar>>;
pub type QMatrix = Vec<Vec<BigRational>>;

pub fn identity(n: usize) -> SMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()).collect()
}

pub fn mat_mul(a: &SMatrix, b: &SMatrix) -> SMatrix {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, |r| r.len()));
    let mut c = vec![vec![Scalar::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    c[i][j] += &a[i][l] * &b[l][j];
                }
            }
        }
    }
    c
}

pub fn mat_scale(a: &SMatrix, s: &Scalar) -> SMatrix {
    a.iter().map(|r| r.iter().map(|x| x * s).collect()).collect()
}

pub fn mat_eq(a: &SMatrix, b: &SMatrix) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(r, s)| r.len() == s.len() && r.iter().zip(s).all(|(x, y)| x == y))
}

/// Row-echelon reduction; returns the rank and the determinant of the square case.
fn eliminate(a: &SMatrix) -> (usize, Scalar) {
    let mut m = a.clone();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut det = Scalar::one();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            det = Scalar::zero();
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            det = -det;
        }
        let piv = m[rank][c].clone();
        det = &det * &piv;
        let inv = piv.inv().expect("nonzero pivot");
        for r in rank + 1..rows {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] * &inv;
            for j in c..cols {
                if !m[rank][j].is_zero() {
                    let t = &f * &m[rank][j];
                    m[r][j] -= &t;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    if rank < rows.min(cols) || rows != cols {
        det = Scalar::zero();
    }
    (rank, det)
}

pub fn determinant(a: &SMatrix) -> Scalar {
    if a.is_empty() {
        return Scalar::one();
    }
    eliminate(a).1
}

pub fn rank(a: &SMatrix) -> usize {
    eliminate(a).0
}

/// Inverse by Gauss-Jordan elimination; `None` when singular.
pub fn inverse(a: &SMatrix) -> Option<SMatrix> {
    let n = a.len();
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(p, c);
        let inv = m[c][c].inv()?;
        m[c] = m[c].iter().map(|x| x * &inv).collect();
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in 0..2 * n {
                    let t = &f * &m[c][j];
                    m[r][j] -= &t;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Reduced row echelon form over ℚ; returns the pivot columns.
pub fn q_rref(a: &mut QMatrix) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for j in 0..cols {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right null space `{x : A x = 0}` of a rational matrix with `cols` columns.
pub fn q_nullspace(a: &QMatrix, cols: usize) -> Vec<Vec<BigRational>> {
    let mut m = a.clone();
    let pivots = q_rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::from_integer(1.into());
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn q_rank(a: &QMatrix) -> usize {
    let mut m = a.clone();
    q_rref(&mut m).len()
}

/// Signature of a symmetric rational matrix by congruence diagonalization.
pub fn q_signature(a: &QMatrix) -> i64 {
    let n = a.len();
    let mut m = a.clone();
    let mut sig = 0i64;
    let mut k = 0;
    while k < n {
        // Find a nonzero diagonal pivot in the trailing block.
        if let Some(p) = (k..n).find(|&i| !m[i][i].is_zero()) {
            swap_sym(&mut m, k, p);
        } else {
            // All trailing diagonals vanish: create one from an off-diagonal entry.
            let Some((i, j)) = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !m[i][j].is_zero())
            else {
                break;
            };
            // Row/column i += row/column j gives m[i][i] = 2 m[i][j].
            for c in 0..n {
                let t = m[j][c].clone();
                m[i][c] += t;
            }
            for r in 0..n {
                let t = m[r][j].clone();
                m[r][i] += t;
            }
            swap_sym(&mut m, k, i);
        }
        let piv = m[k][k].clone();
        sig += if piv.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &piv;
            for c in k..n {
                let t = &f * &m[k][c];
                m[i][c] -= t;
            }
            for r in k..n {
                let t = &f * &m[r][k];
                m[r][i] -= t;
            }
        }
        k += 1;
    }
    sig
}

fn swap_sym(m: &mut QMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    m.swap(a, b);
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qpoly::rat;

    fn q(rows: &[&[i64]]) -> QMatrix {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn signature_examples() {
        assert_eq!(q_signature(&q(&[&[1]])), 1);
        assert_eq!(q_signature(&q(&[&[-1]])), -1);
        assert_eq!(q_signature(&q(&[&[0, 1], &[1, 0]])), 0);
        assert_eq!(q_signature(&q(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, -5]])), 1);
        assert_eq!(q_signature(&q(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(q_signature(&q(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]])), 0);
    }

    #[test]
    fn determinant_and_rank() {
        let m: SMatrix =
            vec![vec![Scalar::from_i64(2), Scalar::from_i64(1)], vec![Scalar::from_i64(4), Scalar::from_i64(2)]];
        assert!(determinant(&m).is_zero());
        assert_eq!(rank(&m), 1);
        let m2: SMatrix =
            vec![vec![Scalar::from_i64(0), Scalar::from_i64(1)], vec![Scalar::from_i64(3), Scalar::from_i64(2)]];
        assert_eq!(determinant(&m2), Scalar::from_i64(-3));
        let inv = inverse(&m2).unwrap();
        assert!(mat_eq(&mat_mul(&m2, &inv), &identity(2)));
    }

    #[test]
    fn nullspace_dimension() {
        let a = q(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = q_nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &a {
                let s: BigRational = row.iter().zip(&v).map(|(x, y)| x * y).sum();
                assert!(s.is_zero());
            }
        }
    }
}
