//! Independent reference computations shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use tlj::scalars::LaurentPoly;
use tlj::{Context, Scalar};

pub fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_int_terms(terms)
}

pub fn a(k: i64) -> LaurentPoly {
    LaurentPoly::a_pow(k)
}

/// `−A² − A⁻²`.
pub fn kauffman_loop() -> LaurentPoly {
    lp(&[(2, -1), (-2, -1)])
}

pub struct Dsu(Vec<usize>);

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    pub fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.0[rx] = ry;
        }
    }

    pub fn classes(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// Per-crossing weights: `(vertical smoothing, horizontal smoothing)` for a positive and a negative letter.
pub struct Weights {
    pub pos: (LaurentPoly, LaurentPoly),
    pub neg: (LaurentPoly, LaurentPoly),
    pub loop_value: LaurentPoly,
}

impl Weights {
    pub fn kauffman() -> Self {
        Weights { pos: (a(1), a(-1)), neg: (a(-1), a(1)), loop_value: kauffman_loop() }
    }

    /// `⟨·⟩_K(iA)` with a factor `(−i)` per positive and `i` per negative crossing.
    pub fn kirby_melvin() -> Self {
        Weights { pos: (a(1), lp(&[(-1, -1)])), neg: (a(-1), lp(&[(1, -1)])), loop_value: lp(&[(2, 1), (-2, 1)]) }
    }
}

/// Sum over all `2^c` smoothings of the braid closure; loops counted with union-find
/// on the strand segments between consecutive letters.
pub fn state_sum(strands: usize, word: &[i32], w: &Weights) -> LaurentPoly {
    let c = word.len();
    if c == 0 {
        return w.loop_value.pow(strands as u32);
    }
    let node = |t: usize, p: usize| (t % c) * strands + p;
    let mut total = LaurentPoly::zero();
    for state in 0u32..(1 << c) {
        let mut dsu = Dsu::new(c * strands);
        let mut weight = LaurentPoly::one();
        for (t, &l) in word.iter().enumerate() {
            let i = l.unsigned_abs() as usize - 1;
            for p in (0..strands).filter(|&p| p != i && p != i + 1) {
                dsu.union(node(t, p), node(t + 1, p));
            }
            let (vert, horiz) = if l > 0 { &w.pos } else { &w.neg };
            if state >> t & 1 == 0 {
                dsu.union(node(t, i), node(t + 1, i));
                dsu.union(node(t, i + 1), node(t + 1, i + 1));
                weight = weight.mul(vert);
            } else {
                dsu.union(node(t, i), node(t, i + 1));
                dsu.union(node(t + 1, i), node(t + 1, i + 1));
                weight = weight.mul(horiz);
            }
        }
        total = total.add(&weight.mul(&w.loop_value.pow(dsu.classes() as u32)));
    }
    total
}

/// Jones polynomial in `A` by the oriented skein relation, switching crossings until the
/// closure is descending from the base points, where it is an unlink.
pub fn skein_jones(strands: usize, word: &[i32]) -> LaurentPoly {
    let mut seen = vec![false; word.len()];
    let mut started = vec![false; strands];
    let mut comps = 0u32;
    for s in 0..strands {
        if started[s] {
            continue;
        }
        comps += 1;
        let mut p = s;
        loop {
            started[p] = true;
            for (k, &l) in word.iter().enumerate() {
                let i = l.unsigned_abs() as usize - 1;
                if p != i && p != i + 1 {
                    continue;
                }
                let left = p == i;
                let over = if l > 0 { left } else { !left };
                if !seen[k] {
                    seen[k] = true;
                    if !over {
                        let mut switched = word.to_vec();
                        switched[k] = -l;
                        let mut smoothed = word.to_vec();
                        smoothed.remove(k);
                        let vs = skein_jones(strands, &switched);
                        let v0 = skein_jones(strands, &smoothed);
                        // t = A⁻⁴: V+ = t² V− + t(t^½ − t^−½) V0
                        return if l > 0 {
                            a(-8).mul(&vs).add(&lp(&[(-6, 1), (-2, -1)]).mul(&v0))
                        } else {
                            a(8).mul(&vs).add(&lp(&[(6, 1), (2, -1)]).mul(&v0))
                        };
                    }
                }
                p = if left { i + 1 } else { i };
            }
            if p == s {
                break;
            }
        }
    }
    kauffman_loop().pow(comps - 1)
}

pub fn writhe(word: &[i32]) -> i64 {
    word.iter().map(|l| l.signum() as i64).sum()
}

/// `(−A)^{−3w} ⟨b⟩ / d` from a bracket polynomial.
pub fn normalize(bracket: &LaurentPoly, word: &[i32]) -> Scalar {
    let w = writhe(word);
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let f = lp(&[(-3 * w, sign)]);
    &Scalar::from_laurent(&bracket.mul(&f)) / &Scalar::from_laurent(&kauffman_loop())
}

/// Freely reduced words on `strands` strands with at most `max_len` letters.
pub fn reduced_words(strands: usize, max_len: usize) -> Vec<Vec<i32>> {
    let letters: Vec<i32> = (1..strands as i32).flat_map(|i| [i, -i]).collect();
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                if w.last() == Some(&-l) {
                    continue;
                }
                let mut v: Vec<i32> = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Number of closure components.
pub fn closure_components(strands: usize, word: &[i32]) -> usize {
    let mut perm: Vec<usize> = (0..strands).collect();
    for &l in word {
        let i = l.unsigned_abs() as usize - 1;
        perm.swap(i, i + 1);
    }
    let mut seen = vec![false; strands];
    let mut cycles = 0;
    for s in 0..strands {
        if !seen[s] {
            cycles += 1;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
    }
    cycles
}

/// `[n]` as `Σ_{k<n} A^{2(n−1)−4k}`.
pub fn quantum_int_poly(n: i64) -> LaurentPoly {
    let sign = n.signum();
    let m = n.abs();
    LaurentPoly::from_terms((0..m).map(|k| (2 * (m - 1) - 4 * k, tlj::scalars::qpoly::rat(sign))))
}

/// Evaluates a Laurent polynomial at the context's `A`.
pub fn eval_at(ctx: &Context, p: &LaurentPoly) -> Scalar {
    p.terms().map(|(e, c)| ctx.a_pow(e).unwrap().scale(c)).fold(Scalar::zero(), |acc, x| &acc + &x)
}

/// `A = exp(2πi num/den)` with the fraction reduced.
pub fn root_context(num: i64, den: i64) -> Context {
    let g = num_integer::gcd(num, den);
    Context::root((den / g) as u64, num / g).unwrap()
}

/// The four values `A = ±i·exp(±2πi/4r)`.
pub fn unitary_roots(r: i64) -> Vec<Context> {
    let m = 4 * r;
    [r + 1, r - 1, 3 * r + 1, 3 * r - 1].iter().map(|&t| root_context(t.rem_euclid(m), m)).collect()
}

/// Solves `M x = b` by Gauss-Jordan elimination; `None` unless the solution exists and is unique.
pub fn solve(mut m: Vec<Vec<Scalar>>, mut b: Vec<Scalar>, unknowns: usize) -> Option<Vec<Scalar>> {
    let rows = m.len();
    let mut row = 0;
    for col in 0..unknowns {
        let p = (row..rows).find(|&i| !m[i][col].is_zero())?;
        m.swap(row, p);
        b.swap(row, p);
        let inv = m[row][col].inv().unwrap();
        for j in col..unknowns {
            m[row][j] = &m[row][j] * &inv;
        }
        b[row] = &b[row] * &inv;
        for i in 0..rows {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..unknowns {
                    let v = &m[row][j] * &f;
                    m[i][j] -= &v;
                }
                let v = &b[row] * &f;
                b[i] -= &v;
            }
        }
        row += 1;
    }
    if b[row..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some(b[..unknowns].to_vec())
}
