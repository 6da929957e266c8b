//! Jones-Wenzl projectors, theta symbols and the vanishing of closed networks through `p_{r−1}`.

use crate::context::Context;
use crate::error::{Result, TljError};
use crate::scalars::Scalar;
use crate::tl::TLElement;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct JWProjector {
    pub n: usize,
    pub element: TLElement,
    /// `μ_k = Δ_{k−1} / Δ_k` for `k = 1..n−1`.
    pub mu: Vec<Scalar>,
}

/// `p_n` by the Wenzl recursion `p_{k+1} = p_k⊗1 − μ_k (p_k⊗1) U_k (p_k⊗1)`, memoized per context.
pub fn jones_wenzl(ctx: &Context, n: usize) -> Result<Arc<JWProjector>> {
    if let Some(r) = ctx.jw_cache().read().expect("projector cache poisoned").get(&n) {
        return r.clone();
    }
    let result = build(ctx, n);
    ctx.jw_cache().write().expect("projector cache poisoned").entry(n).or_insert(result).clone()
}

fn build(ctx: &Context, n: usize) -> Result<Arc<JWProjector>> {
    if n <= 1 {
        return Ok(Arc::new(JWProjector { n, element: TLElement::identity(n), mu: Vec::new() }));
    }
    let prev = jones_wenzl(ctx, n - 1)?;
    let k = n - 1;
    let dk = ctx.delta(k);
    if dk.is_zero() {
        return Err(TljError::ChebyshevRoot(k));
    }
    let mu = &ctx.delta(k - 1) / &dk;
    let d = ctx.d();
    let q = prev.element.tensor(&TLElement::identity(1));
    let u = TLElement::generator_u(n, k)?;
    let quq = q.compose(&u, d)?.compose(&q, d)?;
    let element = q.sub(&quq.scale(&mu))?;
    let mut mus = prev.mu.clone();
    mus.push(mu);
    Ok(Arc::new(JWProjector { n, element, mu: mus }))
}

/// Closes the rightmost strand.
pub fn partial_trace(ctx: &Context, p: &TLElement) -> Result<TLElement> {
    p.partial_trace(ctx.d())
}

/// Parity and triangle conditions (no level bound).
pub fn triangle_ok(i: usize, j: usize, k: usize) -> bool {
    (i + j + k).is_multiple_of(2) && i + j >= k && j + k >= i && i + k >= j
}

/// Admissibility at level `r`: parity, triangle inequalities and `i + j + k ≤ 2(r − 2)`.
pub fn admissible(i: usize, j: usize, k: usize, r: usize) -> bool {
    triangle_ok(i, j, k) && i + j + k <= 2 * (r.saturating_sub(2))
}

/// The trivalent vertex `(i, j) -> k` without projectors: `a = (i+j−k)/2` nested caps
/// between the two groups, the remaining strands passing through.
fn vertex(i: usize, j: usize, k: usize) -> TLElement {
    let a = (i + j - k) / 2;
    let b = i + j;
    let mut m = vec![0u16; b + k];
    for s in 0..i - a {
        m[s] = (b + s) as u16;
        m[b + s] = s as u16;
    }
    for s in 0..a {
        let (x, y) = (i - a + s, i + a - 1 - s);
        m[x] = y as u16;
        m[y] = x as u16;
    }
    for s in 0..j - a {
        let (x, y) = (i + a + s, b + (i - a) + s);
        m[x] = y as u16;
        m[y] = x as u16;
    }
    TLElement::from_matching(b, k, m.into_boxed_slice(), Scalar::one())
}

/// The bare theta network `θ(i, j, k)`; zero for triples failing parity or triangle conditions.
pub fn theta_symbol(ctx: &Context, i: usize, j: usize, k: usize) -> Result<Scalar> {
    if !triangle_ok(i, j, k) {
        return Ok(Scalar::zero());
    }
    let d = ctx.d();
    let pi = jones_wenzl(ctx, i)?;
    let pj = jones_wenzl(ctx, j)?;
    let pk = jones_wenzl(ctx, k)?;
    let v = vertex(i, j, k);
    let net = pi.element.tensor(&pj.element).compose(&v, d)?.compose(&pk.element, d)?.compose(&v.reflect(), d)?;
    net.markov_trace(d)
}

#[derive(Clone, Debug)]
pub struct VanishingReport {
    pub r: usize,
    /// Closed networks through `p_{r−1}` and their values.
    pub networks: Vec<(String, Scalar)>,
    /// `tr(p_{r−2})`, expected nonzero.
    pub control: Scalar,
}

impl VanishingReport {
    pub fn all_vanish(&self) -> bool {
        self.networks.iter().all(|(_, v)| v.is_zero())
    }

    pub fn holds(&self) -> bool {
        self.all_vanish() && !self.control.is_zero()
    }
}

/// Evaluates the trace closure of `p_{r−1}` and every theta network `θ(r−1, j, k)` with
/// `j ≤ k ≤ r−1` satisfying parity and triangle conditions.
pub fn closed_network_vanishing(ctx: &Context, r: usize) -> Result<VanishingReport> {
    if r < 3 {
        return Err(TljError::InvalidParameters("r must be at least 3".into()));
    }
    let top = r - 1;
    let d = ctx.d();
    let p = jones_wenzl(ctx, top)?;
    let mut networks = vec![(format!("tr(p_{top})"), p.element.markov_trace(d)?)];
    for j in 0..=top {
        for k in j..=top {
            if triangle_ok(top, j, k) {
                networks.push((format!("theta({top},{j},{k})"), theta_symbol(ctx, top, j, k)?));
            }
        }
    }
    let control = jones_wenzl(ctx, top - 1)?.element.markov_trace(d)?;
    Ok(VanishingReport { r, networks, control })
}

/// For each `k ≤ 2r`, compares `p_k` with `(⊗^{⌊k/r⌋} p_r) ⊗ p_{k mod r}`.
/// Entries where a projector does not exist carry the `ChebyshevRoot` error.
pub fn tensor_decomposition_check(ctx: &Context, r: usize) -> Vec<(usize, Result<bool>)> {
    (0..=2 * r)
        .map(|k| {
            let res = (|| {
                let pk = jones_wenzl(ctx, k)?;
                let mut rhs = TLElement::identity(0);
                if k >= r {
                    let pr = jones_wenzl(ctx, r)?;
                    for _ in 0..k / r {
                        rhs = rhs.tensor(&pr.element);
                    }
                }
                rhs = rhs.tensor(&jones_wenzl(ctx, k % r)?.element);
                Ok(rhs == pk.element)
            })();
            (k, res)
        })
        .collect()
}

/// Golden-table text: one `coefficient | diagram` line per term of `p_n`.
pub fn projector_table(ctx: &Context, n: usize) -> Result<String> {
    let p = jones_wenzl(ctx, n)?;
    let mut s = String::new();
    for (dgm, c) in p.element.sorted_terms() {
        s.push_str(&format!("{dgm}\t{c}\n"));
    }
    Ok(s)
}
