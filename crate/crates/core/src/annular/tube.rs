//! Annular morphisms at a root of unity, cut open along a radius.
//!
//! A morphism from `n` inner to `m` outer points is a family indexed by the simple labels
//! `z = 0..=k`: component `z` lives in `TL(z+n → m+z)`, sandwiched by `p_z`, and its `z`
//! bottom-left strands are glued around the hole to its `z` top-right strands.
//! Products split the doubled cut through the channel decomposition of the identity,
//! and equality is tested against the trace pairing, so negligible parts vanish.

use crate::context::Context;
use crate::error::{Result, TljError};
use crate::jw::jones_wenzl;
use crate::scalars::Scalar;
use crate::tl::{enumerate_matchings, nested_cap, nested_cup, TLDiagram, TLElement};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

#[derive(Clone, Debug)]
struct Channel {
    y: usize,
    /// `s → y`.
    pi: TLElement,
    /// `y → s`.
    iota: TLElement,
}

#[derive(Clone, Debug)]
pub struct TubeElement {
    n: usize,
    m: usize,
    comps: BTreeMap<usize, TLElement>,
}

impl TubeElement {
    pub fn zero(n: usize, m: usize) -> Self {
        TubeElement { n, m, comps: BTreeMap::new() }
    }

    pub fn inner(&self) -> usize {
        self.n
    }

    pub fn outer(&self) -> usize {
        self.m
    }

    pub fn component(&self, z: usize) -> Option<&TLElement> {
        self.comps.get(&z)
    }

    fn push(&mut self, z: usize, x: TLElement) -> Result<()> {
        if x.is_zero() {
            return Ok(());
        }
        let slot = match self.comps.remove(&z) {
            Some(prev) => prev.add(&x)?,
            None => x,
        };
        if !slot.is_zero() {
            self.comps.insert(z, slot);
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if (self.n, self.m) != (o.n, o.m) {
            return Err(TljError::ShapeMismatch(format!("annular ({}, {}) plus ({}, {})", self.n, self.m, o.n, o.m)));
        }
        let mut r = self.clone();
        for (z, x) in &o.comps {
            r.push(*z, x.clone())?;
        }
        Ok(r)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut r = TubeElement::zero(self.n, self.m);
        if !s.is_zero() {
            r.comps = self.comps.iter().map(|(z, x)| (*z, x.scale(s))).collect();
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&Scalar::from_i64(-1)))
    }
}

/// Annular calculus for loop value `d` at level `k`: `Δ_j(d) ≠ 0` for `j ≤ k` and `Δ_{k+1}(d) = 0`.
pub struct TubeEngine {
    ctx: Context,
    level: usize,
    channels: RwLock<HashMap<usize, Arc<Vec<Channel>>>>,
}

impl TubeEngine {
    pub fn new(d: Scalar, level: usize) -> Result<Self> {
        let ctx = Context::with_loop_value(d);
        if (0..=level).any(|j| ctx.delta(j).is_zero()) || !ctx.delta(level + 1).is_zero() {
            return Err(TljError::WrongD(format!("{} is not a level-{level} loop value", ctx.d())));
        }
        Ok(TubeEngine { ctx, level, channels: RwLock::new(HashMap::new()) })
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn d(&self) -> &Scalar {
        self.ctx.d()
    }

    pub fn level(&self) -> usize {
        self.level
    }

    fn p(&self, z: usize) -> Result<TLElement> {
        Ok(jones_wenzl(&self.ctx, z)?.element.clone())
    }

    /// A single diagram in `TL(z+n → m+z)` given by its involution on boundary points.
    pub fn diagram(&self, z: usize, n: usize, m: usize, matching: &[u16]) -> Result<TubeElement> {
        let dg = TLDiagram::new(z + n, m + z, matching.to_vec(), 0)?;
        let mut e = TubeElement::zero(n, m);
        if z > self.level {
            return Ok(e);
        }
        let d = self.d();
        let x = TLElement::from_diagram(&dg, d);
        let pz = self.p(z)?;
        let x = pz.tensor(&TLElement::identity(n)).compose(&x, d)?.compose(&TLElement::identity(m).tensor(&pz), d)?;
        e.push(z, x)?;
        Ok(e)
    }

    pub fn identity(&self, n: usize) -> TubeElement {
        let mut e = TubeElement::zero(n, n);
        e.comps.insert(0, TLElement::identity(n));
        e
    }

    /// Resolution of `id_s` into simple channels.
    fn channels(&self, s: usize) -> Result<Arc<Vec<Channel>>> {
        if let Some(c) = self.channels.read().expect("channel cache poisoned").get(&s) {
            return Ok(c.clone());
        }
        let built = if s == 0 {
            vec![Channel { y: 0, pi: TLElement::identity(0), iota: TLElement::identity(0) }]
        } else {
            let d = self.d().clone();
            let one = TLElement::identity(1);
            let mut out = Vec::new();
            for ch in self.channels(s - 1)?.iter() {
                let z = ch.y;
                let pi1 = ch.pi.tensor(&one);
                let iota1 = ch.iota.tensor(&one);
                if z < self.level {
                    let p = self.p(z + 1)?;
                    out.push(Channel { y: z + 1, pi: pi1.compose(&p, &d)?, iota: p.compose(&iota1, &d)? });
                }
                if z >= 1 {
                    let cap = TLElement::identity(z - 1).tensor(&nested_cap(1));
                    let cup = TLElement::identity(z - 1).tensor(&nested_cup(1));
                    let mu = &self.ctx.delta(z - 1) / &self.ctx.delta(z);
                    out.push(Channel {
                        y: z - 1,
                        pi: pi1.compose(&cap, &d)?,
                        iota: cup.compose(&iota1, &d)?.scale(&mu),
                    });
                }
            }
            out
        };
        let v = Arc::new(built);
        Ok(self.channels.write().expect("channel cache poisoned").entry(s).or_insert(v).clone())
    }

    /// `f` followed by `g` (`f` nearer the inner boundary).
    pub fn compose(&self, f: &TubeElement, g: &TubeElement) -> Result<TubeElement> {
        if f.m != g.n {
            return Err(TljError::ShapeMismatch(format!("annular outer {} against inner {}", f.m, g.n)));
        }
        let d = self.d().clone();
        let (n, l) = (f.n, g.m);
        let mut out = TubeElement::zero(n, l);
        for (&z, fz) in &f.comps {
            for (&w, gw) in &g.comps {
                let h = TLElement::identity(w).tensor(fz).compose(&gw.tensor(&TLElement::identity(z)), &d)?;
                for ch in self.channels(w + z)?.iter() {
                    let x = ch
                        .iota
                        .tensor(&TLElement::identity(n))
                        .compose(&h, &d)?
                        .compose(&TLElement::identity(l).tensor(&ch.pi), &d)?;
                    out.push(ch.y, x)?;
                }
            }
        }
        Ok(out)
    }

    /// Composes left to right.
    pub fn chain(&self, parts: &[&TubeElement]) -> Result<TubeElement> {
        let (first, rest) = parts.split_first().ok_or_else(|| TljError::InvalidParameters("empty product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, x| self.compose(&acc, x))
    }

    /// Every component pairs to zero with every diagram of the opposite shape.
    pub fn is_zero(&self, x: &TubeElement) -> Result<bool> {
        let d = self.d();
        let max = self.ctx.limits().max_strands;
        for (&z, xz) in &x.comps {
            for mt in enumerate_matchings(x.m + z, z + x.n, max)?.iter() {
                let dual = TLElement::from_matching(x.m + z, z + x.n, mt.clone(), Scalar::one());
                if !xz.compose(&dual, d)?.markov_trace(d)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn equal(&self, x: &TubeElement, y: &TubeElement) -> Result<bool> {
        self.is_zero(&x.sub(y)?)
    }

    /// Annulus with a single essential circle and no boundary points.
    pub fn ring(&self) -> Result<TubeElement> {
        self.diagram(1, 0, 0, &[1, 0])
    }

    /// Rotation of `n` points by one step: the strand from the cut moves to the first outer point.
    pub fn twist(&self, n: usize) -> Result<TubeElement> {
        let w = n + 1;
        let m: Vec<u16> = (0..2 * w).map(|p| if p < w { (p + w) as u16 } else { (p - w) as u16 }).collect();
        self.diagram(1, n, n, &m)
    }

    /// Rotation by one step the other way.
    pub fn twist_inverse(&self, n: usize) -> Result<TubeElement> {
        if n == 0 {
            return self.ring();
        }
        let w = n + 1;
        let mut m = vec![0u16; 2 * w];
        let mut join = |a: usize, b: usize| {
            m[a] = b as u16;
            m[b] = a as u16;
        };
        join(0, 1);
        for k in 2..w {
            join(k, w + k - 2);
        }
        join(w + n - 1, w + n);
        self.diagram(1, n, n, &m)
    }

    /// Cup creating two outer points.
    pub fn birth(&self) -> Result<TubeElement> {
        self.diagram(0, 0, 2, &[1, 0])
    }

    /// Cup creating two outer points, the arc running once around the hole.
    pub fn birth_around(&self) -> Result<TubeElement> {
        self.diagram(1, 0, 2, &[1, 0, 3, 2])
    }

    /// Cap joining two inner points.
    pub fn death(&self) -> Result<TubeElement> {
        self.diagram(0, 2, 0, &[1, 0])
    }

    /// Cap joining two inner points, the arc running once around the hole.
    pub fn death_around(&self) -> Result<TubeElement> {
        self.diagram(1, 2, 0, &[1, 0, 3, 2])
    }

    /// `x^k` for an endomorphism.
    pub fn power(&self, x: &TubeElement, k: usize) -> Result<TubeElement> {
        let mut acc = self.identity(x.n);
        for _ in 0..k {
            acc = self.compose(&acc, x)?;
        }
        Ok(acc)
    }

    /// `Σ c_k x^k`.
    pub fn eval_poly(&self, coeffs: &[Scalar], x: &TubeElement) -> Result<TubeElement> {
        let mut acc = TubeElement::zero(x.n, x.m);
        let mut pw = self.identity(x.n);
        for c in coeffs {
            acc = acc.add(&pw.scale(c))?;
            pw = self.compose(&pw, x)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{cyclo_field, Cyclo};

    fn sqrt2() -> Scalar {
        let f = cyclo_field(8, 1).unwrap();
        Scalar::Cyclo(Cyclo::zeta_pow(&f, 1)) + Scalar::Cyclo(Cyclo::zeta_pow(&f, -1))
    }

    #[test]
    fn resolution_of_identity() {
        let e = TubeEngine::new(sqrt2(), 2).unwrap();
        let d = e.d().clone();
        for s in 0..5 {
            let mut sum = TLElement::zero(s, s);
            for ch in e.channels(s).unwrap().iter() {
                sum = sum.add(&ch.pi.compose(&ch.iota, &d).unwrap()).unwrap();
                let back = ch.iota.compose(&ch.pi, &d).unwrap();
                assert_eq!(back, e.p(ch.y).unwrap());
            }
            let diff = sum.sub(&TLElement::identity(s)).unwrap();
            let mut zero = TubeElement::zero(s, s);
            zero.push(0, diff).unwrap();
            assert!(e.is_zero(&zero).unwrap());
        }
    }

    #[test]
    fn twist_inverse_cancels() {
        let e = TubeEngine::new(sqrt2(), 2).unwrap();
        for n in 1..=2 {
            let t = e.twist(n).unwrap();
            let ti = e.twist_inverse(n).unwrap();
            assert!(e.equal(&e.compose(&t, &ti).unwrap(), &e.identity(n)).unwrap());
            assert!(e.equal(&e.compose(&ti, &t).unwrap(), &e.identity(n)).unwrap());
        }
    }

    #[test]
    fn wrong_level_rejected() {
        assert!(matches!(TubeEngine::new(Scalar::from_i64(1), 2), Err(TljError::WrongD(_))));
    }
}
