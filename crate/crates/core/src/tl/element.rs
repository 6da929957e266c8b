//! Formal linear combinations of loop-free diagrams.

use super::diagram::{
    closure_loops, compose_matchings, identity_matching, reflect_matching, tensor_matchings, Matching, TLDiagram,
};
use crate::error::{Result, TljError};
use crate::scalars::Scalar;
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Debug)]
pub struct TLElement {
    bottom: usize,
    top: usize,
    terms: HashMap<Matching, Scalar>,
}

/// Precomputed powers of the loop value.
struct DPowers<'a> {
    d: &'a Scalar,
    pw: Vec<Scalar>,
}

impl<'a> DPowers<'a> {
    fn new(d: &'a Scalar) -> Self {
        DPowers { d, pw: vec![Scalar::one()] }
    }

    fn get(&mut self, k: u32) -> &Scalar {
        while self.pw.len() <= k as usize {
            let next = self.pw.last().unwrap() * self.d;
            self.pw.push(next);
        }
        &self.pw[k as usize]
    }
}

impl TLElement {
    pub fn zero(bottom: usize, top: usize) -> Self {
        TLElement { bottom, top, terms: HashMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut e = TLElement::zero(n, n);
        e.terms.insert(identity_matching(n), Scalar::one());
        e
    }

    /// A single diagram; carried loops become a power of `d`.
    pub fn from_diagram(x: &TLDiagram, d: &Scalar) -> Self {
        let mut e = TLElement::zero(x.bottom, x.top);
        e.add_term(x.matching.clone(), d.pow(x.loops as i64));
        e
    }

    pub fn from_matching(bottom: usize, top: usize, m: Matching, c: Scalar) -> Self {
        let mut e = TLElement::zero(bottom, top);
        e.add_term(m, c);
        e
    }

    pub fn generator_u(n: usize, i: usize) -> Result<Self> {
        let u = TLDiagram::generator_u(n, i)?;
        Ok(TLElement::from_matching(n, n, u.matching, Scalar::one()))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Matching, &Scalar)> {
        self.terms.iter()
    }

    /// Terms sorted by matching, for deterministic output.
    pub fn sorted_terms(&self) -> Vec<(TLDiagram, Scalar)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (TLDiagram { bottom: self.bottom, top: self.top, matching: m.clone(), loops: 0 }, c.clone()))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn coeff(&self, m: &[u16]) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: Matching, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                let v = o.get() + &c;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    fn check_same_shape(&self, o: &Self) -> Result<()> {
        if self.bottom != o.bottom || self.top != o.top {
            return Err(TljError::ShapeMismatch(format!(
                "({}, {}) vs ({}, {})",
                self.bottom, self.top, o.bottom, o.top
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_same_shape(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&Scalar::from_i64(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return TLElement::zero(self.bottom, self.top);
        }
        TLElement {
            bottom: self.bottom,
            top: self.top,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// Vertical stacking: `self` below, `o` above. Closed loops become factors of `d`.
    pub fn compose(&self, o: &Self, d: &Scalar) -> Result<Self> {
        if self.top != o.bottom {
            return Err(TljError::ShapeMismatch(format!("cannot stack top {} under bottom {}", self.top, o.bottom)));
        }
        let mut pw = DPowers::new(d);
        let mut acc: HashMap<Matching, Scalar> = HashMap::new();
        for (mx, cx) in &self.terms {
            for (my, cy) in &o.terms {
                let (m, loops) = compose_matchings(mx, self.bottom, self.top, my, o.top);
                let mut c = cx * cy;
                if loops > 0 {
                    c = &c * pw.get(loops);
                }
                match acc.get_mut(&m) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(TLElement { bottom: self.bottom, top: o.top, terms: acc })
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn tensor(&self, o: &Self) -> Self {
        let mut r = TLElement::zero(self.bottom + o.bottom, self.top + o.top);
        for (mx, cx) in &self.terms {
            for (my, cy) in &o.terms {
                let m = tensor_matchings(mx, self.bottom, self.top, my, o.bottom, o.top);
                r.add_term(m, cx * cy);
            }
        }
        r
    }

    /// Closes each top point to the bottom point below it.
    pub fn markov_trace(&self, d: &Scalar) -> Result<Scalar> {
        if self.bottom != self.top {
            return Err(TljError::ShapeMismatch(format!("trace of a ({}, {}) element", self.bottom, self.top)));
        }
        let mut pw = DPowers::new(d);
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            acc += c * pw.get(closure_loops(m, self.bottom));
        }
        Ok(acc)
    }

    /// Reflection in a horizontal line with conjugated coefficients.
    pub fn reflect(&self) -> Self {
        TLElement {
            bottom: self.top,
            top: self.bottom,
            terms: self.terms.iter().map(|(m, c)| (reflect_matching(m, self.bottom, self.top), c.conj())).collect(),
        }
    }

    /// Closes the rightmost strand; requires a square shape.
    pub fn partial_trace(&self, d: &Scalar) -> Result<Self> {
        let n = self.bottom;
        if n != self.top || n == 0 {
            return Err(TljError::ShapeMismatch(format!("partial trace of a ({}, {}) element", self.bottom, self.top)));
        }
        // Stack with a cap on the right of the top and a cup on the right of the bottom:
        // equivalently compose (id_{n-1} ⊗ cup) · x · (id_{n-1} ⊗ cap) with a bent strand.
        let cup = TLElement::from_matching(n - 1, n + 1, bent_matching(n - 1, true), Scalar::one());
        let cap = TLElement::from_matching(n + 1, n - 1, bent_matching(n - 1, false), Scalar::one());
        let wide = self.tensor(&TLElement::identity(1));
        cup.compose(&wide, d)?.compose(&cap, d)
    }

    /// Equality of formal combinations.
    pub fn same_as(&self, o: &Self) -> bool {
        self.bottom == o.bottom
            && self.top == o.top
            && self.terms.len() == o.terms.len()
            && self.terms.iter().all(|(m, c)| o.terms.get(m) == Some(c))
    }

    /// Coefficient-wise map.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        let mut r = TLElement::zero(self.bottom, self.top);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), f(c));
        }
        r
    }

    /// Text block: one `coefficient | diagram` line per term, sorted by diagram.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (dgm, c) in self.sorted_terms() {
            s.push_str(&format!("{c} | {dgm}\n"));
        }
        s
    }
}

impl PartialEq for TLElement {
    fn eq(&self, o: &Self) -> bool {
        self.same_as(o)
    }
}

impl fmt::Display for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// `id_k` with one extra strand bent over: a cup on the right (`cup = true`, shape `k -> k+2`)
/// or a cap on the right (shape `k+2 -> k`).
fn bent_matching(k: usize, cup: bool) -> Matching {
    let (b, t) = if cup { (k, k + 2) } else { (k + 2, k) };
    let mut m = vec![0u16; b + t];
    for i in 0..k {
        m[i] = (b + i) as u16;
        m[b + i] = i as u16;
    }
    if cup {
        m[b + k] = (b + k + 1) as u16;
        m[b + k + 1] = (b + k) as u16;
    } else {
        m[k] = (k + 1) as u16;
        m[k + 1] = k as u16;
    }
    m.into_boxed_slice()
}

/// Nested caps: `2a` bottom points, no top points.
pub fn nested_cap(a: usize) -> TLElement {
    let mut m = vec![0u16; 2 * a];
    for s in 0..a {
        m[s] = (2 * a - 1 - s) as u16;
        m[2 * a - 1 - s] = s as u16;
    }
    TLElement::from_matching(2 * a, 0, m.into_boxed_slice(), Scalar::one())
}

/// Nested cups: no bottom points, `2a` top points.
pub fn nested_cup(a: usize) -> TLElement {
    nested_cap(a).reflect()
}
