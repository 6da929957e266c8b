//! Braid words, the Kauffman bracket representation into TL, closures and colored framed links.

use crate::context::Context;
use crate::error::{Result, TljError};
use crate::jw::jones_wenzl;
use crate::scalars::Scalar;
use crate::tl::TLElement;
use std::fmt;

/// A word in the Artin generators: `+i` is `σ_i`, `-i` is `σ_i^{-1}`. Letters act bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(TljError::IndexOutOfRange("a braid needs at least one strand".into()));
        }
        for &l in &word {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(TljError::IndexOutOfRange(format!("letter {l} on {strands} strands")));
            }
        }
        Ok(BraidWord { strands, word })
    }

    pub fn trivial(strands: usize) -> Self {
        BraidWord { strands: strands.max(1), word: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    /// Sum of letter signs.
    pub fn writhe(&self) -> i64 {
        self.word.iter().map(|&l| l.signum() as i64).sum()
    }

    /// `self` below, `o` above.
    pub fn concat(&self, o: &Self) -> Result<Self> {
        if self.strands != o.strands {
            return Err(TljError::ShapeMismatch(format!("{} vs {} strands", self.strands, o.strands)));
        }
        let mut w = self.word.clone();
        w.extend_from_slice(&o.word);
        Ok(BraidWord { strands: self.strands, word: w })
    }

    pub fn inverse(&self) -> Self {
        BraidWord { strands: self.strands, word: self.word.iter().rev().map(|l| -l).collect() }
    }

    pub fn mirror(&self) -> Self {
        BraidWord { strands: self.strands, word: self.word.iter().map(|l| -l).collect() }
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate(&self, g: &Self) -> Result<Self> {
        g.concat(self)?.concat(&g.inverse())
    }

    /// Markov stabilization into `B_{n+1}` by `σ_n^{±1}`.
    pub fn stabilize(&self, positive: bool) -> Self {
        let n = self.strands as i32;
        let mut w = self.word.clone();
        w.push(if positive { n } else { -n });
        BraidWord { strands: self.strands + 1, word: w }
    }

    /// Places `o` to the right of `self`.
    pub fn disjoint_union(&self, o: &Self) -> Self {
        let shift = self.strands as i32;
        let mut w = self.word.clone();
        w.extend(o.word.iter().map(|&l| l + l.signum() * shift));
        BraidWord { strands: self.strands + o.strands, word: w }
    }

    /// `perm[p]` is the top position reached by the strand starting at bottom position `p`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.word {
            let k = l.unsigned_abs() as usize;
            at.swap(k - 1, k);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &s) in at.iter().enumerate() {
            perm[s] = pos;
        }
        perm
    }

    /// Cycles of the closure permutation, each listed from its minimum, ordered by minimum.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut out = Vec::new();
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cyc.push(p);
                p = perm[p];
            }
            out.push(cyc);
        }
        out
    }

    /// For each letter, the component indices of the two strands it crosses and its sign.
    pub fn crossings(&self) -> Vec<(usize, usize, i64)> {
        let comps = self.components();
        let mut comp_of = vec![0; self.strands];
        for (c, cyc) in comps.iter().enumerate() {
            for &p in cyc {
                comp_of[p] = c;
            }
        }
        let mut at: Vec<usize> = (0..self.strands).collect();
        let mut out = Vec::with_capacity(self.word.len());
        for &l in &self.word {
            let k = l.unsigned_abs() as usize;
            out.push((comp_of[at[k - 1]], comp_of[at[k]], l.signum() as i64));
            at.swap(k - 1, k);
        }
        out
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.word.iter().map(|l| l.to_string()).collect();
        write!(f, "B_{}[{}]", self.strands, w.join(","))
    }
}

/// Right-multiplies by the image of one letter: `σ ↦ A·id + A⁻¹U`, `σ⁻¹ ↦ A⁻¹·id + A·U`.
fn apply_letter(ctx: &Context, acc: &TLElement, n: usize, letter: i32) -> Result<TLElement> {
    let k = letter.unsigned_abs() as usize;
    let s = letter.signum() as i64;
    let u = TLElement::generator_u(n, k)?;
    let with_u = acc.compose(&u, ctx.d())?;
    acc.scale(&ctx.a_pow(s)?).add(&with_u.scale(&ctx.a_pow(-s)?))
}

/// Image of the braid in `TL_n`.
pub fn resolve_braid(ctx: &Context, b: &BraidWord) -> Result<TLElement> {
    ctx.a()?;
    let mut acc = TLElement::identity(b.strands);
    for &l in &b.word {
        acc = apply_letter(ctx, &acc, b.strands, l)?;
    }
    Ok(acc)
}

/// Kauffman bracket of the closure with `⟨∅⟩ = 1`.
pub fn bracket_closure(ctx: &Context, b: &BraidWord) -> Result<Scalar> {
    resolve_braid(ctx, b)?.markov_trace(ctx.d())
}

/// `(−A)^{−3w} ⟨b̂⟩ / d`.
pub fn jones_polynomial(ctx: &Context, b: &BraidWord) -> Result<Scalar> {
    let w = b.writhe();
    let sign = if w % 2 == 0 { Scalar::one() } else { Scalar::from_i64(-1) };
    let br = bracket_closure(ctx, b)?;
    let dinv = ctx.d().inv().ok_or_else(|| TljError::DegenerateParameter("d = 0".into()))?;
    Ok(&(&(&sign * &ctx.a_pow(-3 * w)?) * &br) * &dinv)
}

/// Framing and color of one closure component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LinkComponent {
    pub framing: i64,
    pub color: usize,
}

/// A framed link presented as a braid closure, one framing and label per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredFramedLink {
    braid: BraidWord,
    components: Vec<LinkComponent>,
    cycles: Vec<Vec<usize>>,
}

impl ColoredFramedLink {
    /// Components are given in cycle-minimum order.
    pub fn new(braid: BraidWord, components: Vec<LinkComponent>) -> Result<Self> {
        let cycles = braid.components();
        if cycles.len() != components.len() {
            return Err(TljError::InvalidParameters(format!(
                "closure has {} components but {} were described",
                cycles.len(),
                components.len()
            )));
        }
        Ok(ColoredFramedLink { braid, components, cycles })
    }

    /// All components share one framing and color.
    pub fn uniform(braid: BraidWord, framing: i64, color: usize) -> Self {
        let k = braid.components().len();
        ColoredFramedLink::new(braid, vec![LinkComponent { framing, color }; k]).expect("component count matches")
    }

    pub fn unknot(framing: i64, color: usize) -> Self {
        ColoredFramedLink::uniform(BraidWord::trivial(1), framing, color)
    }

    pub fn empty() -> Self {
        ColoredFramedLink {
            braid: BraidWord { strands: 0, word: Vec::new() },
            components: Vec::new(),
            cycles: Vec::new(),
        }
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn components(&self) -> &[LinkComponent] {
        &self.components
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn with_colors(&self, colors: &[usize]) -> Self {
        let mut l = self.clone();
        for (c, &col) in l.components.iter_mut().zip(colors) {
            c.color = col;
        }
        l
    }

    pub fn with_framings(&self, framings: &[i64]) -> Self {
        let mut l = self.clone();
        for (c, &f) in l.components.iter_mut().zip(framings) {
            c.framing = f;
        }
        l
    }

    /// Split union, `self` on the left.
    pub fn disjoint_union(&self, o: &Self) -> Self {
        if self.braid.strands == 0 {
            return o.clone();
        }
        if o.braid.strands == 0 {
            return self.clone();
        }
        let braid = self.braid.disjoint_union(&o.braid);
        let mut comps = self.components.clone();
        comps.extend_from_slice(&o.components);
        ColoredFramedLink::new(braid, comps).expect("cycles of a split union are the cycles of the parts")
    }

    /// Blackboard framing of each component: the signed count of its self-crossings.
    pub fn self_writhes(&self) -> Vec<i64> {
        let mut w = vec![0; self.len()];
        for (a, b, s) in self.braid.crossings() {
            if a == b {
                w[a] += s;
            }
        }
        w
    }

    /// Framings on the diagonal, linking numbers off the diagonal.
    pub fn linking_matrix(&self) -> Result<Vec<Vec<i64>>> {
        let k = self.len();
        let mut m = vec![vec![0i64; k]; k];
        for (a, b, s) in self.braid.crossings() {
            if a != b {
                m[a][b] += s;
                m[b][a] += s;
            }
        }
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    if m[i][j] % 2 != 0 {
                        return Err(TljError::OddCrossingParity(i.min(j), i.max(j)));
                    }
                    m[i][j] /= 2;
                }
            }
            m[i][i] = self.components[i].framing;
        }
        Ok(m)
    }
}

/// The value of a `+1` kink on a strand carrying `p_i`: `(−1)^i A^{i(i+2)}`.
pub fn kink_factor(ctx: &Context, i: usize) -> Result<Scalar> {
    let i = i as i64;
    let v = ctx.a_pow(i * (i + 2))?;
    Ok(if i % 2 == 0 { v } else { -v })
}

/// `θ_i = A^{−i(i+2)}`.
pub fn theta_twist(ctx: &Context, i: usize) -> Result<Scalar> {
    let i = i as i64;
    ctx.a_pow(-i * (i + 2))
}

/// The factor a `+1` framing change contributes to a component of color `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TwistConvention {
    /// The bracket's own kink value, `(−1)^i A^{i(i+2)}`.
    Kink,
    /// `θ_i = A^{−i(i+2)}`: the `+1`-framed unknot evaluates to `θ_i d_i`.
    #[default]
    Theta,
}

impl TwistConvention {
    pub fn twist(self, ctx: &Context, i: usize) -> Result<Scalar> {
        match self {
            TwistConvention::Kink => kink_factor(ctx, i),
            TwistConvention::Theta => theta_twist(ctx, i),
        }
    }
}

/// The cabled braid: each component of color `i` becomes `i` parallel strands, each crossing a
/// block of elementary crossings of the same sign. Returns the cabled word and the colors at the
/// bottom positions.
pub fn cable(link: &ColoredFramedLink) -> (BraidWord, Vec<usize>) {
    let b = &link.braid;
    let mut color_of = vec![0usize; b.strands];
    for (c, cyc) in link.cycles.iter().enumerate() {
        for &p in cyc {
            color_of[p] = link.components[c].color;
        }
    }
    let mut widths = color_of.clone();
    let total: usize = widths.iter().sum();
    let mut word = Vec::new();
    for &l in &b.word {
        let k = l.unsigned_abs() as usize;
        let s = l.signum();
        let o: usize = widths[..k - 1].iter().sum();
        let (wa, wb) = (widths[k - 1], widths[k]);
        for i in (0..wa).rev() {
            for j in 0..wb {
                word.push(s * (o + i + j + 1) as i32);
            }
        }
        widths.swap(k - 1, k);
    }
    (BraidWord { strands: total, word }, color_of)
}

/// Bracket of the cabled closure with one `p_i` per component, blackboard framing.
pub fn cable_and_insert(ctx: &Context, link: &ColoredFramedLink) -> Result<Scalar> {
    let (cabled, colors) = cable(link);
    if cabled.strands > ctx.limits().max_strands {
        return Err(TljError::ResourceLimit(format!(
            "cabling needs {} strands, limit is {}",
            cabled.strands,
            ctx.limits().max_strands
        )));
    }
    let mut acc = TLElement::identity(0);
    for &c in &colors {
        acc = acc.tensor(&jones_wenzl(ctx, c)?.element);
    }
    if cabled.strands == 0 {
        return Ok(Scalar::one());
    }
    for &l in &cabled.word {
        acc = apply_letter(ctx, &acc, cabled.strands, l)?;
    }
    acc.markov_trace(ctx.d())
}

/// Colored bracket with the default twist convention.
pub fn colored_bracket(ctx: &Context, link: &ColoredFramedLink) -> Result<Scalar> {
    colored_bracket_with(ctx, link, TwistConvention::default())
}

/// Blackboard self-writhe is removed with the kink factor, then each component of framing `f`
/// is multiplied by `twist_i^f`.
pub fn colored_bracket_with(ctx: &Context, link: &ColoredFramedLink, conv: TwistConvention) -> Result<Scalar> {
    let mut v = cable_and_insert(ctx, link)?;
    for (c, w) in link.components.iter().zip(link.self_writhes()) {
        if c.color == 0 {
            continue;
        }
        if w != 0 {
            v = &v * &kink_factor(ctx, c.color)?.pow(-w);
        }
        if c.framing != 0 {
            v = &v * &conv.twist(ctx, c.color)?.pow(c.framing);
        }
    }
    Ok(v)
}
