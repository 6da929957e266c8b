//! Planar matchings between `bottom` and `top` boundary points.
//!
//! Points are indexed from 0: bottom points `0..bottom` left to right, then
//! top points `bottom..bottom+top` left to right. The text form uses 1-based labels.

use crate::error::{Result, TljError};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

pub type Matching = Box<[u16]>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TLDiagram {
    pub bottom: usize,
    pub top: usize,
    pub matching: Matching,
    pub loops: u32,
}

impl TLDiagram {
    /// Validates shape, involution and planarity.
    pub fn new(bottom: usize, top: usize, matching: Vec<u16>, loops: u32) -> Result<Self> {
        let n = bottom + top;
        if !n.is_multiple_of(2) {
            return Err(TljError::ShapeMismatch(format!("bottom + top = {n} is odd")));
        }
        if matching.len() != n {
            return Err(TljError::ShapeMismatch(format!("matching has {} entries, expected {n}", matching.len())));
        }
        for (i, &j) in matching.iter().enumerate() {
            let j = j as usize;
            if j >= n || j == i || matching[j] as usize != i {
                return Err(TljError::InvalidParameters(format!("point {} is not properly paired", i + 1)));
            }
        }
        if !is_planar(bottom, top, &matching) {
            return Err(TljError::InvalidParameters("matching is not planar".into()));
        }
        Ok(TLDiagram { bottom, top, matching: matching.into_boxed_slice(), loops })
    }

    pub fn identity(n: usize) -> Self {
        TLDiagram { bottom: n, top: n, matching: identity_matching(n), loops: 0 }
    }

    /// `U_i` on `n` strands, `1 ≤ i ≤ n − 1`.
    pub fn generator_u(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(TljError::IndexOutOfRange(format!("U_{i} on {n} strands")));
        }
        let mut m = identity_matching(n).into_vec();
        let (a, b) = (i - 1, i);
        m[a] = b as u16;
        m[b] = a as u16;
        m[n + a] = (n + b) as u16;
        m[n + b] = (n + a) as u16;
        Ok(TLDiagram { bottom: n, top: n, matching: m.into_boxed_slice(), loops: 0 })
    }

    /// Sorted 1-based pairs.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.matching
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i < j as usize)
            .map(|(i, &j)| (i + 1, j as usize + 1))
            .collect()
    }

    /// Parses the text form `"n;m;[(a,b),...];loops=k"`.
    pub fn parse(s: &str) -> Result<Self> {
        let err = || TljError::Parse(format!("bad diagram text {s:?}"));
        let parts: Vec<&str> = s.trim().splitn(4, ';').collect();
        if parts.len() != 4 {
            return Err(err());
        }
        let bottom: usize = parts[0].trim().parse().map_err(|_| err())?;
        let top: usize = parts[1].trim().parse().map_err(|_| err())?;
        let loops: u32 = parts[3].trim().strip_prefix("loops=").ok_or_else(err)?.parse().map_err(|_| err())?;
        let body = parts[2].trim().strip_prefix('[').and_then(|x| x.strip_suffix(']')).ok_or_else(err)?;
        let n = bottom + top;
        let mut m = vec![u16::MAX; n];
        let cleaned: String = body.chars().filter(|c| !c.is_whitespace()).collect();
        if !cleaned.is_empty() {
            let inner = cleaned.strip_prefix('(').and_then(|x| x.strip_suffix(')')).ok_or_else(err)?;
            for pair in inner.split("),(") {
                let (a, b) = pair.split_once(',').ok_or_else(err)?;
                let a: usize = a.parse().map_err(|_| err())?;
                let b: usize = b.parse().map_err(|_| err())?;
                if a == 0 || b == 0 || a > n || b > n {
                    return Err(err());
                }
                m[a - 1] = (b - 1) as u16;
                m[b - 1] = (a - 1) as u16;
            }
        }
        if m.contains(&u16::MAX) {
            return Err(err());
        }
        TLDiagram::new(bottom, top, m, loops)
    }
}

impl fmt::Display for TLDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.pairs().iter().map(|(a, b)| format!("({a},{b})")).collect();
        write!(f, "{};{};[{}];loops={}", self.bottom, self.top, pairs.join(","), self.loops)
    }
}

pub fn identity_matching(n: usize) -> Matching {
    let mut m = vec![0u16; 2 * n];
    for i in 0..n {
        m[i] = (n + i) as u16;
        m[n + i] = i as u16;
    }
    m.into_boxed_slice()
}

/// Position of a point along the boundary cycle: bottom left→right, then top right→left.
fn cyclic_position(bottom: usize, top: usize, p: usize) -> usize {
    if p < bottom {
        p
    } else {
        bottom + (top - 1 - (p - bottom))
    }
}

/// True when no two pairs interleave along the boundary cycle.
pub fn is_planar(bottom: usize, top: usize, m: &[u16]) -> bool {
    let pairs: Vec<(usize, usize)> = m
        .iter()
        .enumerate()
        .filter(|&(i, &j)| i < j as usize)
        .map(|(i, &j)| {
            let (a, b) = (cyclic_position(bottom, top, i), cyclic_position(bottom, top, j as usize));
            (a.min(b), a.max(b))
        })
        .collect();
    for (k, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in &pairs[k + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return false;
            }
        }
    }
    true
}

/// Stacks `x` (below) and `y` (above); `x_top == y_bottom`. Returns the outer matching and the loop count.
pub fn compose_matchings(x: &[u16], xb: usize, mid: usize, y: &[u16], yt: usize) -> (Matching, u32) {
    let mut out = vec![0u16; xb + yt];
    let mut seen = vec![false; mid];
    // Walk from an endpoint: `in_x` says which diagram we're about to traverse from point `p`.
    let walk = |start_in_x: bool, start: usize, seen: &mut [bool]| -> usize {
        let (mut in_x, mut p) = (start_in_x, start);
        loop {
            if in_x {
                let q = x[p] as usize;
                if q < xb {
                    return q;
                }
                let k = q - xb;
                seen[k] = true;
                in_x = false;
                p = k;
            } else {
                let q = y[p] as usize;
                if q >= mid {
                    return xb + (q - mid);
                }
                seen[q] = true;
                in_x = true;
                p = xb + q;
            }
        }
    };
    for i in 0..xb {
        let e = walk(true, i, &mut seen);
        out[i] = e as u16;
    }
    for j in 0..yt {
        let e = walk(false, mid + j, &mut seen);
        out[xb + j] = e as u16;
    }
    let mut loops = 0u32;
    for k in 0..mid {
        if seen[k] {
            continue;
        }
        loops += 1;
        // Trace the closed loop through the middle points.
        let mut p = k;
        loop {
            seen[p] = true;
            let q = y[p] as usize; // stays in the middle row
            seen[q] = true;
            let r = x[xb + q] as usize - xb;
            if r == k {
                break;
            }
            p = r;
        }
    }
    (out.into_boxed_slice(), loops)
}

/// Horizontal juxtaposition of two matchings.
pub fn tensor_matchings(x: &[u16], xb: usize, xt: usize, y: &[u16], yb: usize, yt: usize) -> Matching {
    let b = xb + yb;
    let map_x = |p: usize| if p < xb { p } else { b + (p - xb) };
    let map_y = |p: usize| if p < yb { xb + p } else { b + xt + (p - yb) };
    let mut out = vec![0u16; b + xt + yt];
    for (p, &q) in x.iter().enumerate() {
        out[map_x(p)] = map_x(q as usize) as u16;
    }
    for (p, &q) in y.iter().enumerate() {
        out[map_y(p)] = map_y(q as usize) as u16;
    }
    out.into_boxed_slice()
}

/// Reflection in a horizontal line.
pub fn reflect_matching(m: &[u16], bottom: usize, top: usize) -> Matching {
    let map = |p: usize| if p < bottom { top + p } else { p - bottom };
    let mut out = vec![0u16; bottom + top];
    for (p, &q) in m.iter().enumerate() {
        out[map(p)] = map(q as usize) as u16;
    }
    out.into_boxed_slice()
}

/// Loops formed by closing top point `i` to bottom point `i` with nested arcs.
pub fn closure_loops(m: &[u16], n: usize) -> u32 {
    let mut seen = vec![false; 2 * n];
    let mut loops = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        loops += 1;
        let mut p = s;
        loop {
            seen[p] = true;
            let q = m[p] as usize;
            seen[q] = true;
            let next = if q < n { q + n } else { q - n };
            if next == s {
                break;
            }
            p = next;
        }
    }
    loops
}

type EnumCache = RwLock<HashMap<(usize, usize), Arc<Vec<Matching>>>>;

fn enum_cache() -> &'static EnumCache {
    static C: OnceLock<EnumCache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

/// All planar loop-free matchings on `(bottom, top)`, lexicographic in the involution array.
pub fn enumerate_matchings(bottom: usize, top: usize, max_strands: usize) -> Result<Arc<Vec<Matching>>> {
    let n = bottom + top;
    if !n.is_multiple_of(2) {
        return Err(TljError::ShapeMismatch(format!("bottom + top = {n} is odd")));
    }
    if n / 2 > max_strands {
        return Err(TljError::ResourceLimit(format!("{} strands exceeds the limit {max_strands}", n / 2)));
    }
    if let Some(v) = enum_cache().read().expect("enumeration cache poisoned").get(&(bottom, top)) {
        return Ok(v.clone());
    }
    // Matchings along the boundary cycle, then relabeled to point indices.
    let mut cyc_to_point = vec![0usize; n];
    for p in 0..n {
        cyc_to_point[cyclic_position(bottom, top, p)] = p;
    }
    fn noncrossing(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![vec![]];
        }
        let mut res = Vec::new();
        for k in (lo + 1..hi).step_by(2) {
            let inner = noncrossing(lo + 1, k);
            let outer = noncrossing(k + 1, hi);
            for a in &inner {
                for b in &outer {
                    let mut v = Vec::with_capacity(a.len() + b.len() + 1);
                    v.push((lo, k));
                    v.extend_from_slice(a);
                    v.extend_from_slice(b);
                    res.push(v);
                }
            }
        }
        res
    }
    let mut out: Vec<Matching> = noncrossing(0, n)
        .into_iter()
        .map(|pairs| {
            let mut m = vec![0u16; n];
            for (a, b) in pairs {
                let (pa, pb) = (cyc_to_point[a], cyc_to_point[b]);
                m[pa] = pb as u16;
                m[pb] = pa as u16;
            }
            m.into_boxed_slice()
        })
        .collect();
    out.sort();
    let v = Arc::new(out);
    Ok(enum_cache().write().expect("enumeration cache poisoned").entry((bottom, top)).or_insert(v).clone())
}

/// Enumeration as diagrams with `loops = 0`.
pub fn enumerate_diagrams(bottom: usize, top: usize, max_strands: usize) -> Result<Vec<TLDiagram>> {
    Ok(enumerate_matchings(bottom, top, max_strands)?
        .iter()
        .map(|m| TLDiagram { bottom, top, matching: m.clone(), loops: 0 })
        .collect())
}

pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}
