//! Surgery invariants of closed 3-manifolds, Kirby-move witnesses and the Maslov index.

use crate::braid::{colored_bracket_with, BraidWord, ColoredFramedLink, LinkComponent};
use crate::error::{Result, TljError};
use crate::linalg::{q_nullspace, q_signature, QMatrix};
use crate::modular::{s_matrix_rank, DExtension, ModularData};
use crate::scalars::Scalar;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

/// Signature of a symmetric integer matrix, by rational congruence diagonalization.
pub fn signature(m: &[Vec<i64>]) -> i64 {
    let q: QMatrix = m.iter().map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    q_signature(&q)
}

/// A framed link in S³; colors are ignored (every component carries `ω_0`).
#[derive(Clone, Debug)]
pub struct SurgeryPresentation {
    pub link: ColoredFramedLink,
    pub framing_matrix: Vec<Vec<i64>>,
}

impl SurgeryPresentation {
    pub fn new(link: ColoredFramedLink) -> Result<Self> {
        let framing_matrix = link.linking_matrix()?;
        Ok(SurgeryPresentation { link, framing_matrix })
    }

    /// S³.
    pub fn empty() -> Self {
        SurgeryPresentation { link: ColoredFramedLink::empty(), framing_matrix: Vec::new() }
    }

    pub fn unknot(framing: i64) -> Self {
        SurgeryPresentation::new(ColoredFramedLink::unknot(framing, 1)).expect("unknot")
    }

    /// `L(p, 1)`, the `p`-framed unknot.
    pub fn lens_space(p: i64) -> Self {
        SurgeryPresentation::unknot(p)
    }

    /// Closure of `word` on `strands` strands with the given framings in cycle-minimum order.
    pub fn from_braid(strands: usize, word: Vec<i32>, framings: &[i64]) -> Result<Self> {
        let comps = framings.iter().map(|&f| LinkComponent { framing: f, color: 1 }).collect();
        SurgeryPresentation::new(ColoredFramedLink::new(BraidWord::new(strands, word)?, comps)?)
    }

    pub fn components(&self) -> usize {
        self.link.len()
    }

    pub fn signature(&self) -> i64 {
        signature(&self.framing_matrix)
    }

    /// Split union; the invariant of the result is `D·Z_1·Z_2`.
    pub fn disjoint_union(&self, o: &Self) -> Result<Self> {
        SurgeryPresentation::new(self.link.disjoint_union(&o.link))
    }

    /// Adds a split `±1`-framed unknot.
    pub fn stabilize(&self, positive: bool) -> Self {
        self.disjoint_union(&SurgeryPresentation::unknot(if positive { 1 } else { -1 }))
            .expect("split union of valid presentations")
    }
}

/// The invariant together with its exact ingredients.
#[derive(Clone, Debug)]
pub struct RtValue {
    pub sigma: i64,
    pub components: usize,
    /// `⟨ω_0 * l⟩` with `ω_0 = Σ_j d_j p_j`, in the base field.
    pub bracket: Scalar,
    /// `Z = D^{d_exponent} · p_−^σ · bracket`.
    pub d_exponent: i64,
    /// `p_−^σ · bracket · (D²)^{⌊d_exponent/2⌋}`, in the base field.
    pub core: Scalar,
    /// `Z` in the D-extended field.
    pub z: Scalar,
}

impl RtValue {
    pub fn z_approx(&self) -> Complex64 {
        self.z.to_c64().expect("cyclotomic")
    }
}

/// `⟨ω_0 * l⟩ = Σ_{j ∈ labels^k} ∏ d_{j_i} ⟨l(j)⟩`.
pub fn omega_bracket(link: &ColoredFramedLink, md: &ModularData) -> Result<Scalar> {
    let k = link.len();
    let n = md.rank();
    let total = (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    let lim = md.ctx.limits().max_label_vectors as u128;
    if total > lim {
        return Err(TljError::ResourceLimit(format!("{total} label vectors exceed the bound {lim}")));
    }
    let terms: Vec<Result<Scalar>> = (0..total as usize)
        .into_par_iter()
        .map(|idx| {
            let mut colors = Vec::with_capacity(k);
            let mut x = idx;
            let mut w = Scalar::one();
            for _ in 0..k {
                let c = x % n;
                x /= n;
                colors.push(c);
                w = &w * &md.dims[c];
            }
            Ok(&w * &colored_bracket_with(&md.ctx, &link.with_colors(&colors), md.twist_convention)?)
        })
        .collect();
    let mut acc = Scalar::zero();
    for t in terms {
        acc += t?;
    }
    Ok(acc)
}

fn check_pair(md: &ModularData, ext: &DExtension) -> Result<()> {
    if !s_matrix_rank(md).1 {
        return Err(TljError::NonModular);
    }
    let f = md.ctx.field().ok_or(TljError::MissingExtension)?;
    if f.order() != ext.base_order || f.embed() != ext.base_embed {
        return Err(TljError::MissingExtension);
    }
    Ok(())
}

/// `Z(X) = D^{−(m+1)} (p_−/D)^{σ} ⟨ω_0 * l⟩`.
pub fn rt_invariant(s: &SurgeryPresentation, md: &ModularData, ext: &DExtension) -> Result<RtValue> {
    check_pair(md, ext)?;
    let m = s.components() as i64;
    let sigma = s.signature();
    let bracket = omega_bracket(&s.link, md)?;
    let d_exponent = -(m + 1 + sigma);
    let core = &(&md.p_minus.pow(sigma) * &bracket) * &md.d_squared.pow(d_exponent.div_euclid(2));
    let mut z = ext.lift(&core);
    if d_exponent.rem_euclid(2) == 1 {
        z = &z * &ext.d;
    }
    Ok(RtValue { sigma, components: s.components(), bracket, d_exponent, core, z })
}

#[derive(Clone, Debug)]
pub struct DoubledValue {
    /// `(D²)^{e} (p_− p̄_−)^{σ} ⟨ω_0*l⟩ conj⟨ω_0*l⟩`, exact in the base field.
    pub exact: Scalar,
    pub approx: f64,
    /// `|Z|²` from the complex embedding of the D-extended value.
    pub from_z: f64,
}

/// `Z_D = |Z|²`, exact through complex conjugation (`D` is real).
pub fn doubled_invariant(s: &SurgeryPresentation, md: &ModularData, ext: &DExtension) -> Result<DoubledValue> {
    let v = rt_invariant(s, md, ext)?;
    let pm = &md.p_minus * &md.p_minus.conj();
    let exact = &(&md.d_squared.pow(v.d_exponent) * &pm.pow(v.sigma)) * &(&v.bracket * &v.bracket.conj());
    let c = exact.to_c64().expect("cyclotomic");
    Ok(DoubledValue { approx: c.re, exact, from_z: v.z_approx().norm_sqr() })
}

/// One witness: two presentations related by a Kirby move.
#[derive(Clone, Debug)]
pub struct KirbyCheck {
    pub name: String,
    pub before: Scalar,
    pub after: Scalar,
}

impl KirbyCheck {
    pub fn holds(&self) -> bool {
        self.before == self.after
    }
}

#[derive(Clone, Debug)]
pub struct KirbyReport {
    pub checks: Vec<KirbyCheck>,
}

impl KirbyReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(KirbyCheck::holds)
    }
}

/// Handle-slide pairs:
/// - `hopf(a,0) ~ hopf(a+2,0)`: sliding the `a`-framed component over its 0-framed meridian;
/// - `unlink(a,1) ~ hopf(a+1,1)`: sliding an `a`-framed unknot over a split `+1`-framed unknot;
/// - `trefoil(f) ⊔ unknot(1) ~ closure of σ_1³σ_2²` with framings `(f+1, 1)`: the same slide of a trefoil.
pub fn handle_slide_pairs(a: i64) -> Result<Vec<(String, SurgeryPresentation, SurgeryPresentation)>> {
    let hopf = |f1: i64, f2: i64| SurgeryPresentation::from_braid(2, vec![1, 1], &[f1, f2]);
    let unlink = |f1: i64, f2: i64| SurgeryPresentation::unknot(f1).disjoint_union(&SurgeryPresentation::unknot(f2));
    let trefoil = SurgeryPresentation::from_braid(2, vec![1, 1, 1], &[a])?;
    Ok(vec![
        (format!("hopf({a},0) ~ hopf({},0)", a + 2), hopf(a, 0)?, hopf(a + 2, 0)?),
        (format!("unlink({a},1) ~ hopf({},1)", a + 1), unlink(a, 1)?, hopf(a + 1, 1)?),
        (
            format!("trefoil({a}) + unknot(1) ~ s1^3 s2^2 ({},1)", a + 1),
            trefoil.disjoint_union(&SurgeryPresentation::unknot(1))?,
            SurgeryPresentation::from_braid(3, vec![1, 1, 1, 2, 2], &[a + 1, 1])?,
        ),
    ])
}

/// Stabilizes `s` both ways and runs the handle-slide pairs for framing parameter `a`.
pub fn kirby_harness(s: &SurgeryPresentation, md: &ModularData, ext: &DExtension, a: i64) -> Result<KirbyReport> {
    let z = rt_invariant(s, md, ext)?.z;
    let mut checks = Vec::new();
    for pos in [true, false] {
        let st = s.stabilize(pos);
        checks.push(KirbyCheck {
            name: format!("stabilize({})", if pos { "+1" } else { "-1" }),
            before: z.clone(),
            after: rt_invariant(&st, md, ext)?.z,
        });
    }
    for (name, x, y) in handle_slide_pairs(a)? {
        checks.push(KirbyCheck { name, before: rt_invariant(&x, md, ext)?.z, after: rt_invariant(&y, md, ext)?.z });
    }
    Ok(KirbyReport { checks })
}

/// Three isotropic subspaces of `(ℚ^{2g}, ω)`, `ω(x, y) = Σ x_i y_{g+i} − x_{g+i} y_i`;
/// each given by spanning row vectors.
#[derive(Clone, Debug)]
pub struct LagrangianTriple {
    pub dimension: usize,
    pub lambda: [QMatrix; 3],
}

pub fn symplectic_form(x: &[BigRational], y: &[BigRational]) -> BigRational {
    let g = x.len() / 2;
    let mut acc = BigRational::zero();
    for i in 0..g {
        acc += &x[i] * &y[g + i] - &x[g + i] * &y[i];
    }
    acc
}

impl LagrangianTriple {
    pub fn new(dimension: usize, l1: QMatrix, l2: QMatrix, l3: QMatrix) -> Result<Self> {
        if !dimension.is_multiple_of(2) {
            return Err(TljError::InvalidParameters(format!("odd dimension {dimension}")));
        }
        for (k, l) in [&l1, &l2, &l3].into_iter().enumerate() {
            if l.iter().any(|v| v.len() != dimension) {
                return Err(TljError::ShapeMismatch(format!("subspace {} has vectors of the wrong length", k + 1)));
            }
            for v in l {
                for w in l {
                    if !symplectic_form(v, w).is_zero() {
                        return Err(TljError::NotIsotropic(format!("subspace {}", k + 1)));
                    }
                }
            }
        }
        Ok(LagrangianTriple { dimension, lambda: [l1, l2, l3] })
    }

    pub fn swapped_outer(&self) -> Self {
        let [a, b, c] = self.lambda.clone();
        LagrangianTriple { dimension: self.dimension, lambda: [c, b, a] }
    }
}

/// Signature of `⟨v, w⟩ = ω(v_2, w)` on `(λ_1 + λ_2) ∩ λ_3`, where `v = v_1 + v_2`, `v_i ∈ λ_i`.
pub fn maslov_index(t: &LagrangianTriple) -> i64 {
    let [l1, l2, l3] = &t.lambda;
    let (k1, k2, k3) = (l1.len(), l2.len(), l3.len());
    let cols = k1 + k2 + k3;
    // Σ a_i u_i + Σ b_j v_j − Σ c_k w_k = 0, one equation per coordinate.
    let sys: QMatrix = (0..t.dimension)
        .map(|row| {
            let mut eq = Vec::with_capacity(cols);
            eq.extend(l1.iter().map(|u| u[row].clone()));
            eq.extend(l2.iter().map(|v| v[row].clone()));
            eq.extend(l3.iter().map(|w| -w[row].clone()));
            eq
        })
        .collect();
    let kernel = q_nullspace(&sys, cols);
    let combine = |basis: &QMatrix, coeffs: &[BigRational]| -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); t.dimension];
        for (v, c) in basis.iter().zip(coeffs) {
            for (o, x) in out.iter_mut().zip(v) {
                *o += c * x;
            }
        }
        out
    };
    let v2: Vec<_> = kernel.iter().map(|k| combine(l2, &k[k1..k1 + k2])).collect();
    let w: Vec<_> = kernel.iter().map(|k| combine(l3, &k[k1 + k2..])).collect();
    let form: QMatrix = v2.iter().map(|x| w.iter().map(|y| symplectic_form(x, y)).collect()).collect();
    q_signature(&form)
}
