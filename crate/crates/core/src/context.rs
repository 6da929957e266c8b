//! Parameter contexts: which value the Kauffman variable `A` (or just the loop value `d`) takes.

use crate::error::{Result, TljError};
use crate::jw::JWProjector;
use crate::scalars::{chebyshev, cyclo_field, loop_value, quantum_int, Cyclo, CycloField, Scalar};
use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

/// Resource caps shared by the engines and the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `(bottom + top) / 2` accepted by diagram enumeration.
    pub max_strands: usize,
    /// Largest number of label vectors in an ω-coloring expansion.
    pub max_label_vectors: usize,
    /// Largest Gram matrix dimension (Catalan number) accepted.
    pub max_gram_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_strands: 14, max_label_vectors: 100_000, max_gram_dim: 4862 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContextKind {
    /// `A` is transcendental; scalars live in ℚ(A).
    Generic,
    /// `A = exp(2πi t / m)`; scalars live in ℚ(ζ_m).
    Root { order: u64, embed: u64 },
    /// Only the loop value is fixed; braid operations are unavailable.
    LoopValue,
}

type JwCache = RwLock<HashMap<usize, Result<Arc<JWProjector>>>>;

struct Inner {
    id: u64,
    kind: ContextKind,
    a: Option<Scalar>,
    d: Scalar,
    field: Option<Arc<CycloField>>,
    limits: Limits,
    jw: JwCache,
}

/// A cheaply clonable handle; projector caches are shared between clones.
#[derive(Clone)]
pub struct Context(Arc<Inner>);

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

impl Context {
    fn build(kind: ContextKind, a: Option<Scalar>, d: Scalar, field: Option<Arc<CycloField>>, limits: Limits) -> Self {
        Context(Arc::new(Inner {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            kind,
            a,
            d,
            field,
            limits,
            jw: RwLock::new(HashMap::new()),
        }))
    }

    /// Generic context: `A` is a formal variable.
    pub fn generic() -> Self {
        let a = Scalar::a_generic(1);
        let d = loop_value(&a);
        Context::build(ContextKind::Generic, Some(a), d, None, Limits::default())
    }

    /// `A` a primitive `m`-th root of unity embedded as `exp(2πi t/m)`.
    pub fn root(m: u64, t: i64) -> Result<Self> {
        let field = cyclo_field(m, t)?;
        let a = Scalar::Cyclo(Cyclo::zeta_pow(&field, 1));
        let d = loop_value(&a);
        let kind = ContextKind::Root { order: m, embed: field.embed() };
        Ok(Context::build(kind, Some(a), d, Some(field), Limits::default()))
    }

    /// Only the loop value `d` is fixed (for example a random rational).
    pub fn with_loop_value(d: Scalar) -> Self {
        let field = d.cyclo_field().cloned();
        Context::build(ContextKind::LoopValue, None, d, field, Limits::default())
    }

    /// Same parameter with different limits; caches are not shared.
    pub fn with_limits(&self, limits: Limits) -> Self {
        Context::build(self.0.kind.clone(), self.0.a.clone(), self.0.d.clone(), self.0.field.clone(), limits)
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }

    pub fn kind(&self) -> &ContextKind {
        &self.0.kind
    }

    pub fn limits(&self) -> Limits {
        self.0.limits
    }

    pub fn field(&self) -> Option<&Arc<CycloField>> {
        self.0.field.as_ref()
    }

    pub fn d(&self) -> &Scalar {
        &self.0.d
    }

    pub fn a(&self) -> Result<&Scalar> {
        self.0.a.as_ref().ok_or_else(|| TljError::Unsupported("context fixes only the loop value, not A".into()))
    }

    /// `A^k`.
    pub fn a_pow(&self, k: i64) -> Result<Scalar> {
        match (&self.0.kind, self.field()) {
            (ContextKind::Root { .. }, Some(f)) => Ok(Scalar::Cyclo(Cyclo::zeta_pow(f, k))),
            (ContextKind::Generic, _) => Ok(Scalar::a_generic(k)),
            _ => Err(TljError::Unsupported("context fixes only the loop value, not A".into())),
        }
    }

    /// `ζ_m^k` in a root context.
    pub fn zeta_pow(&self, k: i64) -> Result<Scalar> {
        let f = self.field().ok_or_else(|| TljError::Unsupported("not a root-of-unity context".into()))?;
        Ok(Scalar::Cyclo(Cyclo::zeta_pow(f, k)))
    }

    /// `Δ_n(d)`.
    pub fn delta(&self, n: usize) -> Scalar {
        chebyshev(n, &self.0.d)
    }

    pub fn quantum_int(&self, n: i64) -> Result<Scalar> {
        quantum_int(n, self.a()?)
    }

    pub(crate) fn jw_cache(&self) -> &JwCache {
        &self.0.jw
    }

    pub fn root_order(&self) -> Option<(u64, u64)> {
        match self.0.kind {
            ContextKind::Root { order, embed } => Some((order, embed)),
            _ => None,
        }
    }
}

impl fmt::Debug for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            ContextKind::Generic => write!(f, "Context(generic A)"),
            ContextKind::Root { order, embed } => write!(f, "Context(A = exp(2πi·{embed}/{order}))"),
            ContextKind::LoopValue => write!(f, "Context(d = {})", self.0.d),
        }
    }
}
