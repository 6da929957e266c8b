//! Exact Temperley-Lieb-Jones calculus: diagram algebras, Jones-Wenzl projectors,
//! Kauffman bracket invariants, modular data, surgery invariants of 3-manifolds
//! and low-level annular categories.

#![allow(clippy::needless_range_loop)]

pub mod annular;
pub mod braid;
pub mod cli;
pub mod context;
pub mod error;
pub mod json;
pub mod jw;
pub mod linalg;
pub mod manifold;
pub mod modular;
pub mod scalars;
pub mod tl;

pub use context::{Context, ContextKind, Limits};
pub use error::{Result, TljError};
pub use scalars::Scalar;
