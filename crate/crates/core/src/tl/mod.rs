//! The Temperley-Lieb diagram algebra.

pub mod diagram;
pub mod element;
pub mod gram;

pub use diagram::{catalan, enumerate_diagrams, enumerate_matchings, Matching, TLDiagram};
pub use element::{nested_cap, nested_cup, TLElement};
pub use gram::{gram_determinant, gram_matrix, gram_spectrum, meander_determinant, meander_exponent};
