//! Exact rational scalars and dense univariate polynomials.
//!
//! Everything else in the crate is built on [`Rat`] and [`UniPoly`]. Both
//! are plain immutable values; every operation returns a fresh canonical
//! result (reduced fractions, no trailing zero coefficients).

mod rat;
mod unipoly;

pub use rat::Rat;
pub use unipoly::{Term, UniPoly};
