//! Exact factorization of unitary polynomial maps `x -> x + c_2 x^2 + ... + c_d x^d`
//! under composition.
//!
//! The crate is organised bottom-up:
//!
//! - [`polycore`]: exact rationals and dense univariate polynomials.
//! - [`gammamonoid`]: unitary monomorphisms, their product, the ratio form,
//!   submonoid levels and multi-index combinatorics.
//! - [`decompose`]: peeling a factor of prescribed degree, the decomposability
//!   criterion, and enumeration of all decompositions and signatures.
//! - [`inversion`]: sparse multivariate polynomials, the triangular
//!   automorphism behind the factor equations, its inversion formula, and
//!   closed-form factor coefficients.
//! - [`freemonoid`]: recovering generator words in the free submonoid.
//! - [`irreducibility`]: chain-rule divisor witnesses for polynomials with
//!   constant term one.
//! - [`cli`]: the `monodec` command line front end.
//!
//! Composition order follows the monoid: `(sigma * tau)(x)` is the polynomial
//! `tau(sigma(x))`, so the left factor is the inner polynomial.

pub mod cli;
pub mod decompose;
pub mod error;
pub mod freemonoid;
pub mod gammamonoid;
pub mod inversion;
pub mod irreducibility;
pub mod polycore;

pub use error::{Error, FreeMonoidStage, NoFactorReason, Result};
pub use polycore::{Rat, UniPoly};
