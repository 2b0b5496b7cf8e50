//! Inversion of the triangular automorphism behind the factor equations,
//! and closed-form factor coefficients.
//!
//! The ratio coefficients `a_1..a_{n-1}` of an inner factor solve
//! `s(a) = r`, where `r_j = c_{d-j} / c_d` and `s` is the triangular
//! automorphism built by [`TriAuto::new`]. Writing each `x_j` as a
//! polynomial in `x'_k = s(x_k)` (the inversion formula, using the twisted
//! derivations `d / d x'_i` and the operators `phi'_i`) and substituting
//! `x'_k = r_k` gives every `a_j` as an explicit polynomial in the ratios.

mod automorphism;
mod mpoly;

use crate::decompose::lambda_offset;
use crate::error::{Error, NoFactorReason, Result};
use crate::polycore::Rat;

pub use automorphism::TriAuto;
pub use mpoly::{determinant, Exponents, MPoly};

pub fn build_automorphism(n: usize, m: usize) -> Result<TriAuto> {
    TriAuto::new(n, m)
}

/// `x_j(x'_1, ..., x'_j)` for the automorphism with parameters `(n, m)`.
pub fn inverse_expansion(n: usize, m: usize, j: usize) -> Result<MPoly> {
    TriAuto::new(n, m)?.inverse_expansion(j)
}

/// Precomputed inverse expansions for one shape `(n, m)`.
#[derive(Clone, Debug)]
pub struct ClosedForm {
    n: usize,
    m: usize,
    expansions: Vec<MPoly>,
}

impl ClosedForm {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m < 2 {
            return Err(Error::InvalidArgument(format!(
                "closed form needs n >= 1 and m >= 2 (n = {n}, m = {m})"
            )));
        }
        let expansions = if n == 1 {
            Vec::new()
        } else {
            let s = TriAuto::new(n, m)?;
            (1..n)
                .map(|j| s.inverse_expansion(j))
                .collect::<Result<_>>()?
        };
        Ok(ClosedForm { n, m, expansions })
    }

    /// `x_j(x')` for `j = 1..n-1`.
    pub fn expansions(&self) -> &[MPoly] {
        &self.expansions
    }

    /// `(a_1..a_{n-1}, lambda)` from the ratios `c_{d-1}/c_d, ..., c_{d-n}/c_d`.
    pub fn solve(&self, ratios: &[Rat]) -> Result<(Vec<Rat>, Rat)> {
        let n = self.n;
        if ratios.len() != n {
            return Err(Error::InvalidArgument(format!(
                "expected {n} ratios, got {}",
                ratios.len()
            )));
        }
        let point = &ratios[..n - 1];
        let a: Vec<Rat> = self
            .expansions
            .iter()
            .map(|xj| xj.eval(point))
            .collect::<Result<_>>()?;
        let denom = &ratios[n - 1] - lambda_offset(&a, n, self.m);
        if denom.is_zero() {
            return Err(Error::NoFactor(NoFactorReason::LambdaUndefined));
        }
        let lambda = Rat::from(self.m as i64).checked_div(&denom)?;
        Ok((a, lambda))
    }
}

/// One-shot version of [`ClosedForm::solve`].
pub fn closed_form_factors(ratios: &[Rat], n: usize, m: usize) -> Result<(Vec<Rat>, Rat)> {
    ClosedForm::new(n, m)?.solve(ratios)
}
