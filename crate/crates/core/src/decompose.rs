//! Splitting a unitary polynomial into composition factors.
//!
//! Given `delta(x) = x + c_2 x^2 + ... + c_d x^d` and a degree `n + 1`
//! dividing `d`, [`peel`] recovers the unique `sigma` of degree `n + 1` and
//! `tau` of degree `m = d / (n + 1)` with `delta = sigma * tau` (that is,
//! `delta(x) = tau(sigma(x))`), or reports that no such pair exists.
//!
//! The unknowns are found from two triangular systems solved by forward
//! substitution:
//!
//! 1. the ratio coefficients `a_1..a_{n-1}` and `lambda` of `sigma`, read off
//!    the top `n` coefficient ratios `c_{d-j} / c_d`;
//! 2. the coefficients `mu_2..mu_m` of `tau`, read off `c_2..c_m`.
//!
//! Every remaining coefficient (`c_d` and the middle block `m < j < d - n`)
//! is then forced, which gives the decomposability test. A full
//! recomposition runs last as a guard.

use std::collections::BTreeMap;

use crate::error::{Error, NoFactorReason, Result};
use crate::gammamonoid::{
    binomial_rat, enumerate_weighted, multinomial_rat, RatioForm, UnitaryMono,
};
use crate::polycore::{Rat, UniPoly};

/// A successful split `delta = sigma * tau`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelResult {
    /// Inner factor, degree `n + 1`.
    pub sigma: UnitaryMono,
    /// Outer cofactor, degree `m`.
    pub tau: UnitaryMono,
    pub ratio: RatioForm,
    /// `mu[k]` is the coefficient of `x^{k+1}` in `tau`; `mu[0] = 1`.
    pub mu: Vec<Rat>,
}

/// An ordered factorization `delta = f_1 * f_2 * ... * f_s` with every
/// factor different from the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub factors: Vec<UnitaryMono>,
    pub signature: Vec<usize>,
}

impl Decomposition {
    pub fn new(factors: Vec<UnitaryMono>) -> Self {
        let signature = factors.iter().map(UnitaryMono::degree).collect();
        Decomposition { factors, signature }
    }

    /// Left-to-right monoid product of the factors.
    pub fn product(&self) -> UnitaryMono {
        UnitaryMono::product_all(&self.factors)
    }
}

/// Shape `(n, m)` of a split of a degree `d` polynomial with inner degree
/// `e_deg = n + 1`.
fn split_shape(d: usize, e_deg: usize) -> Result<(usize, usize)> {
    if e_deg < 2 || e_deg > d || !d.is_multiple_of(e_deg) || d / e_deg < 2 {
        return Err(Error::InvalidSplitShape { d, e_deg });
    }
    Ok((e_deg - 1, d / e_deg))
}

/// The ratios `c_{d-j} / c_d` for `j = 1..=n`.
pub fn top_ratios(delta: &UnitaryMono, n: usize) -> Vec<Rat> {
    let d = delta.degree();
    let cd = delta.coeff(d);
    (1..=n)
        .map(|j| {
            delta
                .coeff(d - j)
                .checked_div(&cd)
                .expect("leading coefficient is nonzero")
        })
        .collect()
}

/// Solves the first triangular system: returns `(a_1..a_{n-1}, lambda)`
/// from the top ratios `r_j = c_{d-j} / c_d` and the cofactor degree `m`.
///
/// Reads nothing but `ratios` and `m`.
pub fn solve_ratio_system(ratios: &[Rat], m: usize) -> Result<(Vec<Rat>, Rat)> {
    let n = ratios.len();
    if n == 0 || m < 2 {
        return Err(Error::InvalidArgument(format!(
            "ratio system needs n >= 1 and m >= 2 (n = {n}, m = {m})"
        )));
    }
    let m_rat = Rat::from(m as i64);
    let mut a: Vec<Rat> = Vec::with_capacity(n - 1);
    for j in 1..n {
        let known: Rat = enumerate_weighted(j - 1, j, m)
            .iter()
            .map(|alpha| multinomial_rat(m, alpha) * alpha.power_product(&a))
            .sum();
        let aj = (&ratios[j - 1] - known)
            .checked_div(&m_rat)
            .expect("m >= 2");
        a.push(aj);
    }
    let s = lambda_offset(&a, n, m);
    let denom = &ratios[n - 1] - s;
    if denom.is_zero() {
        return Err(Error::NoFactor(NoFactorReason::LambdaUndefined));
    }
    let lambda = m_rat.checked_div(&denom)?;
    Ok((a, lambda))
}

/// `sum over alpha in N^{n-1}, |alpha| <= m, weight n` of
/// `multinomial(m, alpha) a^alpha`: the part of the `j = n` ratio equation
/// not involving `lambda`.
pub(crate) fn lambda_offset(a: &[Rat], n: usize, m: usize) -> Rat {
    enumerate_weighted(n - 1, n, m)
        .iter()
        .map(|alpha| multinomial_rat(m, alpha) * alpha.power_product(a))
        .sum()
}

/// Sum of `mu_{m'} binom(m', i) lambda^i` over `1 <= i <= m' <= m_max`,
/// `m' + i n = j` (the double sum), plus
/// `mu_{m'} binom(m', i) multinomial(i, alpha) a^alpha lambda^i` over
/// `1 <= |alpha| <= i <= m' <= m_max`, `m' - weight(alpha) + i n = j`
/// (the triple sum).
///
/// With `m_max = j - 1` this is the contribution of `mu_1..mu_{j-1}` to
/// `c_j`; with `m_max = m` and `j > m` it is the forced value of `c_j`.
fn lower_contribution(
    j: usize,
    m_max: usize,
    n: usize,
    mu: &[Rat],
    a: &[Rat],
    lambda_pows: &[Rat],
) -> Rat {
    let mut total = Rat::zero();
    for m_prime in 1..=m_max.min(j.saturating_sub(1)) {
        let mu_mp = &mu[m_prime - 1];
        if mu_mp.is_zero() {
            continue;
        }
        for (i, lambda_i) in lambda_pows.iter().enumerate().take(m_prime + 1).skip(1) {
            let shifted = m_prime + i * n;
            if shifted < j {
                continue;
            }
            let base = mu_mp * binomial_rat(m_prime, i) * lambda_i;
            if shifted == j {
                total += &base;
            } else {
                let w = shifted - j;
                for alpha in enumerate_weighted(n - 1, w, i) {
                    total += &base * multinomial_rat(i, &alpha) * alpha.power_product(a);
                }
            }
        }
    }
    total
}

/// Recovers the unique split of `delta` whose inner factor has degree `e_deg`.
pub fn peel(delta: &UnitaryMono, e_deg: usize) -> Result<PeelResult> {
    let d = delta.degree();
    let (n, m) = split_shape(d, e_deg)?;

    let ratios = top_ratios(delta, n);
    let (a, lambda) = solve_ratio_system(&ratios, m)?;
    let lambda_pows: Vec<Rat> = (0..=m).map(|i| lambda.pow(i as u32)).collect();

    let mut mu = vec![Rat::one()];
    for j in 2..=m {
        let lower = lower_contribution(j, j - 1, n, &mu, &a, &lambda_pows);
        mu.push(delta.coeff(j) - lower);
    }

    if delta.coeff(d) != &mu[m - 1] * &lambda_pows[m] {
        return Err(Error::NoFactor(NoFactorReason::LeadingCheck));
    }
    for j in (m + 1)..(d - n) {
        let forced = lower_contribution(j, m, n, &mu, &a, &lambda_pows);
        if delta.coeff(j) != forced {
            return Err(Error::NoFactor(NoFactorReason::MiddleCoefficient { j }));
        }
    }

    let ratio = RatioForm::new(n, lambda, a)?;
    let sigma = ratio.rebuild();
    let mut tau_coeffs = vec![Rat::zero()];
    tau_coeffs.extend(mu.iter().cloned());
    let tau = UnitaryMono::new(UniPoly::from_coeffs(tau_coeffs))
        .map_err(|e| Error::Internal(format!("cofactor is not unitary: {e}")))?;
    if tau.degree() != m {
        return Err(Error::Internal("cofactor degree mismatch".into()));
    }
    if &sigma.product(&tau) != delta {
        return Err(Error::Internal(format!(
            "recomposition guard tripped for shape (n = {n}, m = {m})"
        )));
    }
    Ok(PeelResult {
        sigma,
        tau,
        ratio,
        mu,
    })
}

/// Divisors `e` of `d` with `2 <= e <= d / 2`, ascending.
pub fn split_degrees(d: usize) -> Vec<usize> {
    (2..=d / 2).filter(|&e| d.is_multiple_of(e)).collect()
}

/// Every proper split shape of `delta` with its outcome, in ascending order
/// of the inner degree. Errors other than "no factor" are propagated.
pub fn peel_all(delta: &UnitaryMono) -> Result<Vec<(usize, Result<PeelResult>)>> {
    split_degrees(delta.degree())
        .into_iter()
        .map(|e| match peel(delta, e) {
            Err(err) if !err.is_negative_answer() => Err(err),
            outcome => Ok((e, outcome)),
        })
        .collect()
}

/// All successful peels; empty exactly when `delta` is indecomposable.
pub fn is_decomposable(delta: &UnitaryMono) -> Result<Vec<(usize, PeelResult)>> {
    Ok(peel_all(delta)?
        .into_iter()
        .filter_map(|(e, r)| r.ok().map(|p| (e, p)))
        .collect())
}

fn require_non_identity(delta: &UnitaryMono) -> Result<()> {
    if delta.is_identity() {
        return Err(Error::InvalidArgument(
            "the identity has no decompositions".into(),
        ));
    }
    Ok(())
}

/// The full decomposition set, sorted by signature. Always contains the
/// one-factor decomposition `(delta)`.
pub fn enumerate_decompositions(delta: &UnitaryMono) -> Result<Vec<Decomposition>> {
    require_non_identity(delta)?;
    let mut memo = BTreeMap::new();
    let tails = decompose_rec(delta, &mut memo)?;
    let mut out: Vec<Decomposition> = tails.into_iter().map(Decomposition::new).collect();
    out.sort_by(|x, y| x.signature.cmp(&y.signature));
    out.dedup();
    Ok(out)
}

fn decompose_rec(
    delta: &UnitaryMono,
    memo: &mut BTreeMap<Vec<Rat>, Vec<Vec<UnitaryMono>>>,
) -> Result<Vec<Vec<UnitaryMono>>> {
    let key = delta.poly().coeffs().to_vec();
    if let Some(hit) = memo.get(&key) {
        return Ok(hit.clone());
    }
    let mut out = vec![vec![delta.clone()]];
    for (_, split) in is_decomposable(delta)? {
        for tail in decompose_rec(&split.tau, memo)? {
            let mut factors = Vec::with_capacity(tail.len() + 1);
            factors.push(split.sigma.clone());
            factors.extend(tail);
            out.push(factors);
        }
    }
    memo.insert(key, out.clone());
    Ok(out)
}

/// Degree tuples of all decompositions, sorted.
pub fn signature_set(delta: &UnitaryMono) -> Result<Vec<Vec<usize>>> {
    Ok(enumerate_decompositions(delta)?
        .into_iter()
        .map(|dec| dec.signature)
        .collect())
}
