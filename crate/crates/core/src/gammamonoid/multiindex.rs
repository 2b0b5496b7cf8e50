use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polycore::Rat;

/// Exponent vector `(alpha_1, ..., alpha_k)`.
///
/// Entry `i` (0-based) carries weight `i + 1`, so [`MultiIndex::weight`] is
/// `alpha_1 + 2 alpha_2 + ... + k alpha_k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(entries: Vec<usize>) -> Self {
        MultiIndex(entries)
    }

    pub fn zeros(k: usize) -> Self {
        MultiIndex(vec![0; k])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|alpha|`
    pub fn norm(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().enumerate().map(|(i, a)| (i + 1) * a).sum()
    }

    /// `a_1^alpha_1 ... a_k^alpha_k` with `0^0 = 1`. Missing `a` entries are
    /// only allowed where the exponent is zero.
    pub fn power_product(&self, a: &[Rat]) -> Rat {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| a[i].pow(e as u32))
            .product()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// `m! / ((m - |alpha|)! alpha_1! ... alpha_k!)`.
pub fn multinomial(m: usize, alpha: &MultiIndex) -> Result<BigUint> {
    let norm = alpha.norm();
    if norm > m {
        return Err(Error::MultiIndexTooLarge { norm, m });
    }
    let mut remaining = m;
    let mut acc = BigUint::one();
    for &e in alpha.entries() {
        acc *= binomial(remaining, e);
        remaining -= e;
    }
    Ok(acc)
}

/// Same as [`multinomial`] but as a rational, for callers that already
/// checked `|alpha| <= m`.
pub(crate) fn multinomial_rat(m: usize, alpha: &MultiIndex) -> Rat {
    Rat::from(multinomial(m, alpha).expect("caller guarantees |alpha| <= m"))
}

pub(crate) fn binomial_rat(n: usize, k: usize) -> Rat {
    Rat::from(binomial(n, k))
}

/// All `alpha` in `N^k` with weight `weight_target` and `|alpha| <= max_norm`.
///
/// Output is in descending lexicographic order (largest `alpha_1` first).
pub fn enumerate_weighted(k: usize, weight_target: usize, max_norm: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut current = vec![0; k];
    fill(0, weight_target, max_norm, &mut current, &mut out);
    out
}

fn fill(
    pos: usize,
    weight_left: usize,
    norm_left: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<MultiIndex>,
) {
    if pos == current.len() {
        if weight_left == 0 {
            out.push(MultiIndex(current.clone()));
        }
        return;
    }
    let w = pos + 1;
    for e in (0..=(weight_left / w).min(norm_left)).rev() {
        current[pos] = e;
        fill(pos + 1, weight_left - e * w, norm_left - e, current, out);
    }
    current[pos] = 0;
}
