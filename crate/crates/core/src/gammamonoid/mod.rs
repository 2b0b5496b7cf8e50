//! The monoid of unitary monomorphisms `x -> x + l_2 x^2 + ... + l_d x^d`.
//!
//! An element is stored as its image polynomial. The product follows
//! algebra-morphism composition, `(sigma tau)(x) = sigma(tau(x))`, which as
//! polynomials is `tau_poly(sigma_poly(x))`: the left factor is the inner
//! polynomial.

mod multiindex;

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::polycore::{Rat, UniPoly};

pub use multiindex::{binomial, enumerate_weighted, multinomial, MultiIndex};
pub(crate) use multiindex::{binomial_rat, multinomial_rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitaryMono {
    poly: UniPoly,
}

impl UnitaryMono {
    /// Validates that `p` has zero constant term and linear coefficient one.
    pub fn new(p: UniPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::NotUnitary("zero polynomial".into()));
        }
        if !p.coeff(0).is_zero() {
            return Err(Error::NotUnitary(format!(
                "constant term is {}, expected 0",
                p.coeff(0)
            )));
        }
        if !p.coeff(1).is_one() {
            return Err(Error::NotUnitary(format!(
                "linear coefficient is {}, expected 1",
                p.coeff(1)
            )));
        }
        Ok(UnitaryMono { poly: p })
    }

    pub fn identity() -> Self {
        UnitaryMono { poly: UniPoly::x() }
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn into_poly(self) -> UniPoly {
        self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().expect("unitary polynomials are nonzero")
    }

    pub fn is_identity(&self) -> bool {
        self.degree() == 1
    }

    /// Coefficient `c_j` of `x^j` in the image polynomial.
    pub fn coeff(&self, j: usize) -> Rat {
        self.poly.coeff(j)
    }

    /// Monoid product `self * tau`, i.e. `tau_poly(self_poly(x))`.
    pub fn product(&self, tau: &UnitaryMono) -> UnitaryMono {
        UnitaryMono {
            poly: tau.poly.compose(&self.poly),
        }
    }

    /// Left-to-right product of `factors`; the empty product is the identity.
    pub fn product_all<'a>(factors: impl IntoIterator<Item = &'a UnitaryMono>) -> UnitaryMono {
        factors
            .into_iter()
            .fold(UnitaryMono::identity(), |acc, f| acc.product(f))
    }

    pub fn ratio_form(&self) -> Result<RatioForm> {
        if self.is_identity() {
            return Err(Error::IdentityHasNoRatioForm);
        }
        let n = self.degree() - 1;
        let lambda = self.poly.coeff(n + 1);
        // a_i = l_{n-i} / l_n, where l_k is the coefficient of x^{k+1}.
        let a = (1..n)
            .map(|i| {
                self.poly
                    .coeff(n - i + 1)
                    .checked_div(&lambda)
                    .expect("leading coefficient is nonzero")
            })
            .collect();
        Ok(RatioForm { n, lambda, a })
    }

    /// Largest `n` with `sigma(x) - x` supported on powers `x^{1 + n i}`.
    pub fn gamma_level(&self) -> GammaLevel {
        self.poly
            .terms()
            .filter(|&(i, _)| i >= 2)
            .map(|(i, _)| i - 1)
            .reduce(|g, k| g.gcd(&k))
            .map_or(GammaLevel::Unbounded, GammaLevel::Level)
    }

    /// Direct membership test for the submonoid `Gamma'_n`.
    pub fn in_level(&self, n: usize) -> bool {
        n >= 1
            && self
                .poly
                .terms()
                .all(|(i, _)| i == 1 || (i >= 2 && (i - 1) % n == 0))
    }
}

impl fmt::Display for UnitaryMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Level of an element in the chain of submonoids `Gamma'_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GammaLevel {
    /// The identity lies in every `Gamma'_n`.
    Unbounded,
    Level(usize),
}

impl GammaLevel {
    /// Whether an element at this level lies in `Gamma'_n`.
    pub fn contains(self, n: usize) -> bool {
        match self {
            GammaLevel::Unbounded => n >= 1,
            GammaLevel::Level(g) => n >= 1 && g % n == 0,
        }
    }
}

impl fmt::Display for GammaLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaLevel::Unbounded => write!(f, "unbounded"),
            GammaLevel::Level(n) => write!(f, "{n}"),
        }
    }
}

/// `sigma(x) = x (1 + (a_{n-1} x^{-(n-1)} + ... + a_1 x^{-1} + 1) lambda x^n)`,
/// so `deg sigma = n + 1`. `a[0]` holds `a_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatioForm {
    pub n: usize,
    pub lambda: Rat,
    pub a: Vec<Rat>,
}

impl RatioForm {
    pub fn new(n: usize, lambda: Rat, a: Vec<Rat>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("ratio form needs n >= 1".into()));
        }
        if lambda.is_zero() {
            return Err(Error::InvalidArgument("lambda must be nonzero".into()));
        }
        if a.len() != n - 1 {
            return Err(Error::InvalidArgument(format!(
                "expected {} ratio coefficients, got {}",
                n - 1,
                a.len()
            )));
        }
        Ok(RatioForm { n, lambda, a })
    }

    pub fn rebuild(&self) -> UnitaryMono {
        let mut coeffs = vec![Rat::zero(); self.n + 2];
        coeffs[1] = Rat::one();
        coeffs[self.n + 1] = self.lambda.clone();
        for (idx, ai) in self.a.iter().enumerate() {
            let i = idx + 1;
            coeffs[self.n + 1 - i] = ai * &self.lambda;
        }
        UnitaryMono {
            poly: UniPoly::from_coeffs(coeffs),
        }
    }

    /// `sigma(x^m)` expanded term by term from the ratio form.
    pub fn sigma_power(&self, m: usize) -> UniPoly {
        let n = self.n;
        let mut coeffs = vec![Rat::zero(); m * (n + 1) + 1];
        coeffs[m] = Rat::one();
        for i in 1..=m {
            let outer = binomial_rat(m, i) * self.lambda.pow(i as u32);
            coeffs[m + i * n] += &outer;
            for w in 1..=i * (n - 1) {
                for alpha in enumerate_weighted(n - 1, w, i) {
                    let term = &outer * multinomial_rat(i, &alpha) * alpha.power_product(&self.a);
                    coeffs[m + i * n - w] += term;
                }
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}
