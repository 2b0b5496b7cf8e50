use crate::error::{Error, Result};
use crate::gammamonoid::{enumerate_weighted, multinomial_rat};
use crate::polycore::Rat;

use super::mpoly::{determinant, Exponents, MPoly};

/// The triangular automorphism of `K[x_1..x_{n-1}]` whose inverse yields
/// the ratio coefficients of an inner factor:
///
/// `s(x_j) = m x_j + sum over alpha in C_j of multinomial(m, alpha) x_1^alpha_1 ... x_{j-1}^alpha_{j-1}`,
///
/// where `C_j` holds the `alpha in N^{j-1}` of weight `j` with `|alpha| <= m`.
///
/// Variable indices in the methods below are 0-based: index `i` is `x_{i+1}`.
#[derive(Clone, Debug)]
pub struct TriAuto {
    n: usize,
    m: usize,
    images: Vec<MPoly>,
    jacobian: Vec<Vec<MPoly>>,
    jacobian_det: Rat,
    jacobian_det_inv: Rat,
    /// `cofactors[i][j]` is the `(i, j)` cofactor of the Jacobian.
    cofactors: Vec<Vec<MPoly>>,
}

impl TriAuto {
    /// Builds `s` for `n - 1` variables. Needs `n >= 2` and `m >= 2`.
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Degenerate { n });
        }
        if m < 2 {
            return Err(Error::InvalidArgument(format!("need m >= 2, got {m}")));
        }
        let k = n - 1;
        let mut images = Vec::with_capacity(k);
        for j in 1..=k {
            let mut img = MPoly::var(k, j - 1)?.scale(&Rat::from(m as i64));
            for alpha in enumerate_weighted(j - 1, j, m) {
                let mut e: Exponents = alpha.entries().iter().map(|&x| x as u32).collect();
                e.resize(k, 0);
                img = img.add(&MPoly::monomial(k, e, multinomial_rat(m, &alpha)))?;
            }
            images.push(img);
        }

        let jacobian: Vec<Vec<MPoly>> = images
            .iter()
            .map(|img| (0..k).map(|j| img.partial(j)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        let det = determinant(&jacobian, k)?;
        let expected = Rat::from(m as i64).pow(k as u32);
        if !det.is_constant() || det.constant_term() != expected {
            return Err(Error::Internal(format!(
                "Jacobian determinant is {det}, expected {expected}"
            )));
        }

        let mut cofactors = vec![vec![MPoly::zero(k); k]; k];
        for (i, row) in cofactors.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let minor: Vec<Vec<MPoly>> = (0..k)
                    .filter(|&r| r != i)
                    .map(|r| {
                        (0..k)
                            .filter(|&c| c != j)
                            .map(|c| jacobian[r][c].clone())
                            .collect()
                    })
                    .collect();
                let d = determinant(&minor, k)?;
                *slot = if (i + j) % 2 == 0 { d } else { d.neg() };
            }
        }

        Ok(TriAuto {
            n,
            m,
            images,
            jacobian,
            jacobian_det_inv: expected.recip()?,
            jacobian_det: expected,
            cofactors,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of variables, `n - 1`.
    pub fn nvars(&self) -> usize {
        self.n - 1
    }

    /// `s(x_{i+1})` for each variable.
    pub fn images(&self) -> &[MPoly] {
        &self.images
    }

    pub fn jacobian(&self) -> &[Vec<MPoly>] {
        &self.jacobian
    }

    pub fn jacobian_det(&self) -> &Rat {
        &self.jacobian_det
    }

    fn check_poly(&self, p: &MPoly) -> Result<()> {
        if p.nvars() != self.nvars() {
            return Err(Error::VariableCountMismatch {
                left: self.nvars(),
                right: p.nvars(),
            });
        }
        Ok(())
    }

    fn check_var(&self, i: usize) -> Result<()> {
        if i >= self.nvars() {
            return Err(Error::IndexOutOfRange {
                index: i + 1,
                max: self.nvars(),
            });
        }
        Ok(())
    }

    /// Applies `s` to `p`.
    pub fn apply(&self, p: &MPoly) -> Result<MPoly> {
        self.check_poly(p)?;
        p.substitute(&self.images)
    }

    /// The derivation `d / d x'_i` with `x'_i = s(x_i)`: the Jacobian
    /// determinant with row `i` replaced by the gradient of `p`, divided by
    /// the Jacobian determinant. Expanded along the replaced row.
    pub fn dprime(&self, i: usize, p: &MPoly) -> Result<MPoly> {
        self.check_var(i)?;
        self.check_poly(p)?;
        let mut acc = MPoly::zero(self.nvars());
        for (j, cof) in self.cofactors[i].iter().enumerate() {
            if cof.is_zero() {
                continue;
            }
            let dj = p.partial(j)?;
            if dj.is_zero() {
                continue;
            }
            acc = acc.add(&dj.mul(cof)?)?;
        }
        Ok(acc.scale(&self.jacobian_det_inv))
    }

    /// Same derivation, evaluated as a full determinant of the modified
    /// Jacobian. Slower; kept as a cross-check for [`TriAuto::dprime`].
    pub fn dprime_by_determinant(&self, i: usize, p: &MPoly) -> Result<MPoly> {
        self.check_var(i)?;
        self.check_poly(p)?;
        let k = self.nvars();
        let mut matrix = self.jacobian.clone();
        matrix[i] = (0..k).map(|j| p.partial(j)).collect::<Result<_>>()?;
        Ok(determinant(&matrix, k)?.scale(&self.jacobian_det_inv))
    }

    /// `sum_{k=0}^{limit} (-1)^k x'_i^k / k! dprime_i^k (p)`, stopping early
    /// once the derivative vanishes. The flag reports whether the series was
    /// exhausted (derivative reached zero) within `limit` steps.
    fn phi_series(&self, i: usize, limit: usize, p: &MPoly) -> Result<(MPoly, bool)> {
        self.check_var(i)?;
        self.check_poly(p)?;
        let xi = &self.images[i];
        let mut acc = p.clone();
        let mut deriv = p.clone();
        let mut xpow = MPoly::one(self.nvars());
        let mut coef = Rat::one();
        for k in 1..=limit {
            deriv = self.dprime(i, &deriv)?;
            if deriv.is_zero() {
                return Ok((acc, true));
            }
            xpow = xpow.mul(xi)?;
            coef = (-coef).checked_div(&Rat::from(k as i64))?;
            acc = acc.add(&xpow.mul(&deriv)?.scale(&coef))?;
        }
        let exhausted = self.dprime(i, &deriv)?.is_zero();
        Ok((acc, exhausted))
    }

    /// The truncated operator `phi'_{i,depth}` applied to `p`.
    pub fn phi_truncated(&self, i: usize, depth: usize, p: &MPoly) -> Result<MPoly> {
        Ok(self.phi_series(i, depth, p)?.0)
    }

    /// Iteration cap for the untruncated operator: every variable has
    /// degree at most `n - 1` in the primed variables.
    fn phi_cap(&self, p: &MPoly) -> usize {
        let deg = p.total_degree().unwrap_or(0);
        self.nvars() * deg + self.n + 2
    }

    /// The untruncated operator `phi'_i`, summed until the derivative
    /// vanishes.
    pub fn phi(&self, i: usize, p: &MPoly) -> Result<MPoly> {
        let cap = self.phi_cap(p);
        let (out, exhausted) = self.phi_series(i, cap, p)?;
        if !exhausted {
            return Err(Error::Internal(format!(
                "phi iteration cap {cap} hit for variable {}",
                i + 1
            )));
        }
        Ok(out)
    }

    /// `phi_s = phi'_1 ... phi'_{n-1}` (rightmost applied first). Lands in the
    /// constants.
    pub fn phi_s(&self, p: &MPoly) -> Result<MPoly> {
        let mut q = p.clone();
        for i in (0..self.nvars()).rev() {
            q = self.phi(i, &q)?;
        }
        Ok(q)
    }

    fn phi_s_scalar(&self, p: &MPoly) -> Result<Rat> {
        let c = self.phi_s(p)?;
        if !c.is_constant() {
            return Err(Error::Internal(format!("phi_s produced non-constant {c}")));
        }
        Ok(c.constant_term())
    }

    /// `s^{-1}(a) = sum over alpha of phi_s(dprime^alpha(a) / alpha!) x^alpha`.
    ///
    /// The sum runs over every `alpha` whose twisted derivative is nonzero,
    /// which is finite because each `dprime_i` lowers the degree in the
    /// primed variables.
    pub fn invert(&self, a: &MPoly) -> Result<MPoly> {
        self.check_poly(a)?;
        let k = self.nvars();
        let mut terms = Vec::new();
        self.walk_derivatives(a, k, usize::MAX, |alpha, d| {
            let c = self.phi_s_scalar(d)?.checked_div(&alpha_factorial(alpha))?;
            terms.push((alpha.to_vec(), c));
            Ok(())
        })?;
        MPoly::from_terms(k, terms)
    }

    /// Depth-first walk over `alpha` in `N^{vars}` (first `vars` variables
    /// only) with `|alpha| <= max_norm`, visiting each multi-index once with
    /// `dprime^alpha(a)`. Branches with a zero derivative are pruned.
    fn walk_derivatives(
        &self,
        a: &MPoly,
        vars: usize,
        max_norm: usize,
        mut visit: impl FnMut(&[u32], &MPoly) -> Result<()>,
    ) -> Result<()> {
        if a.is_zero() {
            return Ok(());
        }
        let k = self.nvars();
        let mut stack: Vec<(Exponents, usize, usize, MPoly)> = vec![(vec![0; k], 0, 0, a.clone())];
        while let Some((alpha, last, norm, d)) = stack.pop() {
            visit(&alpha, &d)?;
            if norm >= max_norm {
                continue;
            }
            for i in last..vars {
                let child = self.dprime(i, &d)?;
                if child.is_zero() {
                    continue;
                }
                let mut next = alpha.clone();
                next[i] += 1;
                stack.push((next, i, norm + 1, child));
            }
        }
        Ok(())
    }

    /// `x_j` written as a polynomial in `x'_1..x'_j` via the truncated
    /// operators: the `alpha` term uses `phi'_{1,t} ... phi'_{j,t}` with
    /// `t = j - |alpha|`. `j` is 1-based. The result is stored over the
    /// same `n - 1` variable slots, read as primed variables.
    pub fn inverse_expansion(&self, j: usize) -> Result<MPoly> {
        let k = self.nvars();
        if j == 0 || j > k {
            return Err(Error::IndexOutOfRange { index: j, max: k });
        }
        let xj = MPoly::var(k, j - 1)?;
        let mut terms = Vec::new();
        self.walk_derivatives(&xj, j, j, |alpha, d| {
            let norm: usize = alpha.iter().map(|&x| x as usize).sum();
            let depth = j - norm;
            let mut q = d.scale(&alpha_factorial(alpha).recip()?);
            for i in (0..j).rev() {
                q = self.phi_truncated(i, depth, &q)?;
            }
            if !q.is_constant() {
                return Err(Error::Internal(format!(
                    "truncated phi chain left non-constant {q}"
                )));
            }
            terms.push((alpha.to_vec(), q.constant_term()));
            Ok(())
        })?;
        MPoly::from_terms(k, terms)
    }
}

fn alpha_factorial(alpha: &[u32]) -> Rat {
    alpha
        .iter()
        .flat_map(|&a| 1..=a as i64)
        .map(Rat::from)
        .product()
}
