use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::polycore::Rat;

/// Exponent vector, one entry per variable.
pub type Exponents = Vec<u32>;

/// Sparse polynomial in a fixed number of variables `x_1..x_k` over the
/// rationals. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Result<Self> {
        check_index(i, nvars)?;
        let mut e = vec![0; nvars];
        e[i] = 1;
        Ok(Self::monomial(nvars, e, Rat::one()))
    }

    /// # Panics
    /// If `exps.len() != nvars`.
    pub fn monomial(nvars: usize, exps: Exponents, c: Rat) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { nvars, terms }
    }

    /// Builds from `(exponents, coefficient)` pairs, summing duplicates.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Exponents, Rat)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::VariableCountMismatch {
                    left: nvars,
                    right: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
    }

    /// Degree in a single variable; `None` for zero.
    pub fn degree_in(&self, i: usize) -> Option<usize> {
        self.terms.keys().map(|e| e[i] as usize).max()
    }

    /// Whether no stored term involves a variable with index `>= first`.
    pub fn only_uses_first(&self, first: usize) -> bool {
        self.terms
            .keys()
            .all(|e| e[first..].iter().all(|&x| x == 0))
    }

    fn add_term(&mut self, e: Exponents, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &MPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MPoly) -> Result<MPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MPoly {
        self.scale(&-Rat::one())
    }

    pub fn mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_same(other)?;
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self).expect("same variable count");
        }
        acc
    }

    /// Partial derivative with respect to the variable with 0-based index `i`.
    pub fn partial(&self, i: usize) -> Result<MPoly> {
        check_index(i, self.nvars)?;
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            let k = e2[i];
            e2[i] -= 1;
            out.add_term(e2, c * Rat::from(k as i64));
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: point.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .filter(|(&k, _)| k > 0)
                    .fold(c.clone(), |acc, (&k, v)| acc * v.pow(k))
            })
            .sum())
    }

    /// Applies the algebra map `x_i -> images[i]`.
    pub fn substitute(&self, images: &[MPoly]) -> Result<MPoly> {
        if images.len() != self.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: images.len(),
            });
        }
        let target = images.first().map_or(self.nvars, MPoly::nvars);
        for img in images {
            if img.nvars != target {
                return Err(Error::VariableCountMismatch {
                    left: target,
                    right: img.nvars,
                });
            }
        }
        let mut powers: Vec<Vec<MPoly>> = images
            .iter()
            .map(|img| vec![MPoly::one(target), img.clone()])
            .collect();
        let mut out = MPoly::zero(target);
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(&images[i])?;
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][k as usize])?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Renders with custom variable names, highest total degree first.
    pub fn display_with(&self, name: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Exponents, &Rat)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut s = String::new();
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        name(i)
                    } else {
                        format!("{}^{}", name(i), k)
                    }
                })
                .collect();
            if vars.is_empty() {
                s.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    s.push_str(&mag.to_string());
                    s.push('*');
                }
                s.push_str(&vars.join("*"));
            }
        }
        s
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(|i| format!("x{}", i + 1)))
    }
}

fn check_index(i: usize, nvars: usize) -> Result<()> {
    if i >= nvars {
        return Err(Error::IndexOutOfRange {
            index: i + 1,
            max: nvars,
        });
    }
    Ok(())
}

/// Determinant of a square matrix over the polynomial ring, by division-free
/// expansion over column subsets (`O(2^k k)` ring multiplications).
pub fn determinant(matrix: &[Vec<MPoly>], nvars: usize) -> Result<MPoly> {
    let k = matrix.len();
    if matrix.iter().any(|row| row.len() != k) {
        return Err(Error::InvalidArgument(
            "determinant of a non-square matrix".into(),
        ));
    }
    if k == 0 {
        return Ok(MPoly::one(nvars));
    }
    if k > 20 {
        return Err(Error::InvalidArgument("matrix too large".into()));
    }
    // partial[mask]: signed sum over ways to fill the first |mask| rows using
    // exactly the columns in `mask`.
    let mut partial: Vec<Option<MPoly>> = vec![None; 1 << k];
    partial[0] = Some(MPoly::one(nvars));
    for mask in 0usize..(1 << k) {
        let Some(acc) = partial[mask].take() else {
            continue;
        };
        let row = mask.count_ones() as usize;
        if row == k {
            partial[mask] = Some(acc);
            continue;
        }
        if !acc.is_zero() {
            for (col, entry) in matrix[row].iter().enumerate().take(k) {
                if mask & (1 << col) != 0 || entry.is_zero() {
                    continue;
                }
                let inversions = (mask >> (col + 1)).count_ones();
                let mut term = acc.mul(entry)?;
                if inversions % 2 == 1 {
                    term = term.neg();
                }
                let next = mask | (1 << col);
                partial[next] = Some(match partial[next].take() {
                    Some(prev) => prev.add(&term)?,
                    None => term,
                });
            }
        }
        partial[mask] = Some(acc);
    }
    Ok(partial[(1 << k) - 1]
        .take()
        .unwrap_or_else(|| MPoly::zero(nvars)))
}
