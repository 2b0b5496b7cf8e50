//! Words in the free submonoid generated by `x -> x + lambda x^{n+1}`.
//!
//! The innermost generator of a product is visible in the two highest
//! nonzero terms of its polynomial, so a word is recovered one generator at
//! a time: read the head, solve for the cofactor `h` with `f = h(head)`,
//! repeat on `h`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, FreeMonoidStage, Result};
use crate::gammamonoid::UnitaryMono;
use crate::polycore::{Rat, UniPoly};

/// The generator `x -> x + lambda x^{n+1}`, `n >= 1`, `lambda != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Generator {
    pub n: usize,
    pub lambda: Rat,
}

impl Generator {
    pub fn new(n: usize, lambda: Rat) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("generator needs n >= 1".into()));
        }
        if lambda.is_zero() {
            return Err(Error::InvalidArgument("generator needs lambda != 0".into()));
        }
        Ok(Generator { n, lambda })
    }

    pub fn poly(&self) -> UniPoly {
        &UniPoly::x() + &UniPoly::monomial(self.lambda.clone(), self.n + 1)
    }

    pub fn to_mono(&self) -> UnitaryMono {
        UnitaryMono::new(self.poly()).expect("generators are unitary")
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.lambda)
    }
}

/// Left-to-right product; the first generator is the innermost polynomial.
pub fn word_product(word: &[Generator]) -> UnitaryMono {
    word.iter()
        .fold(UnitaryMono::identity(), |acc, g| acc.product(&g.to_mono()))
}

/// Reads the innermost generator and the cofactor degree `m` from the
/// leading term `L` and pre-leading term `P`: `n = deg L - deg P`,
/// `m = deg f / (n + 1)`, `lambda = m * coeff(L) / coeff(P)`.
pub fn recover_head(f: &UniPoly) -> Result<(Generator, usize)> {
    let head_err = Error::NotInFreeMonoid(FreeMonoidStage::Head);
    let ((deg_l, coeff_l), (deg_p, coeff_p)) =
        f.leading_and_preleading().map_err(|_| head_err.clone())?;
    let n = deg_l - deg_p;
    if deg_l % (n + 1) != 0 {
        return Err(head_err);
    }
    let m = deg_l / (n + 1);
    let lambda = Rat::from(m as i64) * coeff_l.checked_div(&coeff_p)?;
    Ok((Generator::new(n, lambda)?, m))
}

/// The unique `h` with `h(g(x)) = f`.
///
/// Since `g(x)^i = sum_k binom(i, k) lambda^k x^{i + n k}`, the coefficient
/// of `x^j` in `h(g(x))` involves only `h_j` and lower `h_i`, so `h` comes
/// out of a triangular solve on the low coefficients of `f`. Every higher
/// coefficient of `f` is then forced and is checked.
///
/// The solve runs over the integers: with `lambda = p / q` and `D` a common
/// denominator of `f`, substituting `x = q y` turns `g` into `q (y + c y^{n+1})`
/// with `c = p q^{n-1}`, and `D f(q y) = H(y + c y^{n+1})` for an integer
/// polynomial `H` with `H_j = D q^j h_j`.
pub fn strip_head(f: &UniPoly, g: &Generator) -> Result<UniPoly> {
    let strip_err = || Error::NotInFreeMonoid(FreeMonoidStage::Strip);
    let deg = f.degree().ok_or_else(strip_err)?;
    let (n, step) = (g.n, g.n + 1);
    if deg % step != 0 {
        return Err(strip_err());
    }
    let top = deg / step;

    let (den, nums) = f.integer_form();
    let q = g.lambda.denom();
    let c = g.lambda.numer() * q.pow(n as u32 - 1);
    let mut q_pow = BigInt::one();
    let mut scaled = Vec::with_capacity(deg + 1);
    for num in nums {
        scaled.push(num * &q_pow);
        q_pow *= q;
    }

    // acc[j] collects the contributions of the H_i found so far to y^j.
    let mut acc = vec![BigInt::zero(); deg + 1];
    let mut big_h = Vec::with_capacity(top + 1);
    for i in 0..=top {
        let hi = &scaled[i] - &acc[i];
        let mut t = hi.clone();
        for k in 1..=i {
            if t.is_zero() {
                break;
            }
            t = t * &c * BigInt::from(i - k + 1) / BigInt::from(k);
            acc[i + n * k] += &t;
        }
        big_h.push(hi);
    }
    if (top + 1..=deg).any(|j| scaled[j] != acc[j]) {
        return Err(strip_err());
    }

    let mut scale = den;
    let mut h = Vec::with_capacity(top + 1);
    for hi in big_h {
        h.push(Rat::new(hi, scale.clone())?);
        scale *= q;
    }
    let h = UniPoly::from_coeffs(h);
    UnitaryMono::new(h.clone()).map_err(|_| strip_err())?;
    Ok(h)
}

/// The unique generator word whose product is `f`, or "not in M".
pub fn factor_word(f: &UnitaryMono) -> Result<Vec<Generator>> {
    let mut word = Vec::new();
    let mut rest = f.poly().clone();
    while rest.degree() != Some(1) {
        let (head, _) = recover_head(&rest)?;
        rest = strip_head(&rest, &head)?;
        word.push(head);
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::peel;
    use proptest::prelude::*;

    fn gen(n: usize, lam: i64) -> Generator {
        Generator::new(n, Rat::from(lam)).unwrap()
    }

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn word_product_examples() {
        assert_eq!(word_product(&[gen(1, 1)]).poly(), &p(&[0, 1, 1]));
        assert_eq!(
            word_product(&[gen(1, 1), gen(2, 1)]).poly(),
            &p(&[0, 1, 1, 1, 3, 3, 1])
        );
        assert_eq!(word_product(&[]), UnitaryMono::identity());
    }

    #[test]
    fn recover_head_examples() {
        let (g, m) = recover_head(&p(&[0, 1, 1, 1, 3, 3, 1])).unwrap();
        assert_eq!((g, m), (gen(1, 1), 3));

        let lam = Rat::new(-3, 4).unwrap();
        let single = Generator::new(4, lam.clone()).unwrap();
        assert_eq!(recover_head(&single.poly()).unwrap(), (single, 1));

        assert_eq!(
            recover_head(&p(&[0, 1, 1, 0, 0, 1])),
            Err(Error::NotInFreeMonoid(FreeMonoidStage::Head))
        );
    }

    #[test]
    fn strip_head_examples() {
        let f = p(&[0, 1, 1, 1, 3, 3, 1]);
        assert_eq!(strip_head(&f, &gen(1, 1)).unwrap(), p(&[0, 1, 0, 1]));
        assert_eq!(
            strip_head(&gen(1, 1).poly(), &gen(1, 1)).unwrap(),
            UniPoly::x()
        );
        assert_eq!(
            strip_head(&p(&[0, 1, 1, 0, 1]), &gen(1, 1)),
            Err(Error::NotInFreeMonoid(FreeMonoidStage::Strip))
        );
    }

    #[test]
    fn factor_word_examples() {
        let f = UnitaryMono::new(p(&[0, 1, 1, 1, 3, 3, 1])).unwrap();
        assert_eq!(factor_word(&f).unwrap(), vec![gen(1, 1), gen(2, 1)]);
        let f = UnitaryMono::new(p(&[0, 1, 2, 2, 1])).unwrap();
        assert_eq!(factor_word(&f).unwrap(), vec![gen(1, 1), gen(1, 1)]);
        let f = UnitaryMono::new(p(&[0, 1, 1, 0, 1])).unwrap();
        assert!(matches!(factor_word(&f), Err(Error::NotInFreeMonoid(_))));
        assert!(factor_word(&UnitaryMono::identity()).unwrap().is_empty());
    }

    #[test]
    fn decomposable_but_outside_m() {
        // (x + x^2 + x^3) * (x + x^2) is a composition, but the inner factor
        // is not a generator.
        let s = UnitaryMono::new(p(&[0, 1, 1, 1])).unwrap();
        let t = UnitaryMono::new(p(&[0, 1, 1])).unwrap();
        let f = s.product(&t);
        assert!(peel(&f, 3).is_ok());
        assert!(matches!(factor_word(&f), Err(Error::NotInFreeMonoid(_))));
    }

    fn generator() -> impl Strategy<Value = Generator> {
        (1usize..=4, -5i64..=5, 1i64..=4)
            .prop_filter("nonzero", |(_, a, _)| *a != 0)
            .prop_map(|(n, a, b)| Generator::new(n, Rat::new(a, b).unwrap()).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn word_round_trip(word in prop::collection::vec(generator(), 0..=4)) {
            let f = word_product(&word);
            prop_assert_eq!(factor_word(&f).unwrap(), word);
        }

        #[test]
        fn head_is_first_generator(word in prop::collection::vec(generator(), 1..=4)) {
            let f = word_product(&word);
            let ((_, lead), (_, pre)) = f.poly().leading_and_preleading().unwrap();
            prop_assert!(!lead.is_zero() && !pre.is_zero());
            let (head, m) = recover_head(f.poly()).unwrap();
            prop_assert_eq!(m, f.degree() / (word[0].n + 1));
            prop_assert_eq!(head, word[0].clone());
        }

        #[test]
        fn consistent_with_peel(word in prop::collection::vec(generator(), 2..=3)) {
            let f = word_product(&word);
            let split = peel(&f, word[0].n + 1).unwrap();
            prop_assert_eq!(split.sigma, word[0].to_mono());
        }
    }
}
