//! Random inputs and independent oracles shared by the integration tests.
//!
//! The split oracle never touches the library's index sets or triangular
//! systems: it reads the inner factor off an m-th root of the top of `delta`
//! (as a power series in `1/x`), recovers the outer factor by expanding in
//! powers of the inner one, and recomposes.

#![allow(dead_code)]

use monodec::gammamonoid::UnitaryMono;
use monodec::{Rat, UniPoly};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `num / den` with `|num| <= 9`, `1 <= den <= 9`.
pub fn small_rat(rng: &mut impl Rng) -> Rat {
    Rat::new(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=9)).unwrap()
}

pub fn nonzero_rat(rng: &mut impl Rng) -> Rat {
    loop {
        let r = small_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// A random unitary polynomial of exact degree `d >= 2`.
pub fn unitary(rng: &mut impl Rng, d: usize) -> UnitaryMono {
    let mut c = vec![Rat::zero(), Rat::one()];
    for _ in 2..d {
        c.push(small_rat(rng));
    }
    c.push(nonzero_rat(rng));
    UnitaryMono::new(UniPoly::from_coeffs(c)).unwrap()
}

pub fn unitary_between(rng: &mut impl Rng, lo: usize, hi: usize) -> UnitaryMono {
    let d = rng.gen_range(lo..=hi);
    unitary(rng, d)
}

/// A random element of `Gamma'_n` of degree `1 + n t`.
pub fn gamma_element(rng: &mut impl Rng, n: usize, t: usize) -> UnitaryMono {
    let d = 1 + n * t;
    let mut c = vec![Rat::zero(); d + 1];
    c[1] = Rat::one();
    for i in 1..t {
        c[1 + n * i] = small_rat(rng);
    }
    c[d] = nonzero_rat(rng);
    UnitaryMono::new(UniPoly::from_coeffs(c)).unwrap()
}

fn binom_frac(num: &Rat, k: usize) -> Rat {
    // num (num - 1) ... (num - k + 1) / k!
    let mut out = Rat::one();
    for i in 0..k {
        out *= num - Rat::from(i as i64);
        out = out.checked_div(&Rat::from(i as i64 + 1)).unwrap();
    }
    out
}

/// `(1 + r_1 y + ... )^(1/m)` truncated to `y^len`, as `[u_1, .., u_len]`.
fn mth_root_tail(r: &[Rat], m: usize) -> Vec<Rat> {
    let len = r.len();
    let trunc = |v: Vec<Rat>| {
        let mut v = v;
        v.truncate(len + 1);
        v
    };
    let mut series_r = vec![Rat::zero()];
    series_r.extend(r.iter().cloned());
    let exponent = Rat::new(1, m as i64).unwrap();
    let mut total = vec![Rat::zero(); len + 1];
    let mut power = vec![Rat::one()];
    for k in 0..=len {
        let b = binom_frac(&exponent, k);
        for (i, c) in power.iter().enumerate() {
            total[i] += &b * c;
        }
        let next = &UniPoly::from_coeffs(power.clone()) * &UniPoly::from_coeffs(series_r.clone());
        power = trunc(next.coeffs().to_vec());
    }
    total.into_iter().skip(1).collect()
}

/// The split `delta = tau(sigma)` with `deg sigma = e_deg`, if any.
pub fn oracle_split(delta: &UniPoly, e_deg: usize) -> Option<(UniPoly, UniPoly)> {
    let d = delta.degree()?;
    if e_deg < 2 || d % e_deg != 0 || d / e_deg < 2 {
        return None;
    }
    let (n, m) = (e_deg - 1, d / e_deg);
    let cd = delta.coeff(d);
    let r: Vec<Rat> = (1..=n)
        .map(|j| delta.coeff(d - j).checked_div(&cd).unwrap())
        .collect();
    // sigma = lambda x^{n+1} (1 + u_1/x + ... + u_n/x^n) with u_n = 1/lambda.
    let u = mth_root_tail(&r, m);
    if u[n - 1].is_zero() {
        return None;
    }
    let lambda = u[n - 1].recip().unwrap();
    let mut sc = vec![Rat::zero(); n + 2];
    sc[n + 1] = lambda.clone();
    for k in 1..=n {
        sc[n + 1 - k] = &lambda * &u[k - 1];
    }
    let sigma = UniPoly::from_coeffs(sc);

    let mut rest = delta.clone();
    let mut tc = vec![Rat::zero(); m + 1];
    for i in (0..=m).rev() {
        let ti = rest
            .coeff(i * e_deg)
            .checked_div(&lambda.pow(i as u32))
            .unwrap();
        rest = &rest - &sigma.pow(i as u32).scale(&ti);
        tc[i] = ti;
    }
    if !rest.is_zero() {
        return None;
    }
    let tau = UniPoly::from_coeffs(tc);
    if tau.coeff(0) != Rat::zero() || tau.coeff(1) != Rat::one() || tau.degree() != Some(m) {
        return None;
    }
    (tau.compose(&sigma) == *delta).then_some((sigma, tau))
}

/// Every ordered factorization of `delta`, found with [`oracle_split`].
pub fn oracle_decompositions(delta: &UniPoly) -> Vec<Vec<UniPoly>> {
    let d = delta.degree().unwrap();
    let mut out = vec![vec![delta.clone()]];
    for e in 2..=d / 2 {
        if let Some((sigma, tau)) = oracle_split(delta, e) {
            for tail in oracle_decompositions(&tau) {
                let mut f = vec![sigma.clone()];
                f.extend(tail);
                out.push(f);
            }
        }
    }
    out
}
