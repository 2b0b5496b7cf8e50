//! Reducibility witnesses from composition factors.
//!
//! A polynomial `p = 1 + l_1 x + ... + l_t x^t` lifts to the unitary
//! polynomial `delta_p = integral(p)`, and `delta_p' = p`. If
//! `delta_p(x) = f(g(x))` then the chain rule gives `p = f'(g(x)) * g'(x)`,
//! a product of two non-constant polynomials with constant term 1. Failing
//! every split shape is only a necessary condition for irreducibility.

use std::fmt;

use crate::decompose::peel_all;
use crate::error::{Error, NoFactorReason, Result};
use crate::gammamonoid::UnitaryMono;
use crate::polycore::{Rat, UniPoly};

/// Printed with every report: how `delta_p` is normalized.
pub const LIFT_NOTE: &str = "delta_p is the antiderivative of p with delta_p(0) = 0, \
so that delta_p' = p; the coefficient of x^i in delta_p is l_{i-1}/i";

/// A polynomial with constant term 1 and degree at least 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PPoly {
    poly: UniPoly,
}

impl PPoly {
    pub fn new(poly: UniPoly) -> Result<Self> {
        if !poly.coeff(0).is_one() {
            return Err(Error::NotInP(format!("constant term of {poly} is not 1")));
        }
        if poly.degree().unwrap_or(0) == 0 {
            return Err(Error::NotInP(format!("{poly} is constant")));
        }
        Ok(PPoly { poly })
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }
}

impl fmt::Display for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// `delta_p`, the unique unitary polynomial with `delta_p' = p`.
pub fn lift_to_mono(p: &PPoly) -> UnitaryMono {
    UnitaryMono::new(p.poly.integral()).expect("antiderivative of a P polynomial is unitary")
}

/// `p = u * v` with `u = f'(g)`, `v = g'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub u: UniPoly,
    pub v: UniPoly,
    /// Degree of `g`, the inner factor behind this witness.
    pub inner_degree: usize,
}

fn witness(p: &PPoly, g: &UnitaryMono, f: &UnitaryMono) -> Result<Witness> {
    let u = f.poly().derivative().compose(g.poly());
    let v = g.poly().derivative();
    if &u * &v != p.poly {
        return Err(Error::Internal(format!(
            "chain rule witness ({u}) * ({v}) does not multiply back to {p}"
        )));
    }
    Ok(Witness {
        u,
        v,
        inner_degree: g.degree(),
    })
}

/// One chain-rule witness per successful split of `delta_p`.
pub fn reducibility_witness(p: &PPoly) -> Result<Vec<Witness>> {
    let delta = lift_to_mono(p);
    peel_all(&delta)?
        .into_iter()
        .filter_map(|(_, r)| r.ok())
        .map(|split| witness(p, &split.sigma, &split.tau))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeOutcome {
    Decomposable,
    Fails(NoFactorReason),
}

impl ShapeOutcome {
    /// Short stage label: `lambda-undefined`, `mu-check` or
    /// `middle-coefficient`.
    pub fn stage(&self) -> Option<&'static str> {
        match self {
            ShapeOutcome::Decomposable => None,
            ShapeOutcome::Fails(NoFactorReason::LambdaUndefined) => Some("lambda-undefined"),
            ShapeOutcome::Fails(NoFactorReason::LeadingCheck) => Some("mu-check"),
            ShapeOutcome::Fails(NoFactorReason::MiddleCoefficient { .. }) => {
                Some("middle-coefficient")
            }
        }
    }
}

impl fmt::Display for ShapeOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeOutcome::Decomposable => write!(f, "yes"),
            ShapeOutcome::Fails(reason) => write!(f, "no ({reason})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeResult {
    pub n: usize,
    pub m: usize,
    pub outcome: ShapeOutcome,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Reducible,
    NecessaryConditionsHold,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Reducible => write!(f, "reducible (witness found)"),
            Verdict::NecessaryConditionsHold => {
                write!(f, "necessary conditions for irreducibility hold")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrredReport {
    pub input: PPoly,
    pub lift: UnitaryMono,
    pub shape_results: Vec<ShapeResult>,
    /// Distinct witness pairs; a pair found at several shapes appears once.
    pub witnesses: Vec<Witness>,
    pub verdict: Verdict,
}

/// Runs every split shape `d = m (n + 1)` of `delta_p`, `d = deg p + 1`.
///
/// [`Verdict::NecessaryConditionsHold`] does not mean `p` is irreducible.
pub fn irreducibility_report(p: &PPoly) -> Result<IrredReport> {
    let lift = lift_to_mono(p);
    let d = lift.degree();
    let mut shape_results = Vec::new();
    let mut witnesses: Vec<Witness> = Vec::new();
    for (e, outcome) in peel_all(&lift)? {
        let outcome = match outcome {
            Ok(split) => {
                let w = witness(p, &split.sigma, &split.tau)?;
                if !witnesses.iter().any(|x| x.u == w.u && x.v == w.v) {
                    witnesses.push(w);
                }
                ShapeOutcome::Decomposable
            }
            Err(Error::NoFactor(reason)) => ShapeOutcome::Fails(reason),
            Err(other) => return Err(other),
        };
        shape_results.push(ShapeResult {
            n: e - 1,
            m: d / e,
            outcome,
        });
    }
    let verdict = if witnesses.is_empty() {
        Verdict::NecessaryConditionsHold
    } else {
        Verdict::Reducible
    };
    Ok(IrredReport {
        input: p.clone(),
        lift,
        shape_results,
        witnesses,
        verdict,
    })
}

/// Leading coefficient of `delta_p`: `l_t / (t + 1)`.
pub fn lift_leading_coeff(p: &PPoly) -> Rat {
    let t = p.poly.degree().expect("P polynomials are nonzero");
    p.poly
        .coeff(t)
        .checked_div(&Rat::from(t as i64 + 1))
        .expect("t + 1 > 0")
}
