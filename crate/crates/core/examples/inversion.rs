// The triangular automorphism behind the factor equations, its inverse,
// and closed-form factor coefficients.

use monodec::decompose::{peel, top_ratios};
use monodec::gammamonoid::UnitaryMono;
use monodec::inversion::{build_automorphism, ClosedForm, MPoly};
use monodec::UniPoly;

pub fn run_example() -> monodec::Result<()> {
    let (n, m) = (4, 3);
    let s = build_automorphism(n, m)?;
    println!(
        "s for n = {n}, m = {m} (Jacobian determinant {}):",
        s.jacobian_det()
    );
    for (i, img) in s.images().iter().enumerate() {
        println!("  s(x{}) = {img}", i + 1);
    }
    for j in 1..n {
        let xj = s.inverse_expansion(j)?;
        println!("  x{j} = {}", xj.display_with(|i| format!("x'{}", i + 1)));
    }

    let p = MPoly::var(n - 1, 0)?.mul(&MPoly::var(n - 1, 2)?)?;
    let q = s.invert(&p)?;
    assert_eq!(s.apply(&q)?, p);
    println!("s^-1(x1 x3) = {q}");

    // Closed form against the peel solver on a concrete split.
    let sigma = UnitaryMono::new(UniPoly::from_ints(&[0, 1, 2, -1, 3]))?;
    let tau = UnitaryMono::new(UniPoly::from_ints(&[0, 1, 5, 1]))?;
    let delta = sigma.product(&tau);
    let (a, lambda) = ClosedForm::new(3, 3)?.solve(&top_ratios(&delta, 3))?;
    let split = peel(&delta, 4)?;
    assert_eq!((&a, &lambda), (&split.ratio.a, &split.ratio.lambda));
    println!("closed form: a = [{}, {}], lambda = {lambda}", a[0], a[1]);
    Ok(())
}

fn main() -> monodec::Result<()> {
    run_example()
}
