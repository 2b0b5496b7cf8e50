// Splitting off an inner factor of a given degree.

use monodec::cli::parse_poly;
use monodec::decompose::{peel, peel_all};
use monodec::gammamonoid::UnitaryMono;
use monodec::Error;

pub fn run_example() -> monodec::Result<()> {
    let delta = UnitaryMono::new(parse_poly("x + 2x^2 + 2x^3 + x^4")?)?;
    let split = peel(&delta, 2)?;
    println!("delta = {delta}");
    println!("  sigma = {}, tau = {}", split.sigma, split.tau);
    println!(
        "  lambda = {}, mu = {:?}",
        split.ratio.lambda,
        split.mu.iter().map(ToString::to_string).collect::<Vec<_>>()
    );
    assert_eq!(split.sigma.product(&split.tau), delta);

    // Every admissible inner degree of a degree 12 polynomial, with the
    // reason a shape fails.
    let sigma = UnitaryMono::new(parse_poly("x + 3x^2 - x^3")?)?;
    let tau = UnitaryMono::new(parse_poly("x + 1/2*x^2 + x^4")?)?;
    let delta = sigma.product(&tau);
    for (e, outcome) in peel_all(&delta)? {
        match outcome {
            Ok(s) => println!("  inner degree {e}: sigma = {}", s.sigma),
            Err(Error::NoFactor(reason)) => println!("  inner degree {e}: no factor ({reason})"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

fn main() -> monodec::Result<()> {
    run_example()
}
