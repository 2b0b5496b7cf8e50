// All ordered factorizations of a unitary polynomial and their signatures.

use monodec::decompose::{enumerate_decompositions, signature_set};
use monodec::gammamonoid::UnitaryMono;
use monodec::UniPoly;

pub fn run_example() -> monodec::Result<()> {
    let g = UnitaryMono::new(UniPoly::from_ints(&[0, 1, 1]))?;
    let delta = UnitaryMono::product_all([&g, &g, &g]);
    println!("delta = {delta}");
    for dec in enumerate_decompositions(&delta)? {
        let factors: Vec<String> = dec.factors.iter().map(|f| format!("[{f}]")).collect();
        println!("  {:?}: {}", dec.signature, factors.join(" * "));
    }

    // A prime degree admits only the trivial decomposition.
    let prime = UnitaryMono::new(UniPoly::from_ints(&[0, 1, 0, 0, 0, 1]))?;
    println!("signatures of {prime}: {:?}", signature_set(&prime)?);
    Ok(())
}

fn main() -> monodec::Result<()> {
    run_example()
}
