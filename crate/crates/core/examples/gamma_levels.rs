// The submonoids Gamma'_n: decomposition factors stay in the level of the
// product.

use monodec::cli::parse_poly;
use monodec::decompose::enumerate_decompositions;
use monodec::gammamonoid::UnitaryMono;

pub fn run_example() -> monodec::Result<()> {
    let a = UnitaryMono::new(parse_poly("x + 2x^3")?)?;
    let b = UnitaryMono::new(parse_poly("x - x^3 + 1/3*x^5")?)?;
    let delta = a.product(&b);
    println!("{delta} has level {}", delta.gamma_level());
    for dec in enumerate_decompositions(&delta)? {
        for f in &dec.factors {
            println!("  factor {f}: level {}", f.gamma_level());
            assert!(f.in_level(2));
        }
    }
    println!("identity: level {}", UnitaryMono::identity().gamma_level());
    Ok(())
}

fn main() -> monodec::Result<()> {
    run_example()
}
