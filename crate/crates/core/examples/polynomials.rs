// Exact polynomials: parsing, printing, composition and the monoid product.

use monodec::cli::parse_poly;
use monodec::gammamonoid::UnitaryMono;
use monodec::Rat;

pub fn run_example() -> monodec::Result<()> {
    let g = parse_poly("x + x^2")?;
    let h = parse_poly("x - 1/2*x^3")?;
    println!("g = {g}");
    println!("h = {h}");
    println!("h(g(x)) = {}", h.compose(&g));
    println!("g'(x) = {}", g.derivative());
    println!("g(3/2) = {}", g.eval(&Rat::new(3, 2)?));

    // In the monoid the left factor is the inner polynomial.
    let sigma = UnitaryMono::new(g)?;
    let tau = UnitaryMono::new(h)?;
    let prod = sigma.product(&tau);
    assert_eq!(prod.poly(), &tau.poly().compose(sigma.poly()));
    println!("sigma * tau = {prod} (degree {})", prod.degree());

    match UnitaryMono::new(parse_poly("x^2")?) {
        Err(e) => println!("x^2 is rejected: {e}"),
        Ok(_) => unreachable!("x^2 has no linear term"),
    }
    Ok(())
}

fn main() -> monodec::Result<()> {
    run_example()
}
