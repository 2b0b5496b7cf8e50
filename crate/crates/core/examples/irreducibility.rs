// Chain-rule divisors of polynomials with constant term 1.

use monodec::cli::parse_poly;
use monodec::irreducibility::{irreducibility_report, PPoly};

pub fn run_example() -> monodec::Result<()> {
    for text in ["1 + 4x + 6x^2 + 4x^3", "1 + 4x + 9x^2 + 4x^3", "1 + 5x^4"] {
        let p = PPoly::new(parse_poly(text)?)?;
        let report = irreducibility_report(&p)?;
        println!("p = {p}, lift = {}", report.lift);
        for s in &report.shape_results {
            println!("  shape (n={}, m={}): {}", s.n, s.m, s.outcome);
        }
        for w in &report.witnesses {
            println!("  p = ({}) * ({})", w.u, w.v);
        }
        println!("  verdict: {}", report.verdict);
    }
    Ok(())
}

fn main() -> monodec::Result<()> {
    run_example()
}
