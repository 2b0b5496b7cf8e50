// Unique generator words in the free submonoid.

use monodec::cli::parse_poly;
use monodec::freemonoid::{factor_word, word_product, Generator};
use monodec::gammamonoid::UnitaryMono;
use monodec::Rat;

pub fn run_example() -> monodec::Result<()> {
    let word = vec![
        Generator::new(1, Rat::new(-2, 3)?)?,
        Generator::new(3, Rat::from(5))?,
        Generator::new(2, Rat::new(1, 4)?)?,
    ];
    let f = word_product(&word);
    println!(
        "product of {} generators has degree {}",
        word.len(),
        f.degree()
    );
    let back = factor_word(&f)?;
    let shown: Vec<String> = back.iter().map(ToString::to_string).collect();
    println!("recovered word: {}", shown.join(" * "));
    assert_eq!(back, word);

    let outside = UnitaryMono::new(parse_poly("x + x^2 + x^4")?)?;
    match factor_word(&outside) {
        Err(e) => println!("{outside}: {e}"),
        Ok(w) => unreachable!("unexpected word of length {}", w.len()),
    }
    Ok(())
}

fn main() -> monodec::Result<()> {
    run_example()
}
