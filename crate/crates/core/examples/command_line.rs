// Driving the command line in-process, including JSON output.

use monodec::cli::run;

pub fn run_example() -> Result<(), String> {
    let commands: [&[&str]; 4] = [
        &["monodec", "peel", "x + 2x^2 + 2x^3 + x^4", "--degree", "2"],
        &["monodec", "signature", "x + x^5"],
        &["monodec", "--json", "gamma-level", "x + x^4 - 2x^7"],
        &["monodec", "decompose", "x^2"],
    ];
    for args in commands {
        let out = run(args.iter().copied());
        println!("$ {}", args[1..].join(" "));
        print!("{}{}", out.stdout, out.stderr);
        println!("(exit {})", out.code);
    }
    let out = run(["monodec", "inverse-table", "--n", "3", "--m", "2"]);
    if out.code != 0 {
        return Err(out.stderr);
    }
    print!("{}", out.stdout);
    Ok(())
}

fn main() -> Result<(), String> {
    run_example()
}
