//! The `monodec` command line: a polynomial parser and one subcommand per
//! library operation.
//!
//! Human output prints polynomials leading term first. With `--json` every
//! command prints one object `{"command", "input", "result", "errata_notes"}`
//! where rationals are `"num/den"` strings and coefficient arrays are indexed
//! by power.
//!
//! Exit codes: 0 on success, including negative answers such as "no factor";
//! 1 on bad input; 2 when an internal invariant is violated.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::decompose::{enumerate_decompositions, peel};
use crate::error::{Error, Result};
use crate::freemonoid::factor_word;
use crate::gammamonoid::{GammaLevel, UnitaryMono};
use crate::inversion::{build_automorphism, MPoly};
use crate::irreducibility::{irreducibility_report, PPoly, LIFT_NOTE};
use crate::polycore::{Rat, UniPoly};

const LAMBDA_NOTE: &str = "the leading coefficient of the inner factor is \
lambda = m / (r_n - S), with r_n = c_{d-n}/c_d and S the weight-n multinomial sum";

/// Exponents above this are rejected by the parser.
pub const MAX_EXPONENT: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Num,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    X,
}

struct Lexer<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize, &'a str)>,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Result<Self> {
        let bytes = src.as_bytes();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let b = bytes[i];
            let tok = match b {
                b' ' | b'\t' | b'\n' | b'\r' => {
                    i += 1;
                    continue;
                }
                b'0'..=b'9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    toks.push((Tok::Num, start, &src[start..i]));
                    continue;
                }
                b'+' => Tok::Plus,
                b'-' => Tok::Minus,
                b'*' => Tok::Star,
                b'/' => Tok::Slash,
                b'^' => Tok::Caret,
                b'x' => Tok::X,
                _ => {
                    let ch = src[i..].chars().next().unwrap_or('?');
                    return Err(parse_err(i, format!("unexpected character '{ch}'")));
                }
            };
            toks.push((tok, i, &src[i..i + 1]));
            i += 1;
        }
        Ok(Lexer { src, toks, pos: 0 })
    }

    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|t| t.0)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.src.len(), |t| t.1)
    }

    fn eat(&mut self, tok: Tok) -> Option<&'a str> {
        match self.toks.get(self.pos) {
            Some(&(t, _, text)) if t == tok => {
                self.pos += 1;
                Some(text)
            }
            _ => None,
        }
    }

    fn expect_num(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let at = self.offset();
        self.eat(Tok::Num)
            .map(|text| (at, text))
            .ok_or_else(|| parse_err(at, format!("expected {what}")))
    }
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn big(text: &str) -> BigInt {
    text.parse().expect("lexer only yields digit runs")
}

/// Parses `coefficient | coefficient '*'? x ('^' e)? | x ('^' e)?`.
fn parse_term(lx: &mut Lexer<'_>) -> Result<(usize, Rat)> {
    let start = lx.offset();
    let coeff = match lx.eat(Tok::Num) {
        Some(num) => {
            let mut c = Rat::from(big(num));
            if lx.eat(Tok::Slash).is_some() {
                let (at, den) = lx.expect_num("denominator")?;
                let den = big(den);
                if den == BigInt::from(0) {
                    return Err(parse_err(at, "zero denominator"));
                }
                c = c.checked_div(&Rat::from(den))?;
            }
            if lx.eat(Tok::Star).is_some() && lx.peek() != Some(Tok::X) {
                return Err(parse_err(lx.offset(), "expected 'x' after '*'"));
            }
            Some(c)
        }
        None => None,
    };
    if lx.eat(Tok::X).is_none() {
        return match coeff {
            Some(c) => Ok((0, c)),
            None => Err(parse_err(start, "expected a term")),
        };
    }
    let mut exp = 1;
    if lx.eat(Tok::Caret).is_some() {
        let (at, text) = lx.expect_num("exponent")?;
        exp = text
            .parse::<usize>()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| parse_err(at, format!("exponent exceeds {MAX_EXPONENT}")))?;
    }
    Ok((exp, coeff.unwrap_or_else(Rat::one)))
}

/// Parses a polynomial in `x`, e.g. `"x + 2x^2 - 1/2*x^3"`. Whitespace is
/// ignored, a leading sign is allowed and repeated powers are summed. Errors
/// carry the byte offset of the offending token.
pub fn parse_poly(text: &str) -> Result<UniPoly> {
    let mut lx = Lexer::new(text)?;
    let mut coeffs: Vec<Rat> = Vec::new();
    let mut negate = lx.eat(Tok::Minus).is_some();
    if !negate {
        lx.eat(Tok::Plus);
    }
    loop {
        let (exp, c) = parse_term(&mut lx)?;
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, Rat::zero());
        }
        if negate {
            coeffs[exp] -= c;
        } else {
            coeffs[exp] += c;
        }
        match lx.peek() {
            None => break,
            Some(Tok::Plus) => negate = false,
            Some(Tok::Minus) => negate = true,
            Some(_) => return Err(parse_err(lx.offset(), "expected '+' or '-'")),
        }
        lx.pos += 1;
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

fn parse_mono(text: &str) -> Result<UnitaryMono> {
    UnitaryMono::new(parse_poly(text)?)
}

#[derive(Parser, Debug)]
#[command(
    name = "monodec",
    version,
    about = "Exact composition factors of unitary polynomials"
)]
struct Cli {
    /// Print a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Product of unitary polynomials; the first argument is innermost.
    Compose {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Every decomposition with its signature.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// The set of degree tuples of all decompositions.
    Signature {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// The split whose inner factor has the given degree.
    Peel {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        degree: usize,
    },
    /// Generator word in the free submonoid.
    FreeFactor {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Largest n with the polynomial in Gamma'_n.
    GammaLevel {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Chain-rule witnesses for a polynomial with constant term 1.
    IrreducibleCheck {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// x_j written in the primed variables, j = 1..n-1.
    InverseTable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Compose { .. } => "compose",
            Command::Decompose { .. } => "decompose",
            Command::Signature { .. } => "signature",
            Command::Peel { .. } => "peel",
            Command::FreeFactor { .. } => "free-factor",
            Command::GammaLevel { .. } => "gamma-level",
            Command::IrreducibleCheck { .. } => "irreducible-check",
            Command::InverseTable { .. } => "inverse-table",
        }
    }

    fn input(&self) -> Value {
        match self {
            Command::Compose { polys } => json!(polys),
            Command::Decompose { poly }
            | Command::Signature { poly }
            | Command::FreeFactor { poly }
            | Command::GammaLevel { poly }
            | Command::IrreducibleCheck { poly } => json!(poly),
            Command::Peel { poly, degree } => json!({ "poly": poly, "degree": degree }),
            Command::InverseTable { n, m } => json!({ "n": n, "m": m }),
        }
    }

    fn errata_notes(&self) -> Vec<&'static str> {
        match self {
            Command::Decompose { .. }
            | Command::Signature { .. }
            | Command::Peel { .. }
            | Command::InverseTable { .. } => vec![LAMBDA_NOTE],
            Command::IrreducibleCheck { .. } => vec![LIFT_NOTE],
            _ => Vec::new(),
        }
    }
}

/// What a command run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    text: String,
    result: Value,
}

fn coeffs_json(p: &UniPoly) -> Value {
    json!(p.coeffs())
}

fn poly_json(p: &UniPoly) -> Value {
    json!({ "poly": p.to_string(), "coefficients": coeffs_json(p) })
}

fn tuple(sig: &[usize]) -> String {
    let parts: Vec<String> = sig.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

fn primed(p: &MPoly) -> String {
    p.display_with(|i| format!("x'_{}", i + 1))
}

fn execute(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Compose { polys } => {
            let factors: Vec<UnitaryMono> =
                polys.iter().map(|s| parse_mono(s)).collect::<Result<_>>()?;
            let prod = UnitaryMono::product_all(&factors);
            Ok(Report {
                text: format!("{prod}\n"),
                result: poly_json(prod.poly()),
            })
        }
        Command::Decompose { poly } => {
            let delta = parse_mono(poly)?;
            let decs = enumerate_decompositions(&delta)?;
            let mut text = String::new();
            for dec in &decs {
                let factors: Vec<String> = dec.factors.iter().map(|f| format!("[{f}]")).collect();
                text += &format!("{}  {}\n", tuple(&dec.signature), factors.join(" * "));
            }
            let entries: Vec<Value> = decs
                .iter()
                .map(|dec| {
                    json!({
                        "signature": dec.signature,
                        "factors": dec.factors.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(Report {
                text,
                result: json!({ "decompositions": entries }),
            })
        }
        Command::Signature { poly } => {
            let delta = parse_mono(poly)?;
            let decs = enumerate_decompositions(&delta)?;
            let sigs: Vec<&Vec<usize>> = decs.iter().map(|d| &d.signature).collect();
            let text: String = sigs.iter().map(|s| tuple(s) + "\n").collect();
            Ok(Report {
                text,
                result: json!({ "signatures": sigs }),
            })
        }
        Command::Peel { poly, degree } => {
            let delta = parse_mono(poly)?;
            match peel(&delta, *degree) {
                Ok(split) => Ok(Report {
                    text: format!("sigma = {}\ntau = {}\n", split.sigma, split.tau),
                    result: json!({
                        "found": true,
                        "sigma": poly_json(split.sigma.poly()),
                        "tau": poly_json(split.tau.poly()),
                        "n": split.ratio.n,
                        "m": split.tau.degree(),
                        "lambda": split.ratio.lambda,
                        "a": split.ratio.a,
                        "mu": split.mu,
                    }),
                }),
                Err(Error::NoFactor(reason)) => Ok(Report {
                    text: format!("no factor ({reason})\n"),
                    result: json!({ "found": false, "reason": reason.to_string() }),
                }),
                Err(e) => Err(e),
            }
        }
        Command::FreeFactor { poly } => {
            let f = parse_mono(poly)?;
            match factor_word(&f) {
                Ok(word) => {
                    let parts: Vec<String> = word.iter().map(ToString::to_string).collect();
                    let text = if word.is_empty() {
                        "empty word\n".to_string()
                    } else {
                        parts.join(" * ") + "\n"
                    };
                    Ok(Report {
                        text,
                        result: json!({ "in_m": true, "word": word }),
                    })
                }
                Err(Error::NotInFreeMonoid(stage)) => Ok(Report {
                    text: format!("not in M ({stage})\n"),
                    result: json!({ "in_m": false, "stage": stage.to_string() }),
                }),
                Err(e) => Err(e),
            }
        }
        Command::GammaLevel { poly } => {
            let f = parse_mono(poly)?;
            let level = f.gamma_level();
            let value = match level {
                GammaLevel::Unbounded => json!("unbounded"),
                GammaLevel::Level(n) => json!(n),
            };
            Ok(Report {
                text: format!("{level}\n"),
                result: json!({ "level": value }),
            })
        }
        Command::IrreducibleCheck { poly } => {
            let p = PPoly::new(parse_poly(poly)?)?;
            let report = irreducibility_report(&p)?;
            let mut text = format!("lift: {}\n", report.lift);
            for s in &report.shape_results {
                text += &format!("shape (n={}, m={}): {}\n", s.n, s.m, s.outcome);
            }
            for w in &report.witnesses {
                text += &format!("witness: ({}) * ({})\n", w.u, w.v);
            }
            text += &format!("verdict: {}\n", report.verdict);
            let shapes: Vec<Value> = report
                .shape_results
                .iter()
                .map(|s| {
                    json!({
                        "n": s.n,
                        "m": s.m,
                        "decomposable": s.outcome.stage().is_none(),
                        "stage": s.outcome.stage(),
                    })
                })
                .collect();
            let witnesses: Vec<Value> = report
                .witnesses
                .iter()
                .map(|w| json!({ "u": poly_json(&w.u), "v": poly_json(&w.v) }))
                .collect();
            Ok(Report {
                text,
                result: json!({
                    "lift": poly_json(report.lift.poly()),
                    "shape_results": shapes,
                    "witnesses": witnesses,
                    "verdict": report.verdict.to_string(),
                }),
            })
        }
        Command::InverseTable { n, m } => {
            let s = build_automorphism(*n, *m)?;
            let rows: Vec<MPoly> = (1..*n)
                .map(|j| s.inverse_expansion(j))
                .collect::<Result<_>>()?;
            let text: String = rows
                .iter()
                .enumerate()
                .map(|(i, p)| format!("x_{} = {}\n", i + 1, primed(p)))
                .collect();
            let entries: Vec<Value> = rows
                .iter()
                .enumerate()
                .map(|(i, p)| json!({ "j": i + 1, "poly": primed(p) }))
                .collect();
            Ok(Report {
                text,
                result: json!({ "expansions": entries }),
            })
        }
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    let cmd = &cli.command;
    match execute(cmd) {
        Ok(report) => {
            let stdout = if cli.json {
                let doc = json!({
                    "command": cmd.name(),
                    "input": cmd.input(),
                    "result": report.result,
                    "errata_notes": cmd.errata_notes(),
                });
                serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n"
            } else {
                report.text
            };
            Outcome {
                code: 0,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: if e.is_internal() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
