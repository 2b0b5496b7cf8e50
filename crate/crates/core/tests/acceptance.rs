//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. All comparisons are exact.

mod common;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{
    gamma_element, nonzero_rat, oracle_decompositions, oracle_split, rng, unitary, unitary_between,
};
use monodec::cli::{parse_poly, run};
use monodec::decompose::{enumerate_decompositions, peel, top_ratios};
use monodec::freemonoid::{factor_word, word_product, Generator};
use monodec::gammamonoid::{GammaLevel, UnitaryMono};
use monodec::inversion::{build_automorphism, ClosedForm, MPoly};
use monodec::irreducibility::{irreducibility_report, reducibility_witness, PPoly, Verdict};
use monodec::{Error, NoFactorReason, Rat, UniPoly};
use rand::Rng;
use serde_json::Value;

fn ints(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c)
}

fn mono(c: &[i64]) -> UnitaryMono {
    UnitaryMono::new(ints(c)).unwrap()
}

fn peel_round_trip() -> String {
    let mut rng = rng(1);
    let start = Instant::now();
    for _ in 0..200 {
        let sigma = unitary_between(&mut rng, 2, 7);
        let tau = unitary_between(&mut rng, 2, 7);
        let split = peel(&sigma.product(&tau), sigma.degree()).unwrap();
        assert_eq!(split.sigma, sigma);
        assert_eq!(split.tau, tau);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    format!("200 pairs in {:.2}s", elapsed.as_secs_f64())
}

fn as_polys(factors: &[UnitaryMono]) -> Vec<UniPoly> {
    factors.iter().map(|f| f.poly().clone()).collect()
}

fn signature_bijection() -> String {
    let mut rng = rng(2);
    let mut total = 0;
    for _ in 0..50 {
        let degrees: Vec<usize> = loop {
            let k = rng.gen_range(2..=4);
            let ds: Vec<usize> = (0..k).map(|_| rng.gen_range(2..=6)).collect();
            if ds.iter().product::<usize>() <= 36 {
                break ds;
            }
        };
        let factors: Vec<UnitaryMono> = degrees.iter().map(|&d| unitary(&mut rng, d)).collect();
        let delta = UnitaryMono::product_all(&factors);
        let decs = enumerate_decompositions(&delta).unwrap();
        total += decs.len();

        let tuples: HashSet<Vec<UniPoly>> = decs.iter().map(|d| as_polys(&d.factors)).collect();
        let sigs: BTreeSet<&Vec<usize>> = decs.iter().map(|d| &d.signature).collect();
        assert_eq!(tuples.len(), decs.len(), "repeated decomposition");
        assert_eq!(sigs.len(), decs.len(), "repeated signature");
        for dec in &decs {
            assert!(dec.factors.iter().all(|f| !f.is_identity()));
            assert_eq!(dec.product(), delta);
        }
        // The generating factorization is the one with its signature.
        let mine = decs
            .iter()
            .find(|d| d.signature == degrees)
            .expect("own signature");
        assert_eq!(mine.factors, factors);
        // Same set as the independent split oracle.
        let oracle: HashSet<Vec<UniPoly>> =
            oracle_decompositions(delta.poly()).into_iter().collect();
        assert_eq!(oracle, tuples);
    }

    let g = mono(&[0, 1, 1]);
    let ggg = g.product(&g).product(&g);
    let sigs: BTreeSet<Vec<usize>> = enumerate_decompositions(&ggg)
        .unwrap()
        .into_iter()
        .map(|d| d.signature)
        .collect();
    let expect: BTreeSet<Vec<usize>> = [vec![8], vec![2, 4], vec![4, 2], vec![2, 2, 2]].into();
    assert_eq!(sigs, expect);
    format!("50 products, {total} decompositions; g*g*g has 4")
}

fn closed_form_matches_solver() -> String {
    let mut rng = rng(3);
    let mut cache: HashMap<(usize, usize), ClosedForm> = HashMap::new();
    for _ in 0..100 {
        let n = rng.gen_range(1..=5);
        let m = rng.gen_range(2..=5);
        let sigma = unitary(&mut rng, n + 1);
        let tau = unitary(&mut rng, m);
        let delta = sigma.product(&tau);
        let cf = cache
            .entry((n, m))
            .or_insert_with(|| ClosedForm::new(n, m).unwrap());
        let (a, lambda) = cf.solve(&top_ratios(&delta, n)).unwrap();
        let split = peel(&delta, n + 1).unwrap();
        assert_eq!(a, split.ratio.a);
        assert_eq!(lambda, split.ratio.lambda);
        let truth = sigma.ratio_form().unwrap();
        assert_eq!((a, lambda), (truth.a, truth.lambda));
    }
    let delta = mono(&[0, 1, 2, 2, 1]);
    let (_, lambda) = ClosedForm::new(1, 2)
        .unwrap()
        .solve(&top_ratios(&delta, 1))
        .unwrap();
    assert_eq!(lambda, Rat::one());
    "100 shapes with n, m <= 5; lambda = 1 on x + 2x^2 + 2x^3 + x^4".into()
}

fn random_mpoly(rng: &mut impl Rng, k: usize) -> MPoly {
    let terms: Vec<(Vec<u32>, Rat)> = (0..rng.gen_range(1..=4))
        .map(|_| {
            let deg = rng.gen_range(0..=4);
            let mut e = vec![0u32; k];
            for _ in 0..deg {
                e[rng.gen_range(0..k)] += 1;
            }
            (e, nonzero_rat(rng))
        })
        .collect();
    MPoly::from_terms(k, terms).unwrap()
}

fn inversion_formula() -> String {
    let mut rng = rng(4);
    let mut checked = 0;
    for n in 3..=6 {
        for m in 2..=5 {
            let s = build_automorphism(n, m).unwrap();
            let k = n - 1;
            assert_eq!(s.jacobian_det(), &Rat::from(m as i64).pow(k as u32));
            for j in 1..n {
                let xj = s.inverse_expansion(j).unwrap();
                assert!(xj.total_degree().unwrap_or(0) <= j, "n={n} m={m} j={j}");
            }
            for _ in 0..20 {
                let p = random_mpoly(&mut rng, k);
                assert_eq!(s.invert(&s.apply(&p).unwrap()).unwrap(), p);
                assert_eq!(s.apply(&s.invert(&p).unwrap()).unwrap(), p);
                checked += 1;
            }
        }
    }
    format!("{checked} polynomials over 16 automorphisms")
}

fn random_word(rng: &mut impl Rng) -> Vec<Generator> {
    (0..rng.gen_range(0..=5))
        .map(|_| Generator::new(rng.gen_range(1..=4), nonzero_rat(rng)).unwrap())
        .collect()
}

fn free_monoid() -> String {
    let mut rng = rng(5);
    for _ in 0..100 {
        let word = random_word(&mut rng);
        assert_eq!(factor_word(&word_product(&word)).unwrap(), word);
    }
    let mut pairs = 0;
    while pairs < 100 {
        let (u, v) = (random_word(&mut rng), random_word(&mut rng));
        if u == v {
            continue;
        }
        assert_ne!(word_product(&u), word_product(&v));
        pairs += 1;
    }
    let err = factor_word(&mono(&[0, 1, 1, 0, 1])).unwrap_err();
    assert!(matches!(err, Error::NotInFreeMonoid(_)));
    assert!(err.to_string().starts_with("not in M"));
    "100 words round-trip, 100 distinct pairs, x + x^2 + x^4 rejected".into()
}

fn gamma_closure() -> String {
    let mut rng = rng(6);
    let mut factors_seen = 0;
    for n in [2usize, 3] {
        for _ in 0..50 {
            let parts: Vec<UnitaryMono> = loop {
                let k = rng.gen_range(2..=3);
                let ts: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=2)).collect();
                if ts.iter().map(|t| 1 + n * t).product::<usize>() <= 49 {
                    break ts.iter().map(|&t| gamma_element(&mut rng, n, t)).collect();
                }
            };
            let delta = UnitaryMono::product_all(&parts);
            assert!(delta.gamma_level().contains(n));
            for dec in enumerate_decompositions(&delta).unwrap() {
                for f in &dec.factors {
                    let level = f.gamma_level();
                    assert!(
                        matches!(level, GammaLevel::Level(g) if g % n == 0),
                        "{f}: {level}"
                    );
                    assert!(f.in_level(n));
                    factors_seen += 1;
                }
            }
        }
    }
    format!("100 products, {factors_seen} factors all in their level")
}

fn middle_rigidity() -> String {
    let mut rng = rng(7);
    let mut found = 0;
    let mut perturbations = 0;
    while found < 20 {
        let e = rng.gen_range(2..=4);
        let m = rng.gen_range(2..=5);
        let (n, d) = (e - 1, e * m);
        if m + 1 >= d - n {
            continue;
        }
        found += 1;
        let sigma = unitary(&mut rng, e);
        let tau = unitary(&mut rng, m);
        let delta = sigma.product(&tau);
        let (os, ot) = oracle_split(delta.poly(), e).expect("oracle finds the true split");
        assert_eq!((&os, &ot), (sigma.poly(), tau.poly()));
        for j in (m + 1)..(d - n) {
            let mut c = delta.poly().coeffs().to_vec();
            c[j] += Rat::one();
            let bumped = UnitaryMono::new(UniPoly::from_coeffs(c)).unwrap();
            assert_eq!(
                peel(&bumped, e),
                Err(Error::NoFactor(NoFactorReason::MiddleCoefficient { j }))
            );
            assert!(oracle_split(bumped.poly(), e).is_none());
            perturbations += 1;
        }
    }
    format!("20 polynomials, {perturbations} perturbations rejected by both")
}

fn irreducibility() -> String {
    let p = PPoly::new(ints(&[1, 4, 6, 4])).unwrap();
    let w = reducibility_witness(&p).unwrap();
    assert_eq!(w.len(), 1);
    assert_eq!((&w[0].u, &w[0].v), (&ints(&[1, 2, 2]), &ints(&[1, 2])));
    assert_eq!(&w[0].u * &w[0].v, *p.poly());

    let q = PPoly::new(ints(&[1, 0, 0, 0, 5])).unwrap();
    let report = irreducibility_report(&q).unwrap();
    assert_eq!(report.verdict, Verdict::NecessaryConditionsHold);
    assert!(report.shape_results.is_empty() && report.witnesses.is_empty());

    let mut rng = rng(8);
    for _ in 0..100 {
        let sigma = unitary_between(&mut rng, 2, 5);
        let tau = unitary_between(&mut rng, 2, 5);
        let delta = sigma.product(&tau);
        let chain = &tau.poly().derivative().compose(sigma.poly()) * &sigma.poly().derivative();
        assert_eq!(delta.poly().derivative(), chain);
    }
    "witness for 1 + 4x + 6x^2 + 4x^3, verdict for 1 + 5x^4, 100 chain-rule identities".into()
}

fn json_result(args: &[&str]) -> Value {
    let out = run(args.iter().copied());
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn coeff_array(v: &Value) -> UniPoly {
    UniPoly::from_coeffs(
        v.as_array()
            .unwrap()
            .iter()
            .map(|c| {
                let (n, d) = c.as_str().unwrap().split_once('/').unwrap();
                Rat::new(n.parse::<i64>().unwrap(), d.parse::<i64>().unwrap()).unwrap()
            })
            .collect(),
    )
}

fn cli_contract() -> String {
    let out = run(["monodec", "peel", "x + 2x^2 + 2x^3 + x^4", "--degree", "2"]);
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    let sigma = lines[0].strip_prefix("sigma = ").unwrap();
    let tau = lines[1].strip_prefix("tau = ").unwrap();
    assert_eq!(parse_poly(sigma).unwrap(), parse_poly("x + x^2").unwrap());
    assert_eq!(parse_poly(tau).unwrap(), parse_poly("x + x^2").unwrap());

    let out = run(["monodec", "signature", "x + x^5"]);
    assert_eq!((out.code, out.stdout.trim()), (0, "(5)"));

    let out = run(["monodec", "decompose", "x^2"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("not unitary"));

    let delta = "x + 1/2*x^2 + 1/8*x^3 + 1/64*x^4";
    let doc = json_result(&["monodec", "--json", "peel", delta, "--degree", "2"]);
    for key in ["command", "input", "result", "errata_notes"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    let r = &doc["result"];
    for side in ["sigma", "tau"] {
        let printed = parse_poly(r[side]["poly"].as_str().unwrap()).unwrap();
        assert_eq!(printed, coeff_array(&r[side]["coefficients"]));
    }
    let s = parse_poly(r["sigma"]["poly"].as_str().unwrap()).unwrap();
    let t = parse_poly(r["tau"]["poly"].as_str().unwrap()).unwrap();
    assert_eq!(t.compose(&s), parse_poly(delta).unwrap());

    let g = "x + 2x^2 + 2x^3 + x^4";
    let doc = json_result(&["monodec", "--json", "decompose", g]);
    for dec in doc["result"]["decompositions"].as_array().unwrap() {
        let factors: Vec<UnitaryMono> = dec["factors"]
            .as_array()
            .unwrap()
            .iter()
            .map(|f| UnitaryMono::new(parse_poly(f.as_str().unwrap()).unwrap()).unwrap())
            .collect();
        let sig: Vec<usize> = factors.iter().map(UnitaryMono::degree).collect();
        assert_eq!(dec["signature"], serde_json::json!(sig));
        assert_eq!(
            UnitaryMono::product_all(&factors).poly(),
            &parse_poly(g).unwrap()
        );
    }
    "peel, signature and error examples; JSON polynomials reparse exactly".into()
}

type Criterion = (&'static str, fn() -> String);

fn main() {
    let criteria: [Criterion; 9] = [
        ("peel round-trip", peel_round_trip),
        ("signature bijection", signature_bijection),
        ("closed form equals solver", closed_form_matches_solver),
        ("inversion formula", inversion_formula),
        ("free monoid words", free_monoid),
        ("Gamma'_n closure", gamma_closure),
        ("middle-coefficient rigidity", middle_rigidity),
        ("irreducibility pipeline", irreducibility),
        ("CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.2}s)", i + 1),
            Err(payload) => {
                failed += 1;
                let msg = payload
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {}: FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
