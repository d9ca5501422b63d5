//! Acceptance suite. Each criterion prints exactly one `PASS`/`FAIL` line
//! and then asserts. Lines go straight to stdout so that the test harness
//! does not swallow them. Tolerances are the constants below; nothing is
//! read from the environment.

mod common;

use std::io::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use phi_irred::certifier::{
    assemble_scaled, build_scaled_polynomial, c_coefficients, certify, verify_certificate, CertError,
    ProblemInstance, Verdict,
};
use phi_irred::hermite::{
    certify_hermite, classical_hermite, generalized_hermite, HermiteError, HermiteSpec,
};
use phi_irred::input::{parse_instance_file, InputError};
use phi_irred::oracle::{
    degree_sieve, integer_root_search, known_form_factor, SieveVerdict, Witness, DEFAULT_PRIME_BUDGET,
};
use phi_irred::polygon::{build_polygon, rightmost_slope_formula};
use phi_irred::primes::primes_in;
use phi_irred::schur::{find_schur_prime, u};
use phi_irred::suite::ones_instance;
use phi_irred::valuation::Ratio;
use phi_irred::IntPoly;

const EXAMPLE_BUDGET: Duration = Duration::from_secs(5);
const SCHUR_BUDGET: Duration = Duration::from_secs(10);
const FF_POLYNOMIALS: usize = 930;
const RANDOM_PRODUCTS: usize = 50;
const PRODUCT_SEED: u64 = 0x5eed_0010;

fn p(s: &str) -> IntPoly {
    s.parse().unwrap()
}

fn emit(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

fn report(criterion: u32, ok: bool, what: &str, detail: &str) {
    let mark = if ok { "PASS" } else { "FAIL" };
    emit(&format!("{mark} criterion {criterion}: {what} ({detail})"));
    assert!(ok, "criterion {criterion} failed: {detail}");
}

/// Certifies the all-ones family and records, per n, the verdict and replay.
fn example_family(c: u64, phi: &str, ns: &[u64]) -> (Vec<String>, bool, Duration) {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for &n in ns {
        let inst = ones_instance(c, n, phi);
        let cert = certify(&inst);
        let replay = verify_certificate(&inst, &cert);
        let good = cert.verdict == Verdict::Irreducible && replay;
        ok &= good;
        let mut note = format!("n={n} {} replay={}", cert.verdict, replay);
        if !good {
            note.push_str(&format!(" failed_k={:?}", cert.failed_k));
            for f in cert.hypotheses.failures() {
                note.push_str(&format!("; {f}"));
            }
        }
        notes.push(note);
    }
    (notes, ok, start.elapsed())
}

#[test]
fn criterion_01_example_c0() {
    let (notes, ok, t) = example_family(0, "x^3-x+37", &[2, 3, 4, 5]);
    let ok = ok && t < EXAMPLE_BUDGET;
    report(1, ok, "phi = x^3-x+37, c = 0 certified for n = 2..5", &format!("{}; {t:.2?}", notes.join(", ")));
}

#[test]
fn criterion_02_example_c2() {
    let (notes, ok, t) = example_family(2, "x^2-x+17", &[2, 3, 4]);
    let ok = ok && t < EXAMPLE_BUDGET;
    report(2, ok, "phi = x^2-x+17, c = 2 certified for n = 2..4", &format!("{}; {t:.2?}", notes.join(", ")));
}

#[test]
fn criterion_03_counterexamples() {
    let mut notes = Vec::new();

    // (a) content divisible by 3: F = phi^4 - 9.
    let phi5 = p("x^2-x+5");
    let a = ProblemInstance::new(0, 2, phi5.clone(), BigInt::one(), vec![p("-3"), IntPoly::zero()]).unwrap();
    let form = known_form_factor(&build_scaled_polynomial(&a), &phi5).expect("factored");
    let mut got = form.factors.clone();
    got.sort_by_key(|g| g.to_string());
    let mut want = vec![&phi5.pow(2) + &p("3"), &phi5.pow(2) - &p("3")];
    want.sort_by_key(|g| g.to_string());
    let ok_a = certify(&a).verdict == Verdict::HypothesisFailed && got == want;
    notes.push(format!("(a) {}", form.render()));

    // (b) content divisible by 3 and 5: F = (phi^2 + 15)^2.
    let phi11 = p("x^2-x+11");
    let b = ProblemInstance::new(2, 2, phi11.clone(), BigInt::one(), vec![p("15"), p("6")]).unwrap();
    let form = known_form_factor(&build_scaled_polynomial(&b), &phi11).expect("factored");
    let sq = &phi11.pow(2) + &p("15");
    let ok_b = certify(&b).verdict == Verdict::HypothesisFailed && form.factors == vec![sq.clone(), sq];
    notes.push(format!("(b) {}", form.render()));

    // (c) polynomial a_n: refused at parse, and 0 is a root of the polynomial.
    let cases = [
        (0u64, "x^2-x+5", "x-3", ["5x-25", "x+26"], r#"["-3","1"]"#),
        (2, "x^2-x+11", "x-15", ["x-121", "x+366"], r#"["-15","1"]"#),
    ];
    let mut ok_c = true;
    for (c, phi, top, lower, lit) in cases {
        let file = format!(
            r#"{{"schema":"phi-irred/1","c":{c},"n":2,"phi":"{phi}","a_n":{lit},"a":["{}","{}"]}}"#,
            lower[0], lower[1]
        );
        let refused = matches!(
            parse_instance_file(&file),
            Err(InputError::Cert(CertError::PolynomialLeadingCoefficient(_)))
        );
        let f = assemble_scaled(c, 2, &p(phi), &p(top), &[p(lower[0]), p(lower[1])]);
        let roots = integer_root_search(&f);
        let zero = roots.roots.contains(&BigInt::zero()) && Witness::Root(BigInt::zero()).verifies(&f);
        ok_c &= refused && zero;
        notes.push(format!("(c) c={c} refused={refused} root0={zero}"));
    }

    // (d) phi^2 - x^2 with deg phi = 3.
    let phi37 = p("x^3-x+37");
    let d = ProblemInstance::new(0, 1, phi37.clone(), BigInt::one(), vec![p("-x^2")]).unwrap();
    let form = known_form_factor(&build_scaled_polynomial(&d), &phi37).expect("factored");
    let mut got = form.factors.clone();
    got.sort_by_key(|g| g.to_string());
    let mut want = vec![&phi37 - &IntPoly::x(), &phi37 + &IntPoly::x()];
    want.sort_by_key(|g| g.to_string());
    let ok_d = got == want && Witness::Factors(got.clone()).verifies(&build_scaled_polynomial(&d));
    notes.push(format!("(d) {}", form.render()));

    report(3, ok_a && ok_b && ok_c && ok_d, "counterexample factorizations", &notes.join(", "));
}

/// Largest prime factor by trial division, independent of the library.
fn largest_prime_factor(mut m: u64) -> u64 {
    let mut best = 1;
    let mut d = 2;
    while d * d <= m {
        while m % d == 0 {
            best = d;
            m /= d;
        }
        d += 1;
    }
    best.max(m)
}

#[test]
fn criterion_04_schur_brute_force() {
    let start = Instant::now();
    let mut exceptions = Vec::new();
    let mut disagreements = 0;
    for k in 1..=10u64 {
        for n in k + 1..=500 {
            let w = find_schur_prime(n, k).unwrap();
            let brute = (0..k).any(|i| largest_prime_factor(2 * n + 1 + 2 * i) > 2 * k + 1);
            if w.is_some() != brute || w.is_some_and(|w| !w.is_valid(n, k)) {
                disagreements += 1;
            }
            if w.is_none() {
                exceptions.push((k, 2 * n + 1));
            }
        }
    }
    let mut expected: Vec<(u64, u64)> = [9u64, 27, 81, 243, 729].iter().map(|&m| (1, m)).collect();
    expected.push((2, 25));
    let t = start.elapsed();
    let ok = exceptions == expected && disagreements == 0 && t < SCHUR_BUDGET;
    report(
        4,
        ok,
        "prime witness for 1 <= k <= 10, k < n <= 500",
        &format!("exceptions {exceptions:?}, {disagreements} disagreements, {t:.2?}"),
    );
}

#[test]
fn criterion_05_rabin_vs_trial_division() {
    let (bad, compared) = common::rabin_disagreements();
    report(
        5,
        bad == 0 && compared == FF_POLYNOMIALS,
        "Rabin test vs trial division, deg <= 4, p in {2,3,5}",
        &format!("{bad} disagreements over {compared} polynomials"),
    );
}

#[test]
fn criterion_06_slope_bound() {
    let mut steps_checked = 0;
    let mut bad_steps = Vec::new();
    let mut polygons_checked = 0;
    let mut bad_polygons = Vec::new();
    for c in [0u64, 2] {
        for n in 1..=30u64 {
            let cert = certify(&ones_instance(c, n, "x"));
            for step in &cert.steps {
                let Some(prime) = step.p else { continue };
                steps_checked += 1;
                let formula = rightmost_slope_formula(n, c, prime);
                if !(formula < Ratio::new(1, step.k)) || step.slope.as_ref() != Some(&formula) {
                    bad_steps.push((c, n, step.k, prime));
                }
            }

            let cs = c_coefficients(n, c);
            let mut g = IntPoly::monomial(1, 2 * n as usize);
            for (i, ci) in cs.iter().enumerate().take(2 * n as usize) {
                g = &g + &IntPoly::monomial(ci.clone(), i);
            }
            for prime in primes_in(2, 2 * n + c + 1) {
                polygons_checked += 1;
                let built = build_polygon(&g, &IntPoly::x(), prime).unwrap().rightmost_slope().unwrap();
                if built != rightmost_slope_formula(n, c, prime) {
                    bad_polygons.push((c, n, prime));
                }
            }
        }
    }
    let ok = steps_checked > 0 && bad_steps.is_empty() && bad_polygons.is_empty();
    report(
        6,
        ok,
        "recorded slopes below 1/k and formula equals built polygon",
        &format!(
            "{steps_checked} steps, {polygons_checked} polygons, bad steps {bad_steps:?}, bad polygons {bad_polygons:?}"
        ),
    );
}

/// Probabilists' Hermite polynomials from `He_(m+1) = x He_m - m He_(m-1)`.
fn hermite_by_recurrence(m: u64) -> IntPoly {
    let (mut prev, mut cur) = (IntPoly::one(), IntPoly::x());
    if m == 0 {
        return prev;
    }
    for j in 1..m {
        let next = &(&IntPoly::x() * &cur) - &prev.scale(&BigInt::from(j));
        prev = cur;
        cur = next;
    }
    cur
}

#[test]
fn criterion_07_hermite() {
    let mut failures = Vec::new();
    for m in 3..=21u64 {
        if m == 9 {
            continue;
        }
        let hc = certify_hermite(&HermiteSpec::classical(m).unwrap());
        let ok = match hc {
            Ok(hc) => {
                hc.certificate.verdict == Verdict::Irreducible
                    && hc.odd_factor == (m % 2 == 1).then(IntPoly::x)
            }
            Err(_) => false,
        };
        if !ok {
            failures.push(m);
        }
    }
    let nine = certify_hermite(&HermiteSpec::classical(9).unwrap());
    let nine_rejected = matches!(nine, Err(HermiteError::ThreePower { m: 9, u: 2 }));

    let mut spec_bad = Vec::new();
    for m in 3..=25u64 {
        let spec = HermiteSpec::classical(m).unwrap();
        let he = hermite_by_recurrence(m);
        if generalized_hermite(&spec) != he || classical_hermite(m) != he {
            spec_bad.push(m);
        }
    }
    let ok = failures.is_empty() && nine_rejected && spec_bad.is_empty();
    report(
        7,
        ok,
        "classical H_m certified for 3 <= m <= 21, m != 9; specialization for m <= 25",
        &format!("uncertified {failures:?}, m=9 rejected={nine_rejected}, specialization mismatches {spec_bad:?}"),
    );
}

#[test]
fn criterion_08_stress() {
    let inst = ones_instance(2, 13, "x");
    let cert = certify(&inst);
    let replay = verify_certificate(&inst, &cert);
    let step4 = cert.step(4).expect("k = 4 is attempted");
    for a in &step4.search_log {
        emit(&format!("      k = 4, p = {}: {}", a.p, a.outcome));
    }
    let ok = match cert.verdict {
        Verdict::Irreducible => replay,
        Verdict::Inconclusive => true,
        Verdict::HypothesisFailed => false,
    };
    report(
        8,
        ok,
        "c = 2, n = 13, phi = x reaches a verdict",
        &format!(
            "{}, failed k {:?}, replay={replay}, k = 4 log has {} entries",
            cert.verdict,
            cert.failed_k,
            step4.search_log.len()
        ),
    );
}

#[test]
fn criterion_09_u_identities() {
    let mut bad = Vec::new();
    let mut fact = BigInt::one();
    let mut j_fact = BigInt::one();
    for j in 0..=30u64 {
        if j > 0 {
            fact *= BigInt::from(2 * j - 1) * BigInt::from(2 * j);
            j_fact *= BigInt::from(j);
        }
        if u(2 * j) * (BigInt::one() << j) * &j_fact != fact {
            bad.push(j);
        }
    }
    let table: Vec<BigInt> = [0u64, 2, 4, 6].iter().map(|&j| u(j)).collect();
    let want: Vec<BigInt> = [1, 1, 3, 15].iter().map(|&v| BigInt::from(v)).collect();
    report(
        9,
        bad.is_empty() && table == want,
        "u(2j) 2^j j! = (2j)! for j <= 30 and u(0,2,4,6) = 1,1,3,15",
        &format!("mismatches {bad:?}, table {table:?}"),
    );
}

fn random_factor(rng: &mut StdRng) -> IntPoly {
    let deg = rng.gen_range(1..=4usize);
    let mut coeffs: Vec<i64> = (0..deg).map(|_| rng.gen_range(-9..=9)).collect();
    let mut lead = 0;
    while lead == 0 {
        lead = rng.gen_range(-3..=3);
    }
    coeffs.push(lead);
    IntPoly::from_i64s(&coeffs)
}

#[test]
fn criterion_10_sieve_soundness() {
    let mut rng = StdRng::seed_from_u64(PRODUCT_SEED);
    let mut false_certain = 0;
    let mut bad_witnesses = 0;
    let mut witnesses = 0;
    for _ in 0..RANDOM_PRODUCTS {
        let f = &random_factor(&mut rng) * &random_factor(&mut rng);
        match degree_sieve(&f, DEFAULT_PRIME_BUDGET) {
            SieveVerdict::IrreducibleCertain { .. } => false_certain += 1,
            SieveVerdict::ReducibleWithWitness { witness } => {
                witnesses += 1;
                if !witness.verifies(&f) {
                    bad_witnesses += 1;
                }
            }
            SieveVerdict::Inconclusive { .. } => {}
        }
        for r in integer_root_search(&f).roots {
            witnesses += 1;
            if !Witness::Root(r).verifies(&f) {
                bad_witnesses += 1;
            }
        }
    }
    report(
        10,
        false_certain == 0 && bad_witnesses == 0,
        "degree sieve never certifies a product; witnesses re-verify",
        &format!("{RANDOM_PRODUCTS} products, {false_certain} false certificates, {witnesses} witnesses, {bad_witnesses} bad"),
    );
}
