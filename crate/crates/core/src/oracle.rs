//! One-sided evidence about factorizations over `Q`, independent of the
//! certifier. Irreducibility is only ever claimed by the degree sieve, and
//! reducibility only with an explicit root or factorization that has been
//! checked by exact arithmetic before it is returned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::certifier::{build_scaled_polynomial, Certificate, ProblemInstance, Verdict};
use crate::fppoly::{distinct_degree_factor_mod_p, gcd_fp, reduce_mod_p, MAX_MODULUS};
use crate::primes::{is_prime, primes_in};
use crate::zpoly::{phi_expand, IntPoly};

pub const DEFAULT_PRIME_BUDGET: usize = 25;

/// Candidate divisors are enumerated only up to this size.
const DIVISOR_SEARCH_LIMIT: u64 = 5_000_000;

/// A reducibility witness for a specific polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Root(#[serde(with = "crate::decimal")] BigInt),
    Factors(Vec<IntPoly>),
}

impl Witness {
    /// Roots must vanish exactly; factors must be nonconstant and multiply
    /// back to `f`.
    pub fn verifies(&self, f: &IntPoly) -> bool {
        match self {
            Witness::Root(r) => f.eval(r).is_zero() && f.degree() > Some(1),
            Witness::Factors(fs) => {
                fs.len() >= 2
                    && fs.iter().all(|g| g.degree().is_some_and(|d| d >= 1))
                    && fs.iter().fold(IntPoly::one(), |acc, g| &acc * g) == *f
            }
        }
    }
}

/// Degrees of the irreducible factors of `f` modulo one prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimePattern {
    pub p: u64,
    pub degrees: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SieveVerdict {
    IrreducibleCertain {
        patterns: Vec<PrimePattern>,
    },
    ReducibleWithWitness {
        witness: Witness,
    },
    Inconclusive {
        patterns: Vec<PrimePattern>,
        /// Proper factor degrees not yet excluded.
        feasible: Vec<usize>,
    },
}

impl SieveVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            SieveVerdict::IrreducibleCertain { .. } => "IRREDUCIBLE_CERTAIN",
            SieveVerdict::ReducibleWithWitness { .. } => "REDUCIBLE_WITH_WITNESS",
            SieveVerdict::Inconclusive { .. } => "INCONCLUSIVE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSearch {
    #[serde(with = "crate::decimal::seq")]
    pub roots: Vec<BigInt>,
    /// False when the constant term was too large to enumerate every
    /// candidate divisor.
    pub exhaustive: bool,
}

fn divides_u64(a: &BigInt, d: u64) -> bool {
    a.is_multiple_of(&BigInt::from(d))
}

/// `2 max_i ceil(|a_(n-i) / a_n|^(1/i))`, which exceeds every root's modulus.
fn fujiwara_bound(g: &IntPoly) -> BigInt {
    let n = g.degree().expect("nonzero");
    let lead = g.leading().expect("nonzero").abs();
    (1..=n)
        .map(|i| {
            let ratio = g.coeff(n - i).abs().div_ceil(&lead);
            let mut r = ratio.nth_root(i as u32);
            if r.pow(i as u32) < ratio {
                r += 1u32;
            }
            r
        })
        .max()
        .unwrap_or_default()
        * 2u32
}

/// Integer roots of `f`, by testing the divisors of its constant term (and
/// 0 when the constant term vanishes). Divisors above the Fujiwara bound are
/// skipped since they cannot be roots.
pub fn integer_root_search(f: &IntPoly) -> RootSearch {
    let mut roots = Vec::new();
    let mut g = f.clone();
    if g.is_zero() || g.degree() == Some(0) {
        return RootSearch { roots, exhaustive: true };
    }
    if g.constant_term().is_zero() {
        roots.push(BigInt::zero());
        let shift = g.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
        g = IntPoly::new(g.coeffs()[shift..].to_vec());
    }
    let a0 = g.constant_term().abs();
    if g.degree() == Some(0) {
        return RootSearch { roots, exhaustive: true };
    }
    let bound = std::cmp::min(fujiwara_bound(&g), a0.clone());
    let (limit, exhaustive) = match bound.to_u64() {
        Some(b) if b <= DIVISOR_SEARCH_LIMIT => (b, true),
        _ => (DIVISOR_SEARCH_LIMIT, false),
    };
    for d in 1..=limit {
        if !divides_u64(&a0, d) {
            continue;
        }
        for r in [BigInt::from(d), -BigInt::from(d)] {
            if g.eval(&r).is_zero() {
                roots.push(r);
            }
        }
    }
    roots.sort();
    RootSearch { roots, exhaustive }
}

/// Bitset of subset sums of `degrees`, restricted to `0..=max`.
fn subset_sums(degrees: &[usize], max: usize) -> Vec<u64> {
    let words = max / 64 + 1;
    let mut bits = vec![0u64; words];
    bits[0] = 1;
    for &d in degrees {
        let (ws, bs) = (d / 64, d % 64);
        for w in (0..words).rev() {
            let mut shifted = 0u64;
            if w >= ws {
                shifted |= bits[w - ws] << bs;
                if bs > 0 && w > ws {
                    shifted |= bits[w - ws - 1] >> (64 - bs);
                }
            }
            bits[w] |= shifted;
        }
    }
    let spare = words * 64 - (max + 1);
    if spare > 0 {
        bits[words - 1] &= u64::MAX >> spare;
    }
    bits
}

fn bit(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

/// Excludes factor degrees of `f` over `Q` by intersecting subset sums of the
/// factor-degree multisets modulo up to `prime_budget` good primes (those
/// not dividing the leading coefficient, with `f` squarefree mod `p`).
pub fn degree_sieve(f: &IntPoly, prime_budget: usize) -> SieveVerdict {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => {
            return SieveVerdict::Inconclusive {
                patterns: Vec::new(),
                feasible: Vec::new(),
            }
        }
    };
    let g = f.primitive_part();
    let lead = g.leading().expect("nonzero").clone();
    let mut feasible: Vec<usize> = (1..n).collect();
    let mut patterns = Vec::new();
    let mut tried = 0usize;
    for p in primes_in(2, MAX_MODULUS) {
        if feasible.is_empty() || patterns.len() >= prime_budget || tried >= 40 * prime_budget.max(1) {
            break;
        }
        tried += 1;
        if divides_u64(&lead, p) {
            continue;
        }
        let gp = reduce_mod_p(&g, p).expect("prime modulus");
        let squarefree = gcd_fp(&gp, &gp.derivative())
            .map(|h| h.degree() == Some(0))
            .unwrap_or(false);
        if !squarefree {
            continue;
        }
        let degrees: Vec<usize> = distinct_degree_factor_mod_p(&g, p)
            .expect("leading coefficient is a unit")
            .into_iter()
            .flat_map(|(d, count)| std::iter::repeat(d).take(count))
            .collect();
        let sums = subset_sums(&degrees, n);
        feasible.retain(|&d| bit(&sums, d));
        patterns.push(PrimePattern { p, degrees });
    }
    if feasible.is_empty() {
        SieveVerdict::IrreducibleCertain { patterns }
    } else {
        SieveVerdict::Inconclusive { patterns, feasible }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormKind {
    /// `(a phi^t)^2 - s^2 = (a phi^t - s)(a phi^t + s)`
    DifferenceOfSquares,
    /// `(a phi^t + s)^2`
    PerfectSquare,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnownForm {
    pub kind: FormKind,
    pub t: usize,
    /// Factors as phi-polynomials `a phi^t + s`, rendered with `phi`.
    pub phi_factors: Vec<String>,
    pub factors: Vec<IntPoly>,
}

impl KnownForm {
    /// `(phi^2 - 3)(phi^2 + 3)` or `(phi^2 + 15)^2`.
    pub fn render(&self) -> String {
        match self.kind {
            FormKind::DifferenceOfSquares => self.phi_factors.concat(),
            FormKind::PerfectSquare => format!("{}^2", self.phi_factors[0]),
        }
    }
}

fn render_phi_linear(a: &IntPoly, t: usize, s: &IntPoly) -> String {
    let phi_pow = if t == 1 { "phi".to_string() } else { format!("phi^{t}") };
    let head = if *a == IntPoly::one() {
        phi_pow
    } else if a.is_constant() {
        format!("{a}{phi_pow}")
    } else {
        format!("({a})*{phi_pow}")
    };
    let negative = s.leading().is_some_and(|c| c.is_negative());
    let (op, mag) = if negative { ("-", -s) } else { ("+", s.clone()) };
    let mag = mag.to_string();
    if mag.contains(' ') {
        format!("({head} {op} ({mag}))")
    } else {
        format!("({head} {op} {mag})")
    }
}

/// Recognizes `a^2 phi^(2t) - s^2` and `(a phi^t + s)^2` in the phi-expansion
/// of `f`, where `a` and `s` are polynomials of degree below `deg phi`.
pub fn known_form_factor(f: &IntPoly, phi: &IntPoly) -> Option<KnownForm> {
    let e = phi_expand(f, phi).ok()?;
    let terms = e.terms();
    let nonzero: Vec<usize> = (0..terms.len()).filter(|&i| !terms[i].is_zero()).collect();
    let top = *nonzero.last()?;
    if top == 0 || top % 2 == 1 || terms[0].is_zero() {
        return None;
    }
    let t = top / 2;
    let phi_t = phi.pow(t as u32);
    let a = terms[top].sqrt_exact()?;
    let found = if nonzero == [0, top] {
        let s = (-&terms[0]).sqrt_exact()?;
        let lhs = &(&a * &phi_t) - &s;
        let rhs = &(&a * &phi_t) + &s;
        KnownForm {
            kind: FormKind::DifferenceOfSquares,
            t,
            phi_factors: vec![render_phi_linear(&a, t, &-&s), render_phi_linear(&a, t, &s)],
            factors: vec![lhs, rhs],
        }
    } else if nonzero == [0, t, top] {
        let s0 = terms[0].sqrt_exact()?;
        let two_a = a.scale(&BigInt::from(2));
        let s = [s0.clone(), -&s0]
            .into_iter()
            .find(|s| &two_a * s == terms[t])?;
        let g = &(&a * &phi_t) + &s;
        KnownForm {
            kind: FormKind::PerfectSquare,
            t,
            phi_factors: vec![render_phi_linear(&a, t, &s); 2],
            factors: vec![g.clone(), g],
        }
    } else {
        return None;
    };
    Witness::Factors(found.factors.clone())
        .verifies(f)
        .then_some(found)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub verdict: Verdict,
    pub roots: RootSearch,
    pub sieve: SieveVerdict,
    pub known_form: Option<KnownForm>,
    /// First verified reducibility witness, if any.
    pub witness: Option<Witness>,
    pub contradiction: bool,
}

/// Runs every oracle on `F_c` and compares with the certificate's verdict.
pub fn cross_check(inst: &ProblemInstance, cert: &Certificate) -> CrossCheck {
    cross_check_with_budget(inst, cert, DEFAULT_PRIME_BUDGET)
}

pub fn cross_check_with_budget(inst: &ProblemInstance, cert: &Certificate, budget: usize) -> CrossCheck {
    let f = build_scaled_polynomial(inst);
    cross_check_polynomial(&f, inst.phi(), cert.verdict, budget)
}

/// The same comparison for an arbitrary polynomial and claimed verdict.
pub fn cross_check_polynomial(f: &IntPoly, phi: &IntPoly, verdict: Verdict, budget: usize) -> CrossCheck {
    let roots = integer_root_search(f);
    let known_form = known_form_factor(f, phi);
    let witness = roots
        .roots
        .first()
        .map(|r| Witness::Root(r.clone()))
        .or_else(|| known_form.as_ref().map(|k| Witness::Factors(k.factors.clone())))
        .filter(|w| w.verifies(f));
    let sieve = match &witness {
        Some(w) => SieveVerdict::ReducibleWithWitness { witness: w.clone() },
        None => degree_sieve(f, budget),
    };
    let contradiction = verdict == Verdict::Irreducible && witness.is_some();
    CrossCheck {
        verdict,
        roots,
        sieve,
        known_form,
        witness,
        contradiction,
    }
}

/// Budget from `PHI_IRRED_PRIME_BUDGET`, falling back to the default.
pub fn prime_budget_from_env() -> usize {
    std::env::var("PHI_IRRED_PRIME_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&b: &usize| b > 0)
        .unwrap_or(DEFAULT_PRIME_BUDGET)
}

/// True when `p` is a usable sieve modulus.
pub fn is_sieve_prime(p: u64) -> bool {
    p < MAX_MODULUS && is_prime(p)
}
