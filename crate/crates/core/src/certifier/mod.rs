//! Hypothesis checks and Newton-polygon certificates for
//!
//! ```text
//! f_c = a_n phi^(2n) / u(2n+c) + sum_{j<n} a_j(x) phi^(2j) / u(2j+c),   c in {0, 2}
//! ```
//!
//! Irreducibility of `f_c` is certified on the scaled polynomial
//! `F_c = u(2n+c) f_c`. A certificate excludes factors of `F_c` with degree
//! in `[1, (n+1) deg phi)`:
//!
//! * `[1, deg phi)` via a prime `p0 | 2n-1+c`, which divides every lower
//!   coefficient `u(2n+c)/u(2j+c)` but not `a_n`, so modulo `p0` the
//!   polynomial is a unit times a power of the irreducible `phi`;
//! * `[k deg phi, (k+1) deg phi)` for each `k = 1..=n` via a prime `p_k`
//!   dividing every reference coefficient `c_i` with `i <= 2n-k`, coprime to
//!   `a_n` and to the content of `a_0(x)`, with `phi` irreducible mod `p_k`
//!   and the right-most slope of the reference polygon strictly below `1/k`.
//!
//! Since `deg F_c = 2n deg phi`, any nontrivial factorization has a factor
//! of degree at most `n deg phi`, which lies in one of those intervals.

mod certificate;
mod verify;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub use certificate::{
    Attempt, Certificate, Interval, SmallDegreeStep, StepRecord, Verdict, CERT_SCHEMA,
};
pub use verify::{verify_certificate, verify_certificate_report, VerificationReport};

use crate::fppoly::is_irreducible_mod_p;
use crate::polygon::{rightmost_slope_formula, NewtonPolygon};
use crate::primes::{prime_factors, primes_below, primes_in};
use crate::schur::{is_power_of_three, u_ratio};
use crate::valuation::{vpx, ExtendedNat, Ratio};
use crate::zpoly::{phi_assemble, IntPoly, PhiExpansion};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("c must be 0 or 2, got {0}")]
    BadFamily(u64),
    #[error("n must be at least 1")]
    ZeroN,
    #[error("expected {expected} lower coefficients a_0..a_(n-1), got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("phi must be monic of degree at least 1")]
    PhiNotMonic,
    #[error("a_n must be a nonzero integer")]
    ZeroLeading,
    #[error("a_0(x) must be nonzero: the content condition on a_n a_0(x) presumes it")]
    ZeroA0,
    #[error(
        "a_n must be an integer, got the polynomial {0}; with a polynomial leading \
         coefficient the statement fails (e.g. phi = x^2-x+5, a_2 = x-3, a_1 = x+26, \
         a_0 = 5(x-5) gives a polynomial with root 0)"
    )]
    PolynomialLeadingCoefficient(IntPoly),
}

/// Which primes the hypothesis checks range over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeBound {
    #[serde(with = "crate::decimal")]
    pub limit: u64,
    pub inclusive: bool,
}

impl PrimeBound {
    pub fn below(limit: u64) -> Self {
        PrimeBound {
            limit,
            inclusive: false,
        }
    }

    pub fn up_to(limit: u64) -> Self {
        PrimeBound {
            limit,
            inclusive: true,
        }
    }

    pub fn primes(&self) -> Vec<u64> {
        primes_below(if self.inclusive { self.limit + 1 } else { self.limit })
    }

    pub fn describe(&self) -> String {
        let rel = if self.inclusive { "<=" } else { "<" };
        format!("primes {rel} {}", self.limit)
    }
}

/// One application of the c = 0 or c = 2 statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemInstance {
    c: u64,
    n: u64,
    phi: IntPoly,
    a_n: BigInt,
    lower: Vec<IntPoly>,
    bound: PrimeBound,
}

impl ProblemInstance {
    /// Hypothesis primes default to `p < 2n + c`.
    pub fn new(
        c: u64,
        n: u64,
        phi: IntPoly,
        a_n: BigInt,
        lower: Vec<IntPoly>,
    ) -> Result<Self, CertError> {
        if c != 0 && c != 2 {
            return Err(CertError::BadFamily(c));
        }
        if n == 0 {
            return Err(CertError::ZeroN);
        }
        if lower.len() as u64 != n {
            return Err(CertError::LengthMismatch {
                expected: n as usize,
                got: lower.len(),
            });
        }
        if !phi.is_monic() || phi.degree() == Some(0) {
            return Err(CertError::PhiNotMonic);
        }
        if a_n.is_zero() {
            return Err(CertError::ZeroLeading);
        }
        if lower[0].is_zero() {
            return Err(CertError::ZeroA0);
        }
        Ok(ProblemInstance {
            c,
            n,
            phi,
            a_n,
            lower,
            bound: PrimeBound::below(2 * n + c),
        })
    }

    pub fn with_bound(mut self, bound: PrimeBound) -> Self {
        self.bound = bound;
        self
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn phi(&self) -> &IntPoly {
        &self.phi
    }

    pub fn a_n(&self) -> &BigInt {
        &self.a_n
    }

    pub fn lower(&self) -> &[IntPoly] {
        &self.lower
    }

    pub fn bound(&self) -> PrimeBound {
        self.bound
    }

    pub fn phi_degree(&self) -> u64 {
        self.phi.degree().expect("phi nonzero") as u64
    }

    /// Exclusive upper end of the window the certificate draws primes from.
    pub fn window(&self) -> u64 {
        2 * self.n + self.c
    }

    pub fn echo(&self) -> InstanceEcho {
        InstanceEcho {
            c: self.c,
            n: self.n,
            phi: self.phi.clone(),
            a_n: self.a_n.clone(),
            lower_coeffs: self.lower.clone(),
            hypothesis_primes: self.bound,
        }
    }

    /// Hex SHA-256 of the canonical JSON echo.
    pub fn digest(&self) -> String {
        let json = serde_json::to_vec(&self.echo()).expect("echo serializes");
        hex::encode(Sha256::digest(json))
    }
}

/// Serialized form of a [`ProblemInstance`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceEcho {
    #[serde(with = "crate::decimal")]
    pub c: u64,
    #[serde(with = "crate::decimal")]
    pub n: u64,
    pub phi: IntPoly,
    #[serde(with = "crate::decimal")]
    pub a_n: BigInt,
    pub lower_coeffs: Vec<IntPoly>,
    pub hypothesis_primes: PrimeBound,
}

impl TryFrom<InstanceEcho> for ProblemInstance {
    type Error = CertError;

    fn try_from(e: InstanceEcho) -> Result<Self, CertError> {
        Ok(ProblemInstance::new(e.c, e.n, e.phi, e.a_n, e.lower_coeffs)?.with_bound(e.hypothesis_primes))
    }
}

/// A leading coefficient as it may appear in input: an integer, or a
/// polynomial (which the statement does not allow).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeadingCoefficient {
    Integer(BigInt),
    Polynomial(IntPoly),
}

/// Accepts integer (or constant) leading coefficients and rejects genuine
/// polynomials, naming the counterexample class.
pub fn reject_polynomial_leading_coefficient(a_n: LeadingCoefficient) -> Result<BigInt, CertError> {
    match a_n {
        LeadingCoefficient::Integer(v) => Ok(v),
        LeadingCoefficient::Polynomial(f) if f.is_constant() => Ok(f.constant_term()),
        LeadingCoefficient::Polynomial(f) => Err(CertError::PolynomialLeadingCoefficient(f)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructuralKind {
    /// c = 0 needs n >= 2.
    MinimumN,
    /// c = 2 needs 2n+1 != 3^u for u >= 2.
    ThreePowerExclusion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralCheck {
    pub kind: StructuralKind,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeCheck {
    #[serde(with = "crate::decimal")]
    pub p: u64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    #[serde(with = "crate::decimal")]
    pub index: u64,
    #[serde(with = "crate::decimal::opt")]
    pub degree: Option<usize>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub bound: PrimeBound,
    pub phi_monic: bool,
    pub degree_bounds: Vec<DegreeCheck>,
    pub phi_irreducible: Vec<PrimeCheck>,
    #[serde(with = "crate::decimal")]
    pub content: BigInt,
    pub content_coprime: Vec<PrimeCheck>,
    pub structural: Vec<StructuralCheck>,
}

impl HypothesisReport {
    pub fn pass(&self) -> bool {
        self.input_pass() && self.structural.iter().all(|s| s.ok)
    }

    /// Everything except the c = 2 three-power exclusion, which limits the
    /// domain of the argument rather than the input data.
    pub fn input_pass(&self) -> bool {
        self.phi_monic
            && self.degree_bounds.iter().all(|d| d.ok)
            && self.phi_irreducible.iter().all(|c| c.ok)
            && self.content_coprime.iter().all(|c| c.ok)
            && self
                .structural
                .iter()
                .filter(|s| s.kind != StructuralKind::ThreePowerExclusion)
                .all(|s| s.ok)
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.phi_monic {
            out.push("phi is not monic".to_string());
        }
        for d in self.degree_bounds.iter().filter(|d| !d.ok) {
            out.push(format!("deg a_{}(x) is not below deg phi", d.index));
        }
        for c in self.phi_irreducible.iter().filter(|c| !c.ok) {
            out.push(format!("phi is reducible modulo {}", c.p));
        }
        for c in self.content_coprime.iter().filter(|c| !c.ok) {
            out.push(format!(
                "content of a_n a_0(x) = {} is divisible by {}",
                self.content, c.p
            ));
        }
        for s in self.structural.iter().filter(|s| !s.ok) {
            out.push(s.detail.clone());
        }
        out
    }
}

pub fn check_hypotheses(inst: &ProblemInstance) -> HypothesisReport {
    let d = inst.phi.degree();
    let degree_bounds = inst
        .lower
        .iter()
        .enumerate()
        .map(|(i, a)| DegreeCheck {
            index: i as u64,
            degree: a.degree(),
            ok: a.degree() < d,
        })
        .collect();
    let primes = inst.bound.primes();
    let phi_irreducible = primes
        .iter()
        .map(|&p| PrimeCheck {
            p,
            ok: is_irreducible_mod_p(&inst.phi, p).unwrap_or(false),
        })
        .collect();
    let content = inst.lower[0].scale(&inst.a_n).content();
    let content_coprime = primes
        .iter()
        .map(|&p| PrimeCheck {
            p,
            ok: !content.is_multiple_of(&BigInt::from(p)),
        })
        .collect();

    let mut structural = Vec::new();
    if inst.c == 0 {
        structural.push(StructuralCheck {
            kind: StructuralKind::MinimumN,
            ok: inst.n >= 2,
            detail: if inst.n >= 2 {
                format!("n = {} >= 2", inst.n)
            } else {
                "n = 1 is excluded for c = 0: phi^2 - x^2 = (phi + x)(phi - x) is reducible \
                 for every monic phi of degree >= 3"
                    .to_string()
            },
        });
    } else {
        let m = 2 * inst.n + 1;
        let three_power = is_power_of_three(m).filter(|&e| e >= 2);
        structural.push(StructuralCheck {
            kind: StructuralKind::ThreePowerExclusion,
            ok: three_power.is_none(),
            detail: match three_power {
                Some(e) => format!("2n+1 = {m} = 3^{e} is excluded for c = 2"),
                None => format!("2n+1 = {m} is not a power 3^u with u >= 2"),
            },
        });
    }

    HypothesisReport {
        bound: inst.bound,
        phi_monic: inst.phi.is_monic(),
        degree_bounds,
        phi_irreducible,
        content,
        content_coprime,
        structural,
    }
}

/// Reference coefficients `c_0..=c_2n`: `c_2j = u(2n+c)/u(2j+c)`, odd ones zero.
pub fn c_coefficients(n: u64, c: u64) -> Vec<BigInt> {
    (0..=2 * n)
        .map(|i| {
            if i % 2 == 1 {
                BigInt::zero()
            } else {
                u_ratio(2 * n + c, i + c).expect("even arguments in order")
            }
        })
        .collect()
}

/// `top phi^(2n) + sum_j c_2j a_j(x) phi^(2j)`. `top` may be a polynomial so
/// that inputs outside the statement can be replayed too.
pub fn assemble_scaled(c: u64, n: u64, phi: &IntPoly, top: &IntPoly, lower: &[IntPoly]) -> IntPoly {
    let cs = c_coefficients(n, c);
    let mut acc = top.clone();
    for j in (0..n as usize).rev() {
        let term = lower.get(j).cloned().unwrap_or_default().scale(&cs[2 * j]);
        acc = &(&(&acc * phi) * phi) + &term;
    }
    acc
}

/// `F_c = u(2n+c) f_c`, an integer polynomial of degree `2n deg phi`.
pub fn build_scaled_polynomial(inst: &ProblemInstance) -> IntPoly {
    let cs = c_coefficients(inst.n, inst.c);
    let mut terms = vec![IntPoly::zero(); 2 * inst.n as usize + 1];
    terms[2 * inst.n as usize] = IntPoly::constant(inst.a_n.clone());
    for (j, a) in inst.lower.iter().enumerate() {
        terms[2 * j] = a.scale(&cs[2 * j]);
    }
    match PhiExpansion::new(inst.phi.clone(), terms) {
        Ok(e) => phi_assemble(&e),
        // a_j with deg >= deg phi: still well defined, just not an expansion
        Err(_) => assemble_scaled(inst.c, inst.n, &inst.phi, &IntPoly::constant(inst.a_n.clone()), &inst.lower),
    }
}

pub(crate) fn poly_digest(f: &IntPoly) -> String {
    let json = serde_json::to_vec(f).expect("literal serializes");
    hex::encode(Sha256::digest(json))
}

pub(crate) fn threshold(c: u64, k: u64) -> u64 {
    if c == 0 {
        k + 1
    } else {
        k + 2
    }
}

/// Indices `i <= 2n-k` with `c_i != 0`.
pub(crate) fn required_indices(n: u64, k: u64) -> Vec<u64> {
    (0..=2 * n - k).filter(|i| i % 2 == 0).collect()
}

struct Candidate {
    divisibility: Vec<u64>,
    a_n_coprime: bool,
    a0_unit: bool,
    phi_irreducible: bool,
    slope: Ratio,
}

fn evaluate_candidate(
    inst: &ProblemInstance,
    cs: &[BigInt],
    k: u64,
    p: u64,
) -> Result<Candidate, String> {
    let pb = BigInt::from(p);
    let required = required_indices(inst.n, k);
    if let Some(&i) = required.iter().find(|&&i| !cs[i as usize].is_multiple_of(&pb)) {
        return Err(format!("does not divide c_{i} = {}", cs[i as usize]));
    }
    if inst.a_n.is_multiple_of(&pb) {
        return Err("divides a_n".into());
    }
    if vpx(&inst.lower[0], p) != ExtendedNat::Finite(0) {
        return Err("divides the content of a_0(x)".into());
    }
    if !is_irreducible_mod_p(&inst.phi, p).unwrap_or(false) {
        return Err("phi is reducible modulo p".into());
    }
    let slope = rightmost_slope_formula(inst.n, inst.c, p);
    let bound = Ratio::new(1, k);
    if slope >= bound {
        return Err(format!("right-most slope {slope} is not below {bound}"));
    }
    Ok(Candidate {
        divisibility: required,
        a_n_coprime: true,
        a0_unit: true,
        phi_irreducible: true,
        slope,
    })
}

fn reference_polygon(cs: &[BigInt], p: u64) -> NewtonPolygon {
    let terms: Vec<IntPoly> = cs.iter().map(|c| IntPoly::constant(c.clone())).collect();
    NewtonPolygon::from_terms(&terms, p).expect("c_0 and c_2n are nonzero")
}

fn small_degree_step(inst: &ProblemInstance, cs: &[BigInt]) -> SmallDegreeStep {
    let target = 2 * inst.n - 1 + inst.c;
    let d = inst.phi_degree();
    let divides_c: Vec<u64> = (0..inst.n).map(|j| 2 * j).collect();
    let p0 = prime_factors(target).into_iter().find(|&p| {
        let pb = BigInt::from(p);
        !inst.a_n.is_multiple_of(&pb)
            && divides_c.iter().all(|&i| cs[i as usize].is_multiple_of(&pb))
            && is_irreducible_mod_p(&inst.phi, p).unwrap_or(false)
    });
    SmallDegreeStep {
        target,
        p0,
        a_n_coprime: p0.is_some(),
        divides_c: if p0.is_some() { divides_c } else { Vec::new() },
        phi_irreducible: p0.is_some(),
        interval: Interval { lo: 1, hi: d },
        pass: p0.is_some(),
    }
}

fn step_for_k(inst: &ProblemInstance, cs: &[BigInt], k: u64) -> StepRecord {
    let d = inst.phi_degree();
    let th = threshold(inst.c, k);
    let mut search_log = Vec::new();
    let mut found = None;
    for p in primes_in(th, inst.window()) {
        match evaluate_candidate(inst, cs, k, p) {
            Ok(cand) => {
                search_log.push(Attempt {
                    p,
                    outcome: "accepted".into(),
                });
                found = Some((p, cand));
                break;
            }
            Err(reason) => search_log.push(Attempt { p, outcome: reason }),
        }
    }
    let bound = Ratio::new(1, k);
    let interval = Interval {
        lo: k * d,
        hi: (k + 1) * d,
    };
    match found {
        Some((p, cand)) => {
            let polygon = reference_polygon(cs, p);
            debug_assert_eq!(polygon.rightmost_slope().ok(), Some(cand.slope.clone()));
            StepRecord {
                k,
                l: k - 1,
                threshold: th,
                p: Some(p),
                divisibility: cand.divisibility,
                a_n_coprime: cand.a_n_coprime,
                a0_unit: cand.a0_unit,
                phi_irreducible: cand.phi_irreducible,
                polygon_slopes: polygon.slopes(),
                slope: Some(cand.slope),
                bound,
                interval,
                pass: true,
                search_log,
            }
        }
        None => StepRecord {
            k,
            l: k - 1,
            threshold: th,
            p: None,
            divisibility: Vec::new(),
            a_n_coprime: false,
            a0_unit: false,
            phi_irreducible: false,
            polygon_slopes: Vec::new(),
            slope: None,
            bound,
            interval,
            pass: false,
            search_log,
        },
    }
}

fn skeleton(inst: &ProblemInstance) -> Vec<String> {
    let d = inst.phi_degree();
    let (n, c) = (inst.n, inst.c);
    vec![
        format!("F = u({}) f has degree {} = 2n deg phi", 2 * n + c, 2 * n * d),
        format!(
            "a nontrivial factorization of F has a factor of degree in [1, {}]",
            n * d
        ),
        format!("small-degree step excludes degrees in [1, {d})"),
        format!("step k excludes degrees in [{d}k, {d}(k+1)) for k = 1..={n}"),
        format!("together these cover [1, {}), so F is irreducible over Q", (n + 1) * d),
    ]
}

/// Replays the argument for `inst` and records every prime, divisibility and
/// slope claim it relies on.
pub fn certify(inst: &ProblemInstance) -> Certificate {
    let hypotheses = check_hypotheses(inst);
    let f = build_scaled_polynomial(inst);
    let mut cert = Certificate {
        schema: CERT_SCHEMA.to_string(),
        instance: inst.echo(),
        instance_digest: inst.digest(),
        hypotheses,
        scaled_degree: f.degree().unwrap_or(0) as u64,
        scaled_digest: poly_digest(&f),
        small_degree: None,
        steps: Vec::new(),
        failed_k: Vec::new(),
        skeleton: skeleton(inst),
        verdict: Verdict::HypothesisFailed,
    };
    if !cert.hypotheses.input_pass() {
        return cert;
    }
    let cs = c_coefficients(inst.n, inst.c);
    let small = small_degree_step(inst, &cs);
    let steps: Vec<StepRecord> = (1..=inst.n).map(|k| step_for_k(inst, &cs, k)).collect();
    cert.failed_k = steps.iter().filter(|s| !s.pass).map(|s| s.k).collect();
    cert.verdict = if cert.hypotheses.pass() && small.pass && cert.failed_k.is_empty() {
        Verdict::Irreducible
    } else {
        Verdict::Inconclusive
    };
    cert.small_degree = Some(small);
    cert.steps = steps;
    cert
}

/// True when the pieces, skipping empty ones, tile `[1, (n+1) d)` in order.
pub fn coverage_tiles(cert: &Certificate, n: u64, d: u64) -> bool {
    let mut pieces: Vec<Interval> = Vec::new();
    if let Some(s) = &cert.small_degree {
        pieces.push(s.interval);
    }
    pieces.extend(cert.steps.iter().map(|s| s.interval));
    let mut at = 1;
    for iv in pieces.into_iter().filter(|iv| iv.lo < iv.hi) {
        if iv.lo != at {
            return false;
        }
        at = iv.hi;
    }
    at == (n + 1) * d
}

/// Absolute content of `F_c`.
pub fn scaled_content(inst: &ProblemInstance) -> BigInt {
    build_scaled_polynomial(inst).content().abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    fn ones(c: u64, n: u64, phi: &str) -> ProblemInstance {
        ProblemInstance::new(c, n, p(phi), BigInt::from(1), vec![IntPoly::one(); n as usize]).unwrap()
    }

    #[test]
    fn c_coefficient_examples() {
        let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(c_coefficients(2, 0), b(&[3, 0, 3, 0, 1]));
        assert_eq!(c_coefficients(2, 2), b(&[15, 0, 5, 0, 1]));
        assert_eq!(c_coefficients(1, 0), b(&[1, 0, 1]));
    }

    #[test]
    fn scaled_polynomial_examples() {
        assert_eq!(build_scaled_polynomial(&ones(0, 2, "x")), p("x^4+3x^2+3"));
        assert_eq!(build_scaled_polynomial(&ones(2, 2, "x")), p("x^4+5x^2+15"));
        let phi = p("x^2-x+11");
        let inst = ProblemInstance::new(
            2,
            2,
            phi.clone(),
            BigInt::from(1),
            vec![IntPoly::constant(15), IntPoly::constant(6)],
        )
        .unwrap();
        let want = (&phi.pow(2) + &IntPoly::constant(15)).pow(2);
        assert_eq!(build_scaled_polynomial(&inst), want);
    }

    #[test]
    fn hypothesis_examples() {
        let r = check_hypotheses(&ones(0, 5, "x^3-x+37"));
        assert!(r.pass());
        assert_eq!(r.phi_irreducible.iter().map(|c| c.p).collect::<Vec<_>>(), vec![2, 3, 5, 7]);

        let inst = ProblemInstance::new(
            0,
            2,
            p("x^2-x+5"),
            BigInt::from(1),
            vec![IntPoly::constant(-3), IntPoly::zero()],
        )
        .unwrap();
        let r = check_hypotheses(&inst);
        assert!(!r.pass());
        assert_eq!(r.content, BigInt::from(3));
        assert_eq!(r.failures(), vec!["content of a_n a_0(x) = 3 is divisible by 3"]);

        let r = check_hypotheses(&ones(2, 4, "x"));
        assert!(!r.pass());
        assert!(r.input_pass());
        assert!(r.failures()[0].contains("3^2"));

        let r = check_hypotheses(&ones(0, 1, "x^3-x+37"));
        assert!(!r.input_pass());
    }

    #[test]
    fn construction_errors() {
        let one = || BigInt::from(1);
        assert_eq!(
            ProblemInstance::new(1, 2, p("x"), one(), vec![IntPoly::one(); 2]),
            Err(CertError::BadFamily(1))
        );
        assert_eq!(ProblemInstance::new(0, 0, p("x"), one(), vec![]), Err(CertError::ZeroN));
        assert!(matches!(
            ProblemInstance::new(0, 2, p("x"), one(), vec![IntPoly::one()]),
            Err(CertError::LengthMismatch { expected: 2, got: 1 })
        ));
        assert_eq!(
            ProblemInstance::new(0, 2, p("2x"), one(), vec![IntPoly::one(); 2]),
            Err(CertError::PhiNotMonic)
        );
        assert_eq!(
            ProblemInstance::new(0, 2, p("x"), BigInt::zero(), vec![IntPoly::one(); 2]),
            Err(CertError::ZeroLeading)
        );
        assert_eq!(
            ProblemInstance::new(0, 2, p("x"), one(), vec![IntPoly::zero(), IntPoly::one()]),
            Err(CertError::ZeroA0)
        );
    }

    #[test]
    fn leading_coefficient_gate() {
        let err = reject_polynomial_leading_coefficient(LeadingCoefficient::Polynomial(p("x-3")));
        assert!(matches!(err, Err(CertError::PolynomialLeadingCoefficient(_))));
        assert!(err.unwrap_err().to_string().contains("root 0"));
        assert_eq!(
            reject_polynomial_leading_coefficient(LeadingCoefficient::Integer(BigInt::from(7))),
            Ok(BigInt::from(7))
        );
        assert_eq!(
            reject_polynomial_leading_coefficient(LeadingCoefficient::Polynomial(p("-2"))),
            Ok(BigInt::from(-2))
        );
    }

    #[test]
    fn small_family_certifies() {
        let cert = certify(&ones(0, 2, "x"));
        assert_eq!(cert.verdict, Verdict::Irreducible);
        assert_eq!(cert.small_degree.as_ref().unwrap().p0, Some(3));
        assert_eq!(cert.steps.len(), 2);
        assert!(coverage_tiles(&cert, 2, 1));
        assert!(verify_certificate(&ones(0, 2, "x"), &cert));
    }

    #[test]
    fn three_power_case_is_inconclusive() {
        let cert = certify(&ones(2, 4, "x"));
        assert_eq!(cert.verdict, Verdict::Inconclusive);
        assert_eq!(cert.failed_k, vec![2]);
    }

    #[test]
    fn n1_case_fails_hypotheses() {
        let inst = ProblemInstance::new(0, 1, p("x^3-x+37"), BigInt::from(1), vec![p("-x^2")]).unwrap();
        let cert = certify(&inst);
        assert_eq!(cert.verdict, Verdict::HypothesisFailed);
        assert!(cert.steps.is_empty());
        assert!(verify_certificate(&inst, &cert));
    }
}
