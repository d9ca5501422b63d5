//! Independent replay of a certificate. Coefficients are recomputed by direct
//! division of `u` values and slopes are read off freshly built polygons, so
//! the replay shares neither the closed slope formula nor the prime search
//! with [`super::certify`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{
    check_hypotheses, coverage_tiles, poly_digest, required_indices, skeleton, threshold,
    Certificate, ProblemInstance, StepRecord, Verdict, CERT_SCHEMA,
};
use crate::fppoly::is_irreducible_mod_p;
use crate::polygon::NewtonPolygon;
use crate::primes::{is_prime, primes_in};
use crate::schur::u;
use crate::valuation::{vpx, ExtendedNat, Ratio};
use crate::zpoly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub mismatches: Vec<String>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn check(&mut self, cond: bool, what: impl FnOnce() -> String) {
        if !cond {
            self.mismatches.push(what());
        }
    }
}

pub fn verify_certificate(inst: &ProblemInstance, cert: &Certificate) -> bool {
    verify_certificate_report(inst, cert).ok()
}

fn direct_coefficients(n: u64, c: u64) -> Vec<BigInt> {
    let top = u(2 * n + c);
    (0..=2 * n)
        .map(|i| {
            if i % 2 == 1 {
                BigInt::zero()
            } else {
                let (q, r) = top.div_rem(&u(i + c));
                assert!(r.is_zero(), "u(2j+c) divides u(2n+c)");
                q
            }
        })
        .collect()
}

fn direct_scaled(inst: &ProblemInstance, cs: &[BigInt]) -> IntPoly {
    let phi2 = inst.phi().pow(2);
    let mut f = IntPoly::constant(inst.a_n().clone()) * phi2.pow(inst.n() as u32);
    for (j, a) in inst.lower().iter().enumerate() {
        f = f + a.scale(&cs[2 * j]) * phi2.pow(j as u32);
    }
    f
}

/// Reasons `p` cannot serve step `k`, or `None` when it can.
fn step_obstruction(inst: &ProblemInstance, cs: &[BigInt], k: u64, p: u64) -> Option<String> {
    let pb = BigInt::from(p);
    if let Some(i) = (0..=2 * inst.n() - k).find(|&i| !cs[i as usize].is_multiple_of(&pb)) {
        return Some(format!("{p} does not divide c_{i}"));
    }
    if inst.a_n().is_multiple_of(&pb) {
        return Some(format!("{p} divides a_n"));
    }
    if vpx(&inst.lower()[0], p) != ExtendedNat::Finite(0) {
        return Some(format!("{p} divides the content of a_0(x)"));
    }
    if !is_irreducible_mod_p(inst.phi(), p).unwrap_or(false) {
        return Some(format!("phi is reducible modulo {p}"));
    }
    let slope = polygon_of(cs, p).rightmost_slope().ok()?;
    (slope >= Ratio::new(1, k)).then(|| format!("slope {slope} at {p} is not below 1/{k}"))
}

fn polygon_of(cs: &[BigInt], p: u64) -> NewtonPolygon {
    let terms: Vec<IntPoly> = cs.iter().map(|c| IntPoly::constant(c.clone())).collect();
    NewtonPolygon::from_terms(&terms, p).expect("end coefficients nonzero")
}

fn verify_step(
    inst: &ProblemInstance,
    cs: &[BigInt],
    k: u64,
    s: &StepRecord,
    r: &mut VerificationReport,
) {
    let d = inst.phi_degree();
    let window = inst.window();
    let th = threshold(inst.c(), k);
    r.check(s.k == k, || format!("step {k}: recorded k = {}", s.k));
    r.check(s.l + 1 == k, || format!("step {k}: l = {} should be k-1", s.l));
    r.check(s.threshold == th, || format!("step {k}: threshold {} should be {th}", s.threshold));
    r.check(s.bound == Ratio::new(1, k), || format!("step {k}: bound {} should be 1/{k}", s.bound));
    r.check(s.interval.lo == k * d && s.interval.hi == (k + 1) * d, || {
        format!("step {k}: interval {} is wrong", s.interval)
    });

    // The log must list the window primes in order, ending at the recorded one.
    let candidates: Vec<u64> = primes_in(th, window).collect();
    let logged: Vec<u64> = s.search_log.iter().map(|a| a.p).collect();
    r.check(candidates.starts_with(&logged), || {
        format!("step {k}: search log {logged:?} is not an ascending prefix of the window")
    });
    let rejected = match s.p {
        Some(_) => &logged[..logged.len().saturating_sub(1)],
        None => &logged[..],
    };
    for &q in rejected {
        r.check(step_obstruction(inst, cs, k, q).is_some(), || {
            format!("step {k}: prime {q} was skipped but satisfies every condition")
        });
    }

    match s.p {
        Some(p) => {
            r.check(logged.last() == Some(&p), || format!("step {k}: log does not end at {p}"));
            r.check(is_prime(p), || format!("step {k}: {p} is not prime"));
            r.check(th <= p && p < window, || {
                format!("step {k}: {p} outside [{th}, {window})")
            });
            let req = required_indices(inst.n(), k);
            r.check(s.divisibility == req, || {
                format!("step {k}: divisibility indices {:?} should be {req:?}", s.divisibility)
            });
            let pb = BigInt::from(p);
            for &i in &s.divisibility {
                let ok = cs.get(i as usize).is_some_and(|c| c.is_multiple_of(&pb));
                r.check(ok, || format!("step {k}: {p} does not divide c_{i}"));
            }
            let a_n_coprime = !inst.a_n().is_multiple_of(&pb);
            r.check(s.a_n_coprime && a_n_coprime, || format!("step {k}: {p} divides a_n"));
            let unit = vpx(&inst.lower()[0], p) == ExtendedNat::Finite(0);
            r.check(s.a0_unit && unit, || format!("step {k}: v_{p}(a_0) is not 0"));
            let irr = is_irreducible_mod_p(inst.phi(), p).unwrap_or(false);
            r.check(s.phi_irreducible && irr, || format!("step {k}: phi reducible mod {p}"));
            let polygon = polygon_of(cs, p);
            r.check(s.polygon_slopes == polygon.slopes(), || {
                format!("step {k}: polygon slopes differ from the rebuilt polygon")
            });
            let actual = polygon.rightmost_slope().ok();
            r.check(s.slope == actual, || {
                format!("step {k}: recorded slope {:?} but polygon gives {actual:?}", s.slope)
            });
            let below = s.slope.as_ref().is_some_and(|sl| *sl < Ratio::new(1, k));
            r.check(below, || format!("step {k}: slope is not strictly below 1/{k}"));
            r.check(s.pass, || format!("step {k}: has a prime but is marked failing"));
        }
        None => {
            r.check(logged == candidates, || {
                format!("step {k}: failing search did not try every window prime")
            });
            r.check(!s.pass, || format!("step {k}: no prime but marked passing"));
        }
    }
}

pub fn verify_certificate_report(inst: &ProblemInstance, cert: &Certificate) -> VerificationReport {
    let mut r = VerificationReport::default();
    r.check(cert.schema == CERT_SCHEMA, || format!("schema {:?}", cert.schema));
    r.check(cert.instance == inst.echo(), || "instance echo differs".into());
    r.check(cert.instance_digest == inst.digest(), || "instance digest differs".into());
    let hyp = check_hypotheses(inst);
    r.check(cert.hypotheses == hyp, || "hypothesis report differs on recomputation".into());
    r.check(cert.skeleton == skeleton(inst), || "proof skeleton differs".into());

    let (n, c) = (inst.n(), inst.c());
    let d = inst.phi_degree();
    let cs = direct_coefficients(n, c);
    let f = direct_scaled(inst, &cs);
    r.check(f.degree() == Some((2 * n * d) as usize), || "F has unexpected degree".into());
    r.check(cert.scaled_degree == 2 * n * d, || format!("scaled degree {}", cert.scaled_degree));
    r.check(cert.scaled_digest == poly_digest(&f), || "digest of F differs".into());

    if !hyp.input_pass() {
        r.check(cert.verdict == Verdict::HypothesisFailed, || {
            format!("hypotheses fail but verdict is {}", cert.verdict)
        });
        r.check(cert.small_degree.is_none() && cert.steps.is_empty(), || {
            "steps recorded although hypotheses fail".into()
        });
        return r;
    }

    let small_pass = match &cert.small_degree {
        None => {
            r.check(false, || "small-degree step missing".into());
            false
        }
        Some(s) => {
            let target = 2 * n - 1 + c;
            r.check(s.target == target, || format!("small step target {} should be {target}", s.target));
            r.check(s.interval.lo == 1 && s.interval.hi == d, || "small step interval is wrong".into());
            let works = |p: u64| {
                let pb = BigInt::from(p);
                is_prime(p)
                    && target % p == 0
                    && !inst.a_n().is_multiple_of(&pb)
                    && (0..n).all(|j| cs[2 * j as usize].is_multiple_of(&pb))
                    && is_irreducible_mod_p(inst.phi(), p).unwrap_or(false)
            };
            match s.p0 {
                Some(p0) => {
                    r.check(works(p0), || format!("p0 = {p0} fails a small-degree condition"));
                    r.check((2..p0).all(|q| !works(q)), || format!("a prime below {p0} also works"));
                    let want: Vec<u64> = (0..n).map(|j| 2 * j).collect();
                    r.check(s.divides_c == want, || "small step divisibility list is wrong".into());
                    r.check(s.pass && s.a_n_coprime && s.phi_irreducible, || {
                        "small step flags inconsistent".into()
                    });
                }
                None => {
                    r.check((2..=target).all(|q| !works(q)), || {
                        "small step claims no prime but one works".into()
                    });
                    r.check(!s.pass, || "small step has no prime but passes".into());
                }
            }
            s.pass
        }
    };

    r.check(cert.steps.len() as u64 == n, || format!("{} steps for n = {n}", cert.steps.len()));
    for (k, s) in (1..=n).zip(&cert.steps) {
        verify_step(inst, &cs, k, s, &mut r);
    }
    let failed: Vec<u64> = cert.steps.iter().filter(|s| !s.pass).map(|s| s.k).collect();
    r.check(cert.failed_k == failed, || format!("failed_k {:?} should be {failed:?}", cert.failed_k));
    r.check(coverage_tiles(cert, n, d), || "intervals do not tile [1, (n+1) deg phi)".into());

    let expected = if hyp.pass() && small_pass && failed.is_empty() && cert.steps.len() as u64 == n {
        Verdict::Irreducible
    } else {
        Verdict::Inconclusive
    };
    r.check(cert.verdict == expected, || {
        format!("verdict {} does not follow from the steps ({expected})", cert.verdict)
    });
    r
}
