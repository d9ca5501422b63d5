//! Classical Hermite polynomials, their generalized phi-Hermite analogues
//!
//! ```text
//! H^phi_m = a_top phi^m + sum_{j=1}^{[m/2]} C(m, 2j) u(2j) a_{[m/2]-j}(x) phi^(m-2j)
//! ```
//!
//! and the reduction to a certifier instance. With `b_j = C(n, j) a_j` one has
//! `H^phi_2n = F_0` and `H^phi_(2n+1) = phi F_2`, where `F_c` is the scaled
//! polynomial of the instance `(c, n, phi, a_top, b)`.
//!
//! Bound modes: the generalized statement asks for phi irreducible modulo all
//! primes `<= m`, the composed form `H_m(phi(x))` only for primes `< m`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::certifier::{certify, CertError, Certificate, PrimeBound, ProblemInstance};
use crate::schur::{binomial_row, is_power_of_three, u};
use crate::zpoly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HermiteError {
    #[error("m must be at least 3, got {0}")]
    TooSmall(u64),
    #[error("m = {m} = 3^{u} is excluded for odd m")]
    ThreePower { m: u64, u: u32 },
    #[error("expected {expected} coefficients a_0..a_(m/2 - 1), got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("phi must be monic of degree at least 1")]
    PhiNotMonic,
    #[error("a_top must be nonzero")]
    ZeroTop,
    #[error("deg a_{0}(x) must be below deg phi")]
    DegreeBound(usize),
    #[error(transparent)]
    Cert(#[from] CertError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteSpec {
    m: u64,
    phi: IntPoly,
    a_top: BigInt,
    a_low: Vec<IntPoly>,
}

impl HermiteSpec {
    pub fn new(m: u64, phi: IntPoly, a_top: BigInt, a_low: Vec<IntPoly>) -> Result<Self, HermiteError> {
        if m < 3 {
            return Err(HermiteError::TooSmall(m));
        }
        let n = (m / 2) as usize;
        if a_low.len() != n {
            return Err(HermiteError::LengthMismatch {
                expected: n,
                got: a_low.len(),
            });
        }
        if !phi.is_monic() || phi.degree() == Some(0) {
            return Err(HermiteError::PhiNotMonic);
        }
        if a_top.is_zero() {
            return Err(HermiteError::ZeroTop);
        }
        if let Some(i) = a_low.iter().position(|a| a.degree() >= phi.degree()) {
            return Err(HermiteError::DegreeBound(i));
        }
        Ok(HermiteSpec { m, phi, a_top, a_low })
    }

    /// Signs that turn `H^phi_m` into `H_m(phi(x))`: `a_top = 1` and
    /// `a_i = (-1)^([m/2] - i)`.
    pub fn classical_signs(m: u64, phi: IntPoly) -> Result<Self, HermiteError> {
        let n = m / 2;
        let a_low = (0..n).map(|i| IntPoly::constant(sign(n - i))).collect();
        HermiteSpec::new(m, phi, BigInt::one(), a_low)
    }

    /// The signs `a_top = (-1)^[m/2]`, `a_i = (-1)^i`. These give
    /// `(-1)^[m/2] H_m(phi(x))`, which agrees with `H_m(phi(x))` only for
    /// even `[m/2]`.
    pub fn alternating_signs(m: u64, phi: IntPoly) -> Result<Self, HermiteError> {
        let n = m / 2;
        let a_low = (0..n).map(|i| IntPoly::constant(sign(i))).collect();
        HermiteSpec::new(m, phi, BigInt::from(sign(n)), a_low)
    }

    /// `H_m` itself: phi = x with [`HermiteSpec::classical_signs`].
    pub fn classical(m: u64) -> Result<Self, HermiteError> {
        Self::classical_signs(m, IntPoly::x())
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn phi(&self) -> &IntPoly {
        &self.phi
    }

    pub fn a_top(&self) -> &BigInt {
        &self.a_top
    }

    pub fn a_low(&self) -> &[IntPoly] {
        &self.a_low
    }
}

fn sign(e: u64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `H_m(x) = sum_j (-1)^j C(m, 2j) u(2j) x^(m-2j)`.
pub fn classical_hermite(m: u64) -> IntPoly {
    let row = binomial_row(m);
    let mut coeffs = vec![BigInt::zero(); m as usize + 1];
    for j in 0..=m / 2 {
        let c = &row[2 * j as usize] * u(2 * j) * sign(j);
        coeffs[(m - 2 * j) as usize] = c;
    }
    IntPoly::new(coeffs)
}

pub fn generalized_hermite(spec: &HermiteSpec) -> IntPoly {
    let (m, n) = (spec.m, spec.m / 2);
    let row = binomial_row(m);
    let mut h = IntPoly::constant(spec.a_top.clone()) * spec.phi.pow(m as u32);
    for j in 1..=n {
        let c = &row[2 * j as usize] * u(2 * j);
        let a = spec.a_low[(n - j) as usize].scale(&c);
        h = h + a * spec.phi.pow((m - 2 * j) as u32);
    }
    h
}

/// Output of [`hermite_to_instance`]: for odd `m`, `H^phi_m = odd_factor F_2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteReduction {
    pub instance: ProblemInstance,
    pub odd_factor: Option<IntPoly>,
}

/// Hypothesis primes are `<= m`.
pub fn hermite_to_instance(spec: &HermiteSpec) -> Result<HermiteReduction, HermiteError> {
    reduce(spec, PrimeBound::up_to(spec.m))
}

fn reduce(spec: &HermiteSpec, bound: PrimeBound) -> Result<HermiteReduction, HermiteError> {
    let m = spec.m;
    if m % 2 == 1 {
        if let Some(e) = is_power_of_three(m).filter(|&e| e >= 2) {
            return Err(HermiteError::ThreePower { m, u: e });
        }
    }
    let n = m / 2;
    let row = binomial_row(n);
    let b: Vec<IntPoly> = spec
        .a_low
        .iter()
        .zip(&row)
        .map(|(a, c)| a.scale(c))
        .collect();
    let c = if m % 2 == 0 { 0 } else { 2 };
    let instance =
        ProblemInstance::new(c, n, spec.phi.clone(), spec.a_top.clone(), b)?.with_bound(bound);
    Ok(HermiteReduction {
        instance,
        odd_factor: (c == 2).then(|| spec.phi.clone()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteCertificate {
    pub certificate: Certificate,
    pub odd_factor: Option<IntPoly>,
}

pub fn certify_hermite(spec: &HermiteSpec) -> Result<HermiteCertificate, HermiteError> {
    certify_reduction(reduce(spec, PrimeBound::up_to(spec.m))?)
}

/// `H_m(phi(x))` with hypothesis primes `< m`.
pub fn certify_composed(m: u64, phi: IntPoly) -> Result<HermiteCertificate, HermiteError> {
    let spec = HermiteSpec::classical_signs(m, phi)?;
    certify_reduction(reduce(&spec, PrimeBound::below(m))?)
}

fn certify_reduction(r: HermiteReduction) -> Result<HermiteCertificate, HermiteError> {
    Ok(HermiteCertificate {
        certificate: certify(&r.instance),
        odd_factor: r.odd_factor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certifier::{build_scaled_polynomial, Verdict};

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn classical_examples() {
        assert_eq!(classical_hermite(4), p("x^4-6x^2+3"));
        assert_eq!(classical_hermite(3), p("x^3-3x"));
        assert_eq!(classical_hermite(0), IntPoly::one());
        assert_eq!(classical_hermite(5), p("x(x^4-10x^2+15)"));
    }

    #[test]
    fn specializations() {
        for m in 3..=12 {
            let h = classical_hermite(m);
            assert_eq!(generalized_hermite(&HermiteSpec::classical(m).unwrap()), h);
            let alt = generalized_hermite(&HermiteSpec::alternating_signs(m, IntPoly::x()).unwrap());
            assert_eq!(alt, h.scale(&BigInt::from(sign(m / 2))), "m = {m}");
        }
        let ones = HermiteSpec::new(4, IntPoly::x(), BigInt::one(), vec![IntPoly::one(); 2]).unwrap();
        assert_eq!(generalized_hermite(&ones), p("x^4+6x^2+3"));
    }

    #[test]
    fn reduction_identity() {
        let phi = p("x^2-x+17");
        let spec = HermiteSpec::new(7, phi.clone(), BigInt::from(2), vec![p("x+1"), p("3"), p("-x")]).unwrap();
        let r = hermite_to_instance(&spec).unwrap();
        assert_eq!(r.instance.c(), 2);
        let f = build_scaled_polynomial(&r.instance);
        assert_eq!(&f * r.odd_factor.as_ref().unwrap(), generalized_hermite(&spec));

        let spec = HermiteSpec::classical(4).unwrap();
        let r = hermite_to_instance(&spec).unwrap();
        assert_eq!(r.instance.lower(), &[p("1"), p("-2")]);
        assert_eq!(r.odd_factor, None);
        assert_eq!(build_scaled_polynomial(&r.instance), classical_hermite(4));
    }

    #[test]
    fn pipeline() {
        let c4 = certify_hermite(&HermiteSpec::classical(4).unwrap()).unwrap();
        assert_eq!(c4.certificate.verdict, Verdict::Irreducible);
        let c5 = certify_hermite(&HermiteSpec::classical(5).unwrap()).unwrap();
        assert_eq!(c5.certificate.verdict, Verdict::Irreducible);
        assert_eq!(c5.odd_factor, Some(IntPoly::x()));
        assert_eq!(
            certify_hermite(&HermiteSpec::classical(9).unwrap()),
            Err(HermiteError::ThreePower { m: 9, u: 2 })
        );
        let comp = certify_composed(4, p("x^2-x+17")).unwrap();
        assert_eq!(comp.certificate.verdict, Verdict::Irreducible);
    }

    #[test]
    fn spec_errors() {
        assert_eq!(HermiteSpec::classical(2), Err(HermiteError::TooSmall(2)));
        assert!(matches!(
            HermiteSpec::new(4, IntPoly::x(), BigInt::one(), vec![IntPoly::one()]),
            Err(HermiteError::LengthMismatch { .. })
        ));
        assert_eq!(
            HermiteSpec::new(4, IntPoly::x(), BigInt::one(), vec![p("x"), p("1")]),
            Err(HermiteError::DegreeBound(0))
        );
    }
}
