//! Polynomials over Z/pZ: reduction from Z[x], Euclid, Frobenius powers,
//! Rabin's irreducibility test and distinct-degree factorization.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::primes::{is_prime, prime_factors, primes_below};
use crate::zpoly::IntPoly;

/// Residues are kept below 2^31 so products fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FpError {
    #[error("modulus {0} is not a prime below 2^31")]
    BadModulus(u64),
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("leading coefficient vanishes mod {0}, degree drops under reduction")]
    DegreeDrop(u64),
    #[error("constant polynomial has no irreducibility status")]
    Constant,
    #[error("modulus polynomial must be monic of degree at least 1")]
    NotMonic,
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self, FpError> {
        check_modulus(p)?;
        Ok(Self::raw(p, coeffs.into_iter().map(|c| c % p).collect()))
    }

    fn raw(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        Self::raw(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::raw(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    fn same_field(&self, other: &FpPoly) -> Result<(), FpError> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(FpError::ModulusMismatch(self.p, other.p))
        }
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| (self.get(i) + other.get(i)) % self.p)
            .collect();
        Self::raw(self.p, c)
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| (self.get(i) + self.p - other.get(i)) % self.p)
            .collect();
        Self::raw(self.p, c)
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        Self::raw(p, out)
    }

    pub fn scale(&self, k: u64) -> FpPoly {
        Self::raw(self.p, self.coeffs.iter().map(|&c| c * (k % self.p) % self.p).collect())
    }

    pub fn monic(&self) -> FpPoly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(inv_mod(lc, self.p)),
        }
    }

    pub fn derivative(&self) -> FpPoly {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % self.p) * c % self.p)
            .collect();
        Self::raw(self.p, c)
    }

    pub fn divrem(&self, divisor: &FpPoly) -> Result<(FpPoly, FpPoly), FpError> {
        self.same_field(divisor)?;
        let d = divisor.degree().ok_or(FpError::DivisionByZero)?;
        let p = self.p;
        if self.coeffs.len() <= d {
            return Ok((Self::zero(p), self.clone()));
        }
        let inv = inv_mod(divisor.coeffs[d], p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - d];
        for i in (0..quot.len()).rev() {
            let q = rem[i + d] * inv % p;
            if q == 0 {
                continue;
            }
            quot[i] = q;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = (rem[i + j] + p - q * dc % p) % p;
            }
        }
        rem.truncate(d);
        Ok((Self::raw(p, quot), Self::raw(p, rem)))
    }

    pub fn rem(&self, divisor: &FpPoly) -> Result<FpPoly, FpError> {
        Ok(self.divrem(divisor)?.1)
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u64, modulus: &FpPoly) -> Result<FpPoly, FpError> {
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one(self.p).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(modulus)?;
            }
        }
        Ok(acc)
    }

    fn get(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }
}

fn check_modulus(p: u64) -> Result<(), FpError> {
    if p < 2 || p >= MAX_MODULUS || !is_prime(p) {
        return Err(FpError::BadModulus(p));
    }
    Ok(())
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(p));
    e.x.mod_floor(&BigInt::from(p)).to_u64().expect("residue below p")
}

/// Coefficientwise reduction into `[0, p)`.
pub fn reduce_mod_p(f: &IntPoly, p: u64) -> Result<FpPoly, FpError> {
    check_modulus(p)?;
    let pb = BigInt::from(p);
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue below p"))
        .collect();
    Ok(FpPoly::raw(p, coeffs))
}

/// Monic gcd by Euclid's algorithm; `gcd(0, 0) = 0`.
pub fn gcd_fp(a: &FpPoly, b: &FpPoly) -> Result<FpPoly, FpError> {
    a.same_field(b)?;
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// `f^(p^e) mod modulus`, i.e. the e-th Frobenius iterate of `f`.
pub fn frobenius_power(f: &FpPoly, modulus: &FpPoly, e: u64) -> Result<FpPoly, FpError> {
    f.same_field(modulus)?;
    if modulus.degree().map_or(true, |d| d == 0) || modulus.leading() != Some(1) {
        return Err(FpError::NotMonic);
    }
    let mut h = f.rem(modulus)?;
    for _ in 0..e {
        h = h.pow_mod(f.p, modulus)?;
    }
    Ok(h)
}

fn reduce_keeping_degree(f: &IntPoly, p: u64) -> Result<FpPoly, FpError> {
    let g = reduce_mod_p(f, p)?;
    if g.degree() != f.degree() {
        return Err(FpError::DegreeDrop(p));
    }
    Ok(g)
}

/// Rabin's test on the reduction of `f` modulo `p`.
pub fn is_irreducible_mod_p(f: &IntPoly, p: u64) -> Result<bool, FpError> {
    let g = reduce_keeping_degree(f, p)?;
    let d = match g.degree() {
        None | Some(0) => return Err(FpError::Constant),
        Some(d) => d as u64,
    };
    Ok(rabin(&g.monic(), d))
}

fn rabin(g: &FpPoly, d: u64) -> bool {
    let x = FpPoly::x(g.p);
    let full = frobenius_power(&x, g, d).expect("monic modulus");
    if full != x.rem(g).expect("nonzero modulus") {
        return false;
    }
    prime_factors(d).into_iter().all(|q| {
        let h = frobenius_power(&x, g, d / q).expect("monic modulus");
        gcd_fp(&h.sub(&x), g).expect("same field").is_one()
    })
}

/// Per-prime irreducibility results for a range of primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeSweep {
    pub bound: u64,
    pub inclusive: bool,
    pub entries: Vec<(u64, bool)>,
}

impl PrimeSweep {
    pub fn all_irreducible(&self) -> bool {
        self.entries.iter().all(|&(_, ok)| ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.iter().filter(|(_, ok)| !ok).map(|&(p, _)| p)
    }
}

/// Irreducibility of `phi` modulo every prime `p < bound`, or `p <= bound`
/// when `inclusive`. A prime at which the test cannot run counts as a failure.
pub fn irreducible_mod_primes(phi: &IntPoly, bound: u64, inclusive: bool) -> PrimeSweep {
    let limit = if inclusive { bound.saturating_add(1) } else { bound };
    let entries = primes_below(limit)
        .into_iter()
        .map(|p| (p, is_irreducible_mod_p(phi, p).unwrap_or(false)))
        .collect();
    PrimeSweep {
        bound,
        inclusive,
        entries,
    }
}

pub fn irreducible_mod_all_primes_below(phi: &IntPoly, bound: u64) -> PrimeSweep {
    irreducible_mod_primes(phi, bound, false)
}

pub fn irreducible_mod_all_primes_up_to(phi: &IntPoly, bound: u64) -> PrimeSweep {
    irreducible_mod_primes(phi, bound, true)
}

/// Squarefree decomposition of a monic polynomial over F_p:
/// pairs `(g, multiplicity)` with `f = prod g^multiplicity`.
pub fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let mut out = Vec::new();
    sff_into(&f.monic(), 1, &mut out);
    out
}

fn sff_into(f: &FpPoly, scale: usize, out: &mut Vec<(FpPoly, usize)>) {
    if f.degree().map_or(true, |d| d == 0) {
        return;
    }
    let p = f.p;
    let c = gcd_fp(f, &f.derivative()).expect("same field");
    let mut w = f.divrem(&c).expect("nonzero").0;
    let mut c = c;
    let mut i = 1;
    while w.degree().is_some_and(|d| d > 0) {
        let y = gcd_fp(&w, &c).expect("same field");
        let fac = w.divrem(&y).expect("nonzero").0;
        if fac.degree().is_some_and(|d| d > 0) {
            out.push((fac.monic(), i * scale));
        }
        c = c.divrem(&y).expect("nonzero").0;
        w = y;
        i += 1;
    }
    if c.degree().is_some_and(|d| d > 0) {
        // c is now a p-th power: its p-th root keeps every p-th coefficient.
        let root: Vec<u64> = c.coeffs.iter().step_by(p as usize).copied().collect();
        sff_into(&FpPoly::raw(p, root), scale * p as usize, out);
    }
}

/// Distinct-degree splitting of a monic squarefree polynomial into
/// `(degree, number of irreducible factors of that degree)`.
fn distinct_degree(g: &FpPoly) -> Vec<(usize, usize)> {
    let p = g.p;
    let x = FpPoly::x(p);
    let mut out = Vec::new();
    let mut rest = g.clone();
    let mut h = x.rem(&rest).expect("nonzero");
    let mut d = 1usize;
    while rest.degree().is_some_and(|deg| deg >= 2 * d) {
        h = h.pow_mod(p, &rest).expect("nonzero");
        let fac = gcd_fp(&h.sub(&x), &rest).expect("same field");
        if let Some(fd) = fac.degree().filter(|&fd| fd > 0) {
            out.push((d, fd / d));
            rest = rest.divrem(&fac).expect("nonzero").0;
            h = h.rem(&rest).expect("nonzero");
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((deg, 1));
    }
    out
}

/// Degrees of the irreducible factors of `f mod p`, with multiplicity, as
/// sorted `(degree, count)` pairs.
pub fn distinct_degree_factor_mod_p(f: &IntPoly, p: u64) -> Result<Vec<(usize, usize)>, FpError> {
    let g = reduce_keeping_degree(f, p)?;
    let mut tally: BTreeMap<usize, usize> = BTreeMap::new();
    for (part, mult) in squarefree_decomposition(&g) {
        for (deg, count) in distinct_degree(&part) {
            *tally.entry(deg).or_default() += count * mult;
        }
    }
    Ok(tally.into_iter().collect())
}
