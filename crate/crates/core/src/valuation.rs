//! p-adic valuations on integers and the Gauss valuation on `Z[x]`, plus an
//! exact rational type for Newton-polygon slopes.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::zpoly::IntPoly;

/// A nonnegative integer or infinity, the codomain of `v_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtendedNat {
    Finite(u64),
    Infinity,
}

impl ExtendedNat {
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedNat::Finite(v) => Some(v),
            ExtendedNat::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == ExtendedNat::Infinity
    }
}

impl PartialOrd for ExtendedNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedNat {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedNat::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinity) => Ordering::Less,
            (Infinity, Finite(_)) => Ordering::Greater,
            (Infinity, Infinity) => Ordering::Equal,
        }
    }
}

impl Add for ExtendedNat {
    type Output = ExtendedNat;
    fn add(self, other: ExtendedNat) -> ExtendedNat {
        match (self, other) {
            (ExtendedNat::Finite(a), ExtendedNat::Finite(b)) => ExtendedNat::Finite(a + b),
            _ => ExtendedNat::Infinity,
        }
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(v) => write!(f, "{v}"),
            ExtendedNat::Infinity => write!(f, "inf"),
        }
    }
}

/// Exact rational in lowest terms with positive denominator. Displays and
/// serializes as `"num/den"`, including integers (`"0/1"`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ratio(BigRational);

impl Ratio {
    /// Panics on a zero denominator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Ratio {
        Ratio(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Ratio {
        Ratio(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Ratio {
        Ratio::from_integer(0)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ratio({self})")
    }
}

impl FromStr for Ratio {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("{s:?} is not a ratio of the form num/den");
        let (n, d) = s.split_once('/').ok_or_else(bad)?;
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if !d.is_positive() {
            return Err(bad());
        }
        Ok(Ratio::new(n, d))
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ratio {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

/// Exponent of the largest power of `p` dividing `b`; infinite for `b = 0`.
pub fn vp(b: &BigInt, p: u64) -> ExtendedNat {
    if b.is_zero() {
        return ExtendedNat::Infinity;
    }
    let pb = BigInt::from(p);
    let mut b = b.abs();
    let mut v = 0;
    loop {
        let (q, r) = b.div_rem(&pb);
        if !r.is_zero() {
            return ExtendedNat::Finite(v);
        }
        b = q;
        v += 1;
    }
}

/// Gauss valuation: minimum of the coefficient valuations.
pub fn vpx(f: &IntPoly, p: u64) -> ExtendedNat {
    f.coeffs()
        .iter()
        .map(|c| vp(c, p))
        .min()
        .unwrap_or(ExtendedNat::Infinity)
}

/// `v_p(m!)` by Legendre's formula.
pub fn vp_factorial(m: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut q = m;
    while q > 0 {
        q /= p;
        total += q;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtendedNat::*;

    #[test]
    fn vp_examples() {
        assert_eq!(vp(&BigInt::from(45), 3), Finite(2));
        assert_eq!(vp(&BigInt::zero(), 7), Infinity);
        assert_eq!(vp(&BigInt::from(135135), 3), Finite(3));
        assert_eq!(vp(&BigInt::from(-8), 2), Finite(3));
    }

    #[test]
    fn vpx_examples() {
        let p = |s: &str| s.parse::<IntPoly>().unwrap();
        assert_eq!(vpx(&p("6x^2+9"), 3), Finite(1));
        assert_eq!(vpx(&p("x+26"), 5), Finite(0));
        assert_eq!(vpx(&p("5(x-5)"), 5), Finite(1));
        assert_eq!(vpx(&IntPoly::zero(), 5), Infinity);
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(vp_factorial(5, 3), 1);
        assert_eq!(vp_factorial(0, 7), 0);
        assert_eq!(vp_factorial(27, 3), 13);
    }

    #[test]
    fn extended_order_and_sum() {
        assert!(Infinity > Finite(u64::MAX));
        assert_eq!(Infinity + Finite(3), Infinity);
        assert_eq!(Finite(2) + Finite(3), Finite(5));
    }

    #[test]
    fn ratio_format() {
        assert_eq!(Ratio::new(2, 8).to_string(), "1/4");
        assert_eq!(Ratio::zero().to_string(), "0/1");
        assert_eq!(Ratio::new(3, -6).to_string(), "-1/2");
        assert_eq!("6/8".parse::<Ratio>().unwrap(), Ratio::new(3, 4));
        assert!("1/0".parse::<Ratio>().is_err());
        assert!("1".parse::<Ratio>().is_err());
        assert!(Ratio::new(1, 4) < Ratio::new(1, 2));
        assert_eq!(serde_json::to_string(&Ratio::new(3, 10)).unwrap(), "\"3/10\"");
    }
}
