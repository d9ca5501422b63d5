//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored in ascending order of degree: `coeffs[i]` is the
//! coefficient of `x^i`. The zero polynomial is the empty vector, and trailing
//! zeros are stripped on construction so structural equality is mathematical
//! equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("divisor must be monic of degree at least 1")]
    NotMonic,
    #[error("phi-expansion term {index} has degree {degree}, must be below deg phi = {phi_degree}")]
    TermTooLarge {
        index: usize,
        degree: usize,
        phi_degree: usize,
    },
    #[error("invalid polynomial literal: {0}")]
    Literal(String),
    #[error("cannot parse polynomial {input:?}: {reason} at offset {offset}")]
    Parse {
        input: String,
        offset: usize,
        reason: String,
    },
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c * x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        if k.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner(x))` by Horner's rule.
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &IntPoly::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, with a positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Division by a monic polynomial: `self = q * divisor + r`, `deg r < deg divisor`.
    pub fn divmod_monic(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly), PolyError> {
        let d = match divisor.degree() {
            Some(d) if d >= 1 && divisor.is_monic() => d,
            _ => return Err(PolyError::NotMonic),
        };
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let lead = std::mem::take(&mut rem[i + d]);
            if lead.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs[..d].iter().enumerate() {
                rem[i + j] -= &lead * dc;
            }
            quot[i] = lead;
        }
        rem.truncate(d);
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Exact quotient `self / divisor` in `Z[x]`, or `None` when `divisor`
    /// does not divide `self` there.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let d = divisor.degree()?;
        let lc = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if rem.len() <= d {
            return None;
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + d];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPoly::new(quot))
    }

    /// Primitive gcd over `Z[x]` with positive leading coefficient, computed
    /// by the primitive pseudo-remainder sequence. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let d = divisor.degree().expect("nonzero divisor");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let lead = rem.leading().unwrap().clone();
            rem = &rem.scale(&lc) - &IntPoly::monomial(lead, rd - d).mul_ref(divisor);
        }
        rem
    }

    fn mul_ref(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// An `s` with `s * s == self`, if one exists in `Z[x]`. The returned root
    /// has a positive leading coefficient.
    pub fn sqrt_exact(&self) -> Option<IntPoly> {
        let deg = match self.degree() {
            None => return Some(IntPoly::zero()),
            Some(d) if d % 2 == 1 => return None,
            Some(d) => d,
        };
        let lead = self.leading()?;
        if lead.is_negative() {
            return None;
        }
        let top = lead.sqrt();
        if &(&top * &top) != lead {
            return None;
        }
        let half = deg / 2;
        let mut root = vec![BigInt::zero(); half + 1];
        root[half] = top.clone();
        let two_top = &top * 2;
        // Coefficient deg - t of s^2 determines root[half - t].
        for t in 1..=half {
            let mut acc = self.coeff(deg - t);
            for i in (half - t + 1)..=half {
                let j = deg - t - i;
                if j > half || j < half - t + 1 {
                    continue;
                }
                acc -= &root[i] * &root[j];
            }
            let (q, r) = acc.div_rem(&two_top);
            if !r.is_zero() {
                return None;
            }
            root[half - t] = q;
        }
        let root = IntPoly::new(root);
        (&(&root * &root) == self).then_some(root)
    }

    /// JSON literal form: decimal strings in ascending powers.
    pub fn to_literal(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_literal<S: AsRef<str>>(items: &[S]) -> Result<IntPoly, PolyError> {
        items
            .iter()
            .map(|s| {
                let s = s.as_ref();
                s.trim()
                    .parse::<BigInt>()
                    .map_err(|_| PolyError::Literal(format!("{s:?} is not a decimal integer")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(IntPoly::new)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new(
            (0..n)
                .map(|i| self.coeff(i) + other.coeffs.get(i).cloned().unwrap_or_default())
                .collect(),
        )
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new(
            (0..n)
                .map(|i| self.coeff(i) - other.coeffs.get(i).cloned().unwrap_or_default())
                .collect(),
        )
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, other: &IntPoly) -> IntPoly {
        self.mul_ref(other)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, other: IntPoly) -> IntPoly {
                (&self).$m(&other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_literal().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        IntPoly::from_literal(&items).map_err(D::Error::custom)
    }
}

impl FromStr for IntPoly {
    type Err = PolyError;

    /// Parses the inline syntax, e.g. `x^2-x+5` or `5(x-5)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser {
            input: s,
            bytes: s.as_bytes(),
            pos: 0,
        };
        let poly = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.bytes.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(poly)
    }
}

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*'? factor)*
// factor := atom ('^' uint)?
// atom   := uint | 'x' | '(' expr ')'
struct Parser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> PolyError {
        PolyError::Parse {
            input: self.input.to_string(),
            offset: self.pos,
            reason: reason.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<IntPoly, PolyError> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == b'+' { acc + t } else { acc - t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<IntPoly, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.factor()?;
                }
                Some(b'x' | b'X' | b'(' | b'0'..=b'9') => acc = acc * self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<IntPoly, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.uint()?;
            let e = u32::try_from(&e).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<IntPoly, PolyError> {
        match self.peek() {
            Some(b'x' | b'X') => {
                self.pos += 1;
                Ok(IntPoly::x())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'0'..=b'9') => Ok(IntPoly::constant(self.uint()?)),
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn uint(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        Ok(self.input[start..self.pos].parse().expect("ascii digits"))
    }
}

/// The unique representation `f = sum_i terms[i] * phi^i` with
/// `deg terms[i] < deg phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiExpansion {
    phi: IntPoly,
    terms: Vec<IntPoly>,
}

impl PhiExpansion {
    /// Checks that `phi` is monic of positive degree and that every term is
    /// reduced modulo `phi`. Trailing zero terms are dropped.
    pub fn new(phi: IntPoly, mut terms: Vec<IntPoly>) -> Result<Self, PolyError> {
        let d = phi_degree(&phi)?;
        for (index, t) in terms.iter().enumerate() {
            if let Some(degree) = t.degree().filter(|&deg| deg >= d) {
                return Err(PolyError::TermTooLarge {
                    index,
                    degree,
                    phi_degree: d,
                });
            }
        }
        while terms.last().is_some_and(IntPoly::is_zero) {
            terms.pop();
        }
        Ok(PhiExpansion { phi, terms })
    }

    pub fn phi(&self) -> &IntPoly {
        &self.phi
    }

    pub fn terms(&self) -> &[IntPoly] {
        &self.terms
    }

    /// Number of the highest nonzero term, i.e. the phi-degree.
    pub fn phi_degree(&self) -> Option<usize> {
        self.terms.len().checked_sub(1)
    }

    pub fn term(&self, i: usize) -> IntPoly {
        self.terms.get(i).cloned().unwrap_or_default()
    }
}

fn phi_degree(phi: &IntPoly) -> Result<usize, PolyError> {
    match phi.degree() {
        Some(d) if d >= 1 && phi.is_monic() => Ok(d),
        _ => Err(PolyError::NotMonic),
    }
}

/// Repeated division by `phi`.
pub fn phi_expand(f: &IntPoly, phi: &IntPoly) -> Result<PhiExpansion, PolyError> {
    phi_degree(phi)?;
    let mut terms = Vec::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (q, r) = rest.divmod_monic(phi)?;
        terms.push(r);
        rest = q;
    }
    PhiExpansion::new(phi.clone(), terms)
}

/// `sum_i terms[i] * phi^i`, evaluated by Horner's rule in `phi`.
pub fn phi_assemble(e: &PhiExpansion) -> IntPoly {
    let mut acc = IntPoly::zero();
    for t in e.terms.iter().rev() {
        acc = &(&acc * &e.phi) + t;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p("x^2+1") + &p("-x^2"), IntPoly::one());
        assert_eq!(&IntPoly::zero() + &p("x^3-2"), p("x^3-2"));
        assert_eq!(&p("x-3") + &p("x+26"), IntPoly::from_i64s(&[23, 2]));
    }

    #[test]
    fn mul_examples() {
        let phi = p("x^2-x+5");
        let phi2 = phi.pow(2);
        let lhs = &(&phi2 + &IntPoly::constant(3)) * &(&phi2 - &IntPoly::constant(3));
        assert_eq!(lhs, &phi.pow(4) - &IntPoly::constant(9));
        assert_eq!(&phi * &IntPoly::one(), phi);
        assert_eq!(&p("x+1") * &p("x-1"), IntPoly::from_i64s(&[-1, 0, 1]));
    }

    #[test]
    fn content_examples() {
        assert_eq!(p("6x^2+9").content(), BigInt::from(3));
        assert_eq!(p("5(x-5)").content(), BigInt::from(5));
        assert_eq!(p("x+26").content(), BigInt::from(1));
        assert_eq!(IntPoly::zero().content(), BigInt::zero());
        assert_eq!(p("-4x-6").content(), BigInt::from(2));
    }

    #[test]
    fn divmod_examples() {
        let phi = p("x^2-x+5");
        let (q, r) = phi.pow(2).divmod_monic(&phi).unwrap();
        assert_eq!((q, r), (phi.clone(), IntPoly::zero()));
        let (q, r) = p("x^2").divmod_monic(&phi).unwrap();
        assert_eq!((q, r), (IntPoly::one(), p("x-5")));
        let (q, r) = IntPoly::constant(7).divmod_monic(&phi).unwrap();
        assert_eq!((q, r), (IntPoly::zero(), IntPoly::constant(7)));
        assert_eq!(p("x^2").divmod_monic(&p("2x+1")), Err(PolyError::NotMonic));
        assert_eq!(p("x^2").divmod_monic(&IntPoly::one()), Err(PolyError::NotMonic));
    }

    #[test]
    fn expand_examples() {
        let phi = p("x^2-x+5");
        let f = &phi.pow(4) - &IntPoly::constant(9);
        let e = phi_expand(&f, &phi).unwrap();
        let want: Vec<IntPoly> = [-9, 0, 0, 0, 1].iter().map(|&c| IntPoly::constant(c)).collect();
        assert_eq!(e.terms(), &want[..]);

        let phi3 = p("x^3-x+37");
        let f = &phi3.pow(2) - &p("x^2");
        let e = phi_expand(&f, &phi3).unwrap();
        assert_eq!(e.terms(), &[p("-x^2"), IntPoly::zero(), IntPoly::one()][..]);

        assert!(phi_expand(&IntPoly::zero(), &phi).unwrap().terms().is_empty());
        assert_eq!(phi_expand(&f, &p("2x")), Err(PolyError::NotMonic));
    }

    #[test]
    fn assemble_examples() {
        let phi = p("x^3+2x+1");
        let terms: Vec<IntPoly> = [3, 0, 3, 0, 1].iter().map(|&c| IntPoly::constant(c)).collect();
        let e = PhiExpansion::new(phi.clone(), terms).unwrap();
        let want = &(&phi.pow(4) + &phi.pow(2).scale(&BigInt::from(3))) + &IntPoly::constant(3);
        assert_eq!(phi_assemble(&e), want);

        let e = PhiExpansion::new(phi.clone(), vec![IntPoly::constant(-4)]).unwrap();
        assert_eq!(phi_assemble(&e), IntPoly::constant(-4));

        let err = PhiExpansion::new(phi, vec![p("x^3")]).unwrap_err();
        assert!(matches!(err, PolyError::TermTooLarge { index: 0, degree: 3, phi_degree: 3 }));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p("x^2-x+5").eval(&BigInt::zero()), BigInt::from(5));
        assert_eq!(p("x^2-x+11").eval(&BigInt::zero()), BigInt::from(11));
        assert_eq!(p("x^2-x+11").eval(&BigInt::from(-2)), BigInt::from(17));
    }

    #[test]
    fn degree_of_zero_is_not_a_number() {
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(IntPoly::from_i64s(&[0, 0, 0]), IntPoly::zero());
        assert_eq!(IntPoly::from_i64s(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn parser_and_display() {
        assert_eq!(p("x^2-x+5"), IntPoly::from_i64s(&[5, -1, 1]));
        assert_eq!(p(" -x^3 + 2 * x "), IntPoly::from_i64s(&[0, 2, 0, -1]));
        assert_eq!(p("5(x-5)"), IntPoly::from_i64s(&[-25, 5]));
        assert_eq!(p("(x+1)^2"), IntPoly::from_i64s(&[1, 2, 1]));
        assert_eq!(p("0"), IntPoly::zero());
        assert_eq!(p("x^4-6x^2+3").to_string(), "x^4 - 6x^2 + 3");
        assert_eq!(p("-x+1").to_string(), "-x + 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert!("x^".parse::<IntPoly>().is_err());
        assert!("x + y".parse::<IntPoly>().is_err());
        assert!("(x+1".parse::<IntPoly>().is_err());
    }

    #[test]
    fn literal_round_trip() {
        let f = p("x^2-x+5");
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"["5","-1","1"]"#);
        let back: IntPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<IntPoly>(r#"["5", "x"]"#).is_err());
        assert!(serde_json::from_str::<IntPoly>(r#"[5]"#).is_err());
    }

    #[test]
    fn exact_division_and_gcd() {
        let a = p("x^2-3");
        let b = p("2x^2+x+7");
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&p("x+1")), None);
        let g = (&prod * &p("3x-1")).gcd(&(&b * &p("x+5")).scale(&BigInt::from(6)));
        assert_eq!(g, b);
    }

    #[test]
    fn square_roots() {
        let phi = p("x^2-x+11");
        let sq = (&phi.pow(2) + &IntPoly::constant(15)).pow(2);
        assert_eq!(sq.sqrt_exact(), Some(&phi.pow(2) + &IntPoly::constant(15)));
        assert_eq!(p("x^2").sqrt_exact(), Some(IntPoly::x()));
        assert_eq!(IntPoly::constant(9).sqrt_exact(), Some(IntPoly::constant(3)));
        assert_eq!(p("x^2+1").sqrt_exact(), None);
        assert_eq!(p("-x^2").sqrt_exact(), None);
        assert_eq!(p("x^3").sqrt_exact(), None);
    }

    #[test]
    fn compose_matches_substitution() {
        let f = p("x^2+3x-1");
        let g = p("x^2-x+5");
        let direct = &(&g.pow(2) + &g.scale(&BigInt::from(3))) - &IntPoly::one();
        assert_eq!(f.compose(&g), direct);
    }
}
