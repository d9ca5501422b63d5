//! Odd-number products `u_j` and the prime-in-a-window lemma on runs of
//! consecutive odd numbers.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::primes::prime_factors;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    #[error("u_ratio({a}, {b}) needs even arguments with b <= a")]
    BadRatio { a: u64, b: u64 },
    #[error("window lemma needs n > k >= 1, got n = {n}, k = {k}")]
    BadWindow { n: u64, k: u64 },
    #[error("odd window must start at an odd number above 2k+1, got start = {start}, k = {k}")]
    BadStart { start: u64, k: u64 },
}

/// Product of the odd numbers `<= j`; `u(0) = u(1) = 1`.
pub fn u(j: u64) -> BigInt {
    (1..=j).step_by(2).map(BigInt::from).product()
}

/// `u(a) / u(b)` for even `b <= a`: the product of the odd numbers in `(b, a]`.
pub fn u_ratio(a: u64, b: u64) -> Result<BigInt, SchurError> {
    if b > a || a % 2 == 1 || b % 2 == 1 {
        return Err(SchurError::BadRatio { a, b });
    }
    Ok(((b + 1)..=a).step_by(2).map(BigInt::from).product())
}

/// A prime `p > 2k+1` together with the window member it divides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurWitness {
    pub p: u64,
    pub divides: u64,
}

impl SchurWitness {
    /// Re-derives the witness conditions for the window starting at `start`.
    pub fn is_valid_for_window(&self, start: u64, k: u64) -> bool {
        let last = start + 2 * (k - 1);
        crate::primes::is_prime(self.p)
            && self.p > 2 * k + 1
            && self.divides % 2 == 1
            && (start..=last).contains(&self.divides)
            && self.divides % self.p == 0
    }

    pub fn is_valid(&self, n: u64, k: u64) -> bool {
        self.is_valid_for_window(2 * n + 1, k)
    }
}

/// Among `2n+1, 2n+3, ..., 2n+2k-1`, a member with a prime factor `> 2k+1`.
/// Returns `None` exactly when no member has one. Ties go to the smallest
/// prime, then the smallest member.
pub fn find_schur_prime(n: u64, k: u64) -> Result<Option<SchurWitness>, SchurError> {
    if k == 0 || n <= k {
        return Err(SchurError::BadWindow { n, k });
    }
    find_prime_in_odd_window(2 * n + 1, k)
}

/// The same search for the `k` consecutive odd numbers starting at `start`,
/// each of which must exceed `2k+1`.
pub fn find_prime_in_odd_window(start: u64, k: u64) -> Result<Option<SchurWitness>, SchurError> {
    if k == 0 || start % 2 == 0 || start <= 2 * k + 1 {
        return Err(SchurError::BadStart { start, k });
    }
    let witness = (0..k)
        .map(|i| start + 2 * i)
        .flat_map(|m| {
            prime_factors(m)
                .into_iter()
                .filter(move |&p| p > 2 * k + 1)
                .map(move |p| SchurWitness { p, divides: m })
        })
        .min_by_key(|w| (w.p, w.divides));
    Ok(witness)
}

/// `Some(u)` when `m = 3^u` with `u >= 1`.
pub fn is_power_of_three(m: u64) -> Option<u32> {
    if m < 3 {
        return None;
    }
    let mut m = m;
    let mut e = 0;
    while m % 3 == 0 {
        m /= 3;
        e += 1;
    }
    (m == 1).then_some(e)
}

/// Binomial coefficients `C(n, 0..=n)` by Pascal's rule.
pub fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        next.extend(row.windows(2).map(|w| &w[0] + &w[1]));
        next.push(BigInt::one());
        row = next;
    }
    row
}
