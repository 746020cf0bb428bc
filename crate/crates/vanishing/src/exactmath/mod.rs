//! Arbitrary-precision integer machinery and exact cyclotomic numbers.
//!
//! Everything downstream (class sizes, divisibility checks, character
//! values) is built on the primitives here. Primality is decided by
//! deterministic trial division: inputs at desk scale factor into small
//! primes, and factorials are never factored directly — use
//! [`Factorization::of_factorial`] which applies Legendre's formula.

mod cyclotomic;

pub use cyclotomic::Cyclotomic;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;
use thiserror::Error;

/// Arbitrary-precision non-negative integer: group orders, class sizes, factorials.
pub type Natural = BigUint;

/// Trial division stops at this bound; any surviving cofactor below its
/// square must itself be prime.
const TRIAL_LIMIT: u64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactMathError {
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no prime at or below {0}")]
    NoPrime(u64),
    #[error("cofactor {0} exceeds the trial-division bound")]
    FactorTooLarge(Natural),
    #[error("invalid cyclotomic literal: {0}")]
    BadLiteral(String),
    #[error("cyclotomic conductor must be positive")]
    ZeroConductor,
}

/// n! as an exact integer.
pub fn factorial(n: u64) -> Natural {
    let mut acc = Natural::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Deterministic primality by trial division up to sqrt(n).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes `<= n`, ascending (Eratosthenes).
pub fn primes_upto(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
        }
    }
    primes
}

/// The largest prime `<= n`. Errors for `n < 2`.
pub fn largest_prime_leq(n: u64) -> Result<u64, ExactMathError> {
    if n < 2 {
        return Err(ExactMathError::NoPrime(n));
    }
    let mut k = n;
    loop {
        if is_prime(k) {
            return Ok(k);
        }
        k -= 1;
    }
}

/// The largest prime strictly below `n`. Errors for `n < 3`.
pub fn largest_prime_below(n: u64) -> Result<u64, ExactMathError> {
    if n < 3 {
        return Err(ExactMathError::NoPrime(n));
    }
    largest_prime_leq(n - 1)
}

/// Exact p-adic valuation of `n`: the largest `e` with `p^e | n`.
pub fn nu(p: u64, n: &Natural) -> Result<u32, ExactMathError> {
    if !is_prime(p) {
        return Err(ExactMathError::NotPrime(p));
    }
    if n.is_zero() {
        return Err(ExactMathError::ZeroArgument);
    }
    let big_p = Natural::from(p);
    let mut e = 0u32;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(&big_p);
        if !r.is_zero() {
            return Ok(e);
        }
        e += 1;
        m = q;
    }
}

/// p-adic valuation of n! by Legendre's formula, without materializing n!.
pub fn nu_factorial(p: u64, n: u64) -> u64 {
    let mut total = 0;
    let mut q = p;
    loop {
        total += n / q;
        match q.checked_mul(p) {
            Some(next) if next <= n => q = next,
            _ => break,
        }
    }
    total
}

/// A positive integer as an ordered product of prime powers.
///
/// Primes are strictly increasing and all exponents are at least 1; the
/// empty list represents 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    entries: Vec<(u64, u32)>,
}

impl Factorization {
    /// The empty product.
    pub fn one() -> Self {
        Factorization { entries: Vec::new() }
    }

    /// Factor `n >= 1` by trial division.
    ///
    /// Errors on 0 and on inputs whose cofactor after removing all prime
    /// factors below 10^6 is too large to certify prime.
    pub fn factorize(n: &Natural) -> Result<Self, ExactMathError> {
        if n.is_zero() {
            return Err(ExactMathError::ZeroArgument);
        }
        let mut entries = Vec::new();
        let mut m = n.clone();
        let mut push = |p: u64, m: &mut Natural| {
            let big_p = Natural::from(p);
            let mut e = 0u32;
            loop {
                let (q, r) = m.div_rem(&big_p);
                if !r.is_zero() {
                    break;
                }
                e += 1;
                *m = q;
            }
            if e > 0 {
                entries.push((p, e));
            }
        };
        push(2, &mut m);
        let mut d = 3u64;
        while !m.is_one() && d <= TRIAL_LIMIT {
            push(d, &mut m);
            d += 2;
        }
        if !m.is_one() {
            // No factor below the trial limit: prime iff below its square.
            if m < Natural::from(TRIAL_LIMIT) * Natural::from(TRIAL_LIMIT) {
                let p = m.to_u64().expect("bounded cofactor");
                entries.push((p, 1));
            } else {
                return Err(ExactMathError::FactorTooLarge(m));
            }
        }
        Ok(Factorization { entries })
    }

    /// Factorization of n! via Legendre's formula.
    pub fn of_factorial(n: u64) -> Self {
        let entries = primes_upto(n)
            .into_iter()
            .map(|p| (p, nu_factorial(p, n) as u32))
            .collect();
        Factorization { entries }
    }

    /// Factorization of a single prime power `p^e` (`e >= 1`).
    pub fn prime_power(p: u64, e: u32) -> Self {
        debug_assert!(is_prime(p) && e > 0);
        Factorization { entries: vec![(p, e)] }
    }

    pub fn entries(&self) -> &[(u64, u32)] {
        &self.entries
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p` in this factorization.
    pub fn nu(&self, p: u64) -> u32 {
        self.entries
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// Reconstruct the integer.
    pub fn value(&self) -> Natural {
        let mut acc = Natural::one();
        for &(p, e) in &self.entries {
            acc *= Natural::from(p).pow(e);
        }
        acc
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    /// True when no exponent exceeds 1.
    pub fn is_squarefree(&self) -> bool {
        self.entries.iter().all(|&(_, e)| e <= 1)
    }

    /// Product of two factorizations.
    pub fn mul(&self, other: &Factorization) -> Factorization {
        let mut entries = self.entries.clone();
        for &(p, e) in &other.entries {
            match entries.iter_mut().find(|(q, _)| *q == p) {
                Some((_, f)) => *f += e,
                None => entries.push((p, e)),
            }
        }
        entries.sort_unstable_by_key(|&(p, _)| p);
        Factorization { entries }
    }

    /// Exact quotient; `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Factorization) -> Option<Factorization> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for &(p, e) in &self.entries {
            let f = other.nu(p);
            if f > e {
                return None;
            }
            if e > f {
                entries.push((p, e - f));
            }
        }
        // A prime present only in the divisor cannot divide self.
        if other.primes().any(|p| self.nu(p) == 0) {
            return None;
        }
        Some(Factorization { entries })
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|&(p, e)| {
                if e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}
