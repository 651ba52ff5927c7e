//! Prime words and unique factorization.
//!
//! A word is *prime* when it is nonempty, balanced, and not a product of two
//! nonempty balanced words. Equivalently, its elevation sequence is
//! nonzero strictly between the endpoints. Every interior elevation of a
//! prime has the same sign, which splits the primes into *upper* (all
//! positive) and *lower* (all negative). An upper prime always has the shape
//! `R·Z·L` where `Z` is a possibly empty product of upper primes.
//!
//! Every nonempty balanced word factors uniquely as a product of primes; the
//! factorization is read off by cutting at each interior return of the
//! elevation sequence to zero, in one left-to-right pass.

use crate::word::Word;
use alloc::vec::Vec;
use core::fmt;

/// Whether a prime's interior elevations are all positive or all negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimeKind {
    /// All interior elevations positive.
    Upper,
    /// All interior elevations negative.
    Lower,
}

impl PrimeKind {
    /// The kind of the flipped prime.
    pub fn opposite(self) -> PrimeKind {
        match self {
            PrimeKind::Upper => PrimeKind::Lower,
            PrimeKind::Lower => PrimeKind::Upper,
        }
    }
}

/// The ordered prime factors of a nonempty balanced word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFactorization {
    /// Nonempty list of primes whose concatenation is the source word.
    pub factors: Vec<Word>,
}

/// Errors from [`prime_factorize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorError {
    /// The input was the empty word.
    EmptyWord,
    /// The input was not balanced.
    NotBalanced,
}

impl fmt::Display for FactorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorError::EmptyWord => f.write_str("the empty word has no prime factorization"),
            FactorError::NotBalanced => f.write_str("only balanced words factor into primes"),
        }
    }
}

/// Errors from [`prime_kind`] and [`unwrap_upper`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeError {
    /// The argument is not a prime word.
    NotPrime,
    /// The argument is not an upper prime.
    NotUpperPrime,
}

impl fmt::Display for PrimeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeError::NotPrime => f.write_str("not a prime word"),
            PrimeError::NotUpperPrime => f.write_str("not an upper prime"),
        }
    }
}

/// True iff `w` is nonempty, balanced, and no interior elevation is zero.
pub fn is_prime(w: &Word) -> bool {
    if w.is_empty() {
        return false;
    }
    let mut e = 0;
    for (k, a) in w.letters().iter().enumerate() {
        e += a.weight();
        if e == 0 && k + 1 < w.len() {
            return false;
        }
    }
    e == 0
}

/// Splits a nonempty balanced word at every interior return of the
/// elevation sequence to zero.
pub fn prime_factorize(w: &Word) -> Result<PrimeFactorization, FactorError> {
    if w.is_empty() {
        return Err(FactorError::EmptyWord);
    }
    if !w.is_balanced() {
        return Err(FactorError::NotBalanced);
    }
    let mut factors = Vec::new();
    let mut e = 0;
    let mut start = 0;
    for (k, a) in w.letters().iter().enumerate() {
        e += a.weight();
        if e == 0 {
            factors.push(w.subword(start, k + 1));
            start = k + 1;
        }
    }
    debug_assert!(factors.iter().all(is_prime));
    Ok(PrimeFactorization { factors })
}

/// Classifies a prime by the sign of its interior elevations.
pub fn prime_kind(p: &Word) -> Result<PrimeKind, PrimeError> {
    if !is_prime(p) {
        return Err(PrimeError::NotPrime);
    }
    // Interior elevations of a prime all share the sign of the first one.
    Ok(match p.letters()[0].weight() {
        1 => PrimeKind::Upper,
        _ => PrimeKind::Lower,
    })
}

/// Writes an upper prime `p` as `R·Z·L` and returns the upper-prime factors
/// of `Z` (the empty list when `Z` is empty).
pub fn unwrap_upper(p: &Word) -> Result<Vec<Word>, PrimeError> {
    match prime_kind(p) {
        Ok(PrimeKind::Upper) => {}
        Ok(PrimeKind::Lower) => return Err(PrimeError::NotUpperPrime),
        Err(_) => return Err(PrimeError::NotUpperPrime),
    }
    let inner = p.subword(1, p.len() - 1);
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let factors = prime_factorize(&inner)
        .expect("the interior of an upper prime is balanced")
        .factors;
    debug_assert!(factors
        .iter()
        .all(|q| prime_kind(q) == Ok(PrimeKind::Upper)));
    Ok(factors)
}
