//! Prime enumeration, class tables, and minimal generating pairs.
//!
//! Upper primes are generated structurally as `R·Z·L` over products `Z` of
//! shorter upper primes; lower primes are their flips. Grouping the primes
//! of each kind by their reduced form yields the class tables, and the
//! cartesian product of the class representatives (the alphabetical minima)
//! gives the generating pairs whose commutators form a minimal generating
//! set of the swap ideal.
//!
//! Generation and minimality are verified computationally at bounded
//! length: a pair set generates the commutator of `U·D` exactly when `D·U`
//! is reachable from `U·D` using only swaps of the listed types.

use crate::prime::{is_prime, prime_kind, PrimeKind};
use crate::reduce::reduce;
use crate::swap::{restricted_reachable, LimitExceeded, SwapType};
use crate::word::{Letter, Word};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

/// One equivalence class of primes: the representative is the reduced form,
/// which is also the alphabetical minimum and the first member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeClass {
    /// The minimal word of the class.
    pub representative: Word,
    /// All members, alphabetically sorted (so the representative comes
    /// first).
    pub members: Vec<Word>,
}

/// The equivalence classes of all primes of one kind up to a length bound,
/// ordered by representative length and then alphabetically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeClassTable {
    /// Which kind of primes the table covers.
    pub kind: PrimeKind,
    /// The length bound.
    pub max_len: usize,
    /// Disjoint classes whose union is every prime of the kind with length
    /// at most `max_len`.
    pub classes: Vec<PrimeClass>,
}

/// An (upper representative, lower representative) pair; the commutators of
/// these pairs form the minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GeneratorPair {
    /// Minimal word of an upper-prime class.
    pub upper: Word,
    /// Minimal word of a lower-prime class.
    pub lower: Word,
}

/// All primes of the given kind with length at most `max_len`,
/// alphabetically sorted.
pub fn enumerate_primes(kind: PrimeKind, max_len: usize) -> Vec<Word> {
    let mut out: Vec<Word> = upper_primes_by_length(max_len)
        .into_iter()
        .flatten()
        .map(|u| match kind {
            PrimeKind::Upper => u,
            PrimeKind::Lower => u.flip(),
        })
        .collect();
    out.sort();
    out
}

/// Upper primes grouped by length (index = length; odd slots empty),
/// generated recursively over the `R·Z·L` structure.
fn upper_primes_by_length(max_len: usize) -> Vec<Vec<Word>> {
    let mut primes: Vec<Vec<Word>> = vec![Vec::new(); max_len + 1];
    // products[m] = all products of upper primes of total length m
    let mut products: Vec<Vec<Word>> = vec![Vec::new(); max_len.saturating_sub(1).max(1)];
    if !products.is_empty() {
        products[0].push(Word::empty());
    }
    for n in 2..=max_len {
        if n % 2 != 0 {
            continue;
        }
        primes[n] = products[n - 2]
            .iter()
            .map(|z| {
                let mut letters = Vec::with_capacity(n);
                letters.push(Letter::R);
                letters.extend_from_slice(z.letters());
                letters.push(Letter::L);
                Word::from_letters(letters)
            })
            .collect();
        debug_assert!(primes[n]
            .iter()
            .all(|p| prime_kind(p) == Ok(PrimeKind::Upper)));
        if n < products.len() {
            let mut combined = Vec::new();
            for first_len in (2..=n).step_by(2) {
                for first in &primes[first_len] {
                    for rest in &products[n - first_len] {
                        combined.push(first.concat(rest));
                    }
                }
            }
            products[n] = combined;
        }
    }
    primes
}

/// Groups the primes of one kind by their reduced form. Classes are listed
/// by representative length, then alphabetically, matching the order in
/// which the class tables are usually displayed.
pub fn prime_classes(kind: PrimeKind, max_len: usize) -> PrimeClassTable {
    let mut grouped: BTreeMap<Word, BTreeSet<Word>> = BTreeMap::new();
    for p in enumerate_primes(kind, max_len) {
        grouped.entry(reduce(&p)).or_default().insert(p);
    }
    let mut classes: Vec<PrimeClass> = grouped
        .into_iter()
        .map(|(representative, members)| {
            let members: Vec<Word> = members.into_iter().collect();
            debug_assert_eq!(members.first(), Some(&representative));
            PrimeClass {
                representative,
                members,
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        (a.representative.len(), &a.representative)
            .cmp(&(b.representative.len(), &b.representative))
    });
    PrimeClassTable {
        kind,
        max_len,
        classes,
    }
}

/// The cartesian product of upper and lower class representatives with
/// prime lengths at most `max_len`, sorted by `(upper, lower)`.
pub fn minimal_generating_pairs(max_len: usize) -> Vec<GeneratorPair> {
    let uppers: Vec<Word> = prime_classes(PrimeKind::Upper, max_len)
        .classes
        .into_iter()
        .map(|c| c.representative)
        .collect();
    let lowers: Vec<Word> = prime_classes(PrimeKind::Lower, max_len)
        .classes
        .into_iter()
        .map(|c| c.representative)
        .collect();
    let mut pairs = Vec::with_capacity(uppers.len() * lowers.len());
    for u in &uppers {
        for d in &lowers {
            pairs.push(GeneratorPair {
                upper: u.clone(),
                lower: d.clone(),
            });
        }
    }
    pairs.sort();
    pairs
}

fn allowed_types(pairs: &[GeneratorPair], max_span: usize) -> BTreeSet<SwapType> {
    pairs
        .iter()
        .filter(|p| p.upper.len() + p.lower.len() <= max_span)
        .map(|p| SwapType::new(p.upper.clone(), p.lower.clone()))
        .collect()
}

/// Whether the commutator of `u·d` lies in the ideal generated by the
/// commutators of `pairs`: true iff `d·u` is reachable from `u·d` using
/// only swaps of the pair types. Types longer than `l(u·d)` cannot occur
/// inside the class (swaps preserve length) and are dropped up front.
pub fn verify_generation(
    u: &Word,
    d: &Word,
    pairs: &[GeneratorPair],
    limit: usize,
) -> Result<bool, LimitExceeded> {
    debug_assert!(is_prime(u) && prime_kind(u) == Ok(PrimeKind::Upper));
    debug_assert!(is_prime(d) && prime_kind(d) == Ok(PrimeKind::Lower));
    let allowed = allowed_types(pairs, u.len() + d.len());
    restricted_reachable(&u.concat(d), &d.concat(u), &allowed, limit)
}

/// For each pair, whether the remaining pairs still generate its
/// commutator. A minimal set reports `false` everywhere.
pub fn verify_minimality(
    pairs: &[GeneratorPair],
    limit: usize,
) -> Result<Vec<(GeneratorPair, bool)>, LimitExceeded> {
    let mut results = Vec::with_capacity(pairs.len());
    for (i, pair) in pairs.iter().enumerate() {
        let mut rest: Vec<GeneratorPair> = pairs.to_vec();
        rest.remove(i);
        let generated = verify_generation(&pair.upper, &pair.lower, &rest, limit)?;
        results.push((pair.clone(), generated));
    }
    Ok(results)
}
