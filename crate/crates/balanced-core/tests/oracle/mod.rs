//! Naive reference implementations used as independent test oracles.
//!
//! Everything here is recomputed from first principles on the letter
//! sequences (letter counting, exhaustive subword enumeration, string
//! comparison) without going through the elevation machinery or the
//! production swap/reduction code paths.

#![allow(dead_code)]

use balanced_core::word::{Letter, Word};
use std::collections::{BTreeSet, VecDeque};

pub fn letter_counts(letters: &[Letter]) -> (usize, usize) {
    let l = letters.iter().filter(|&&a| a == Letter::L).count();
    (l, letters.len() - l)
}

pub fn is_balanced(letters: &[Letter]) -> bool {
    let (l, r) = letter_counts(letters);
    l == r
}

/// Primality via the prefix formulation: nonempty, balanced, and no proper
/// nonempty prefix balanced.
pub fn is_prime(letters: &[Letter]) -> bool {
    !letters.is_empty()
        && is_balanced(letters)
        && (1..letters.len()).all(|k| !is_balanced(&letters[..k]))
}

pub fn is_upper_prime(letters: &[Letter]) -> bool {
    is_prime(letters)
        && (1..letters.len()).all(|k| {
            let (l, r) = letter_counts(&letters[..k]);
            r > l
        })
}

pub fn is_lower_prime(letters: &[Letter]) -> bool {
    is_prime(letters)
        && (1..letters.len()).all(|k| {
            let (l, r) = letter_counts(&letters[..k]);
            l > r
        })
}

/// Every factorization of `w` into prime subwords, by exhaustive search
/// over split points. Uniqueness of factorization means the result should be a
/// single factorization for nonempty balanced input.
pub fn prime_factorizations(w: &Word) -> Vec<Vec<Word>> {
    fn go(letters: &[Letter], from: usize, acc: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
        if from == letters.len() {
            out.push(acc.clone());
            return;
        }
        for to in from + 1..=letters.len() {
            if is_prime(&letters[from..to]) {
                acc.push(Word::from_letters(letters[from..to].iter().copied()));
                go(letters, to, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(w.letters(), 0, &mut Vec::new(), &mut out);
    out
}

/// All distinct words reachable from `w` by one swap, by trying every
/// decomposition into two adjacent nonempty balanced subwords.
pub fn swap_neighbors(w: &Word) -> BTreeSet<Word> {
    let letters = w.letters();
    let n = letters.len();
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if !is_balanced(&letters[i..j]) {
                continue;
            }
            for k in j + 1..=n {
                if !is_balanced(&letters[j..k]) {
                    continue;
                }
                let mut swapped: Vec<Letter> = letters[..i].to_vec();
                swapped.extend_from_slice(&letters[j..k]);
                swapped.extend_from_slice(&letters[i..j]);
                swapped.extend_from_slice(&letters[k..]);
                if swapped != letters {
                    out.insert(Word::from_letters(swapped));
                }
            }
        }
    }
    out
}

/// The equivalence class of `w` by breadth-first closure over
/// [`swap_neighbors`].
pub fn equivalence_class(w: &Word) -> BTreeSet<Word> {
    let mut visited: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    visited.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(x) = queue.pop_front() {
        for v in swap_neighbors(&x) {
            if visited.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    visited
}

/// Alphabetical minimum through string comparison ('L' < 'R' in ASCII).
pub fn min_by_string<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Word {
    words
        .into_iter()
        .min_by_key(|w| w.to_string())
        .expect("nonempty class")
        .clone()
}

/// Definitional reducedness oracle: no subword is an upper prime followed
/// by a lower prime.
pub fn has_ud_subword(w: &Word) -> bool {
    let letters = w.letters();
    let n = letters.len();
    for i in 0..n {
        for j in i + 1..n {
            if !is_upper_prime(&letters[i..j]) {
                continue;
            }
            for k in j + 1..=n {
                if is_lower_prime(&letters[j..k]) {
                    return true;
                }
            }
        }
    }
    false
}

/// Checks the normal-form shape `L^a (RL)^{k_1} R … (RL)^{k_m} R L^b` with
/// `a + b = m` directly on the rendered string, returning `(a, b, ks)`.
pub fn parse_reduced_shape(w: &Word) -> Option<(usize, usize, Vec<usize>)> {
    let s = w.to_string();
    let bytes = s.as_bytes();
    let a = bytes.iter().take_while(|&&c| c == b'L').count();
    if a == bytes.len() {
        return if a == 0 {
            Some((0, 0, Vec::new()))
        } else {
            None
        };
    }
    let b = bytes.iter().rev().take_while(|&&c| c == b'L').count();
    let mid = &s[a..s.len() - b];
    if !mid.starts_with('R') || !mid.ends_with('R') || mid.contains("LL") {
        return None;
    }
    let mut ks = Vec::new();
    let mut pairs = 0usize;
    let mut chars = mid.as_bytes().iter().peekable();
    while let Some(&c) = chars.next() {
        if c != b'R' {
            return None;
        }
        if chars.peek() == Some(&&b'L') {
            chars.next();
            pairs += 1;
        } else {
            ks.push(pairs);
            pairs = 0;
        }
    }
    if a + b != ks.len() {
        return None;
    }
    Some((a, b, ks))
}

/// All words of the given length.
pub fn all_words(len: usize) -> Vec<Word> {
    (0..1usize << len)
        .map(|bits| {
            Word::from_letters((0..len).map(|i| {
                if bits >> i & 1 == 1 {
                    Letter::R
                } else {
                    Letter::L
                }
            }))
        })
        .collect()
}
