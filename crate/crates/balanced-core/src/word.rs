//! Words over the two-letter alphabet `{L, R}`.
//!
//! A word is balanced when both letters occur equally often. Attaching the
//! weight `+1` to `R` and `-1` to `L`, the partial sums of a word's weights
//! form its *elevation sequence*; the multiset of those values is the
//! *elevation multiset*, which is invariant under the swap relation (see
//! [`crate::swap`]). Words are ordered alphabetically with `L < R` and a
//! strict prefix preceding any of its extensions, e.g. `LLRR < RRLL` and
//! `LL < LLR`.
//!
//! Words are immutable values: every operation returns a new word, so they
//! can be shared freely between threads and memoized without care.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// One of the two generators.
///
/// The declaration order gives the alphabetical order `L < R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// The lowering letter, weight `-1`.
    L,
    /// The raising letter, weight `+1`.
    R,
}

impl Letter {
    /// Weight used for elevation: `+1` for `R`, `-1` for `L`.
    pub fn weight(self) -> i32 {
        match self {
            Letter::R => 1,
            Letter::L => -1,
        }
    }

    /// The other letter.
    pub fn flipped(self) -> Letter {
        match self {
            Letter::L => Letter::R,
            Letter::R => Letter::L,
        }
    }
}

/// A finite word over `{L, R}`. The empty word is allowed.
///
/// `Ord` is alphabetical order: `L < R` letterwise, and a strict prefix
/// comes before any extension. This is exactly the derived lexicographic
/// order on the letter sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

/// Error returned when parsing a word from text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvalidCharacter {
    /// Byte offset of the offending character.
    pub position: usize,
}

impl fmt::Display for InvalidCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid character at position {}: words use only 'L' and 'R'",
            self.position
        )
    }
}

impl Word {
    /// The empty word.
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// Builds a word from letters.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        Word(letters.into_iter().collect())
    }

    /// Parses text containing only `L`/`R` (lowercase accepted).
    /// The empty string parses to the empty word.
    pub fn parse(text: &str) -> Result<Word, InvalidCharacter> {
        let mut letters = Vec::with_capacity(text.len());
        for (position, c) in text.char_indices() {
            match c {
                'L' | 'l' => letters.push(Letter::L),
                'R' | 'r' => letters.push(Letter::R),
                _ => return Err(InvalidCharacter { position }),
            }
        }
        Ok(Word(letters))
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The letters as a slice.
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// True iff `L` and `R` occur equally often. The empty word is balanced.
    pub fn is_balanced(&self) -> bool {
        self.0.iter().map(|a| a.weight()).sum::<i32>() == 0
    }

    /// The elevation sequence: `len() + 1` partial sums of letter weights,
    /// starting at 0. Defined for every word; for a balanced word it also
    /// ends at 0.
    pub fn elevation_sequence(&self) -> Vec<i32> {
        let mut seq = Vec::with_capacity(self.0.len() + 1);
        let mut e = 0;
        seq.push(e);
        for a in &self.0 {
            e += a.weight();
            seq.push(e);
        }
        seq
    }

    /// The multiset of elevation-sequence values.
    pub fn elevation_multiset(&self) -> ElevationMultiset {
        ElevationMultiset::from_values(self.elevation_sequence())
    }

    /// Replaces every `L` by `R` and vice versa. The elevation sequence of
    /// the result is the pointwise negation of this word's.
    pub fn flip(&self) -> Word {
        Word(self.0.iter().map(|a| a.flipped()).collect())
    }

    /// The subword spanning letter positions `start..end`.
    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Replaces the letters in `start..end` with `patch`, which must have
    /// the same length as the range.
    pub(crate) fn splice(&self, start: usize, end: usize, patch: &[Letter]) -> Word {
        debug_assert_eq!(end - start, patch.len());
        let mut letters = self.0.clone();
        letters[start..end].copy_from_slice(patch);
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.0 {
            f.write_str(match a {
                Letter::L => "L",
                Letter::R => "R",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = InvalidCharacter;

    fn from_str(s: &str) -> Result<Word, InvalidCharacter> {
        Word::parse(s)
    }
}

/// A multiset of integer elevation values with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ElevationMultiset {
    entries: alloc::collections::BTreeMap<i32, u32>,
}

impl ElevationMultiset {
    /// Builds the multiset of the given values.
    pub fn from_values<I: IntoIterator<Item = i32>>(values: I) -> ElevationMultiset {
        let mut m = ElevationMultiset::default();
        for v in values {
            m.insert(v, 1);
        }
        m
    }

    /// Adds `count` copies of `value`. Zero counts are ignored.
    pub fn insert(&mut self, value: i32, count: u32) {
        if count > 0 {
            *self.entries.entry(value).or_insert(0) += count;
        }
    }

    /// Multiplicity of `value` (0 when absent).
    pub fn multiplicity(&self, value: i32) -> u32 {
        self.entries.get(&value).copied().unwrap_or(0)
    }

    /// Sum of all multiplicities; equals `l(W) + 1` for the word it was
    /// computed from.
    pub fn total(&self) -> u64 {
        self.entries.values().map(|&m| u64::from(m)).sum()
    }

    /// `(value, multiplicity)` pairs sorted by value. This is the canonical
    /// serialization order.
    pub fn to_pairs(&self) -> Vec<(i32, u32)> {
        self.entries.iter().map(|(&v, &m)| (v, m)).collect()
    }
}

impl fmt::Display for ElevationMultiset {
    /// Renders like `{-1, 0^3, 1}` with values in increasing order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for (&v, &m) in &self.entries {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{m}")?;
            }
        }
        f.write_str("}")
    }
}

/// Convenience for tests and examples: parses a word, panicking on bad text.
pub fn word(text: &str) -> Word {
    Word::parse(text).expect("literal word")
}

/// All balanced words of exactly the given length, in alphabetical order.
/// Odd lengths yield the empty list; length 0 yields the empty word.
pub fn balanced_words(len: usize) -> Vec<Word> {
    if !len.is_multiple_of(2) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(len);
    fn go(prefix: &mut Vec<Letter>, len: usize, ls: usize, out: &mut Vec<Word>) {
        if prefix.len() == len {
            out.push(Word::from_letters(prefix.iter().copied()));
            return;
        }
        let rs = prefix.len() - ls;
        // L first keeps the output alphabetical
        if ls < len / 2 {
            prefix.push(Letter::L);
            go(prefix, len, ls + 1, out);
            prefix.pop();
        }
        if rs < len / 2 {
            prefix.push(Letter::R);
            go(prefix, len, ls, out);
            prefix.pop();
        }
    }
    go(&mut prefix, len, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::cmp::Ordering;

    #[test]
    fn parse_round_trip() {
        let w = word("RRLL");
        assert_eq!(w.letters(), &[Letter::R, Letter::R, Letter::L, Letter::L]);
        assert_eq!(w.to_string(), "RRLL");
        assert_eq!(word("rLl").to_string(), "RLL");
        assert_eq!(Word::parse("").unwrap(), Word::empty());
    }

    #[test]
    fn parse_rejects_other_characters() {
        assert_eq!(Word::parse("RxL"), Err(InvalidCharacter { position: 1 }));
        assert_eq!(Word::parse(" RL"), Err(InvalidCharacter { position: 0 }));
    }

    #[test]
    fn balance() {
        assert!(word("RRLL").is_balanced());
        assert!(word("RRLRLL").is_balanced());
        assert!(!word("LLL").is_balanced());
        assert!(Word::empty().is_balanced());
    }

    #[test]
    fn elevation_sequences() {
        assert_eq!(word("RRLL").elevation_sequence(), [0, 1, 2, 1, 0]);
        assert_eq!(
            word("RRRLLRLLLLRRRL").elevation_sequence(),
            [0, 1, 2, 3, 2, 1, 2, 1, 0, -1, -2, -1, 0, 1, 0]
        );
        assert_eq!(Word::empty().elevation_sequence(), [0]);
    }

    #[test]
    fn elevation_multisets() {
        let m = word("RRLL").elevation_multiset();
        assert_eq!(m.to_pairs(), [(0, 2), (1, 2), (2, 1)]);

        let m = word("RRRLLRLLLLRRRL").elevation_multiset();
        assert_eq!(
            m.to_pairs(),
            [(-2, 1), (-1, 2), (0, 4), (1, 4), (2, 3), (3, 1)]
        );
        assert_eq!(m.total(), 15);

        let m = word("RRRLLRLL").elevation_multiset();
        assert_eq!(m.to_pairs(), [(0, 2), (1, 3), (2, 3), (3, 1)]);
        assert_eq!(m.to_string(), "{0^2, 1^3, 2^3, 3}");
    }

    #[test]
    fn alphabetical_order() {
        assert_eq!(word("LLRR").cmp(&word("RRLL")), Ordering::Less);
        assert_eq!(word("LLL").cmp(&word("LR")), Ordering::Less);
        assert_eq!(word("LL").cmp(&word("LLR")), Ordering::Less);
        assert_eq!(word("RL").cmp(&word("RL")), Ordering::Equal);
    }

    #[test]
    fn flip_examples() {
        assert_eq!(word("RL").flip(), word("LR"));
        assert_eq!(word("RRLRLL").flip(), word("LLRLRR"));
        assert_eq!(Word::empty().flip(), Word::empty());
    }
}
