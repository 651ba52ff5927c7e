//! Reduced words and the reduction algorithm.
//!
//! A word is *reduced* when it contains no subword `U·D` with `U` an upper
//! prime and `D` a lower prime. For balanced words this is equivalent to
//! containing no subword `R L^n R` with `n ≥ 2`, and also to having the
//! shape
//!
//! ```text
//! L^a (RL)^{k_1} R (RL)^{k_2} R … (RL)^{k_m} R L^b        with a + b = m.
//! ```
//!
//! Each equivalence class of balanced words contains exactly one reduced
//! word, which is also the alphabetical minimum of the class. The reduction
//! algorithm reaches it by repeatedly swapping the leftmost `UD` subword to
//! `DU`; every step strictly decreases the word alphabetically, so the
//! algorithm terminates.

use crate::word::{ElevationMultiset, Letter, Word};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Location of a `UD` subword: an upper prime of length `upper_len` starting
/// at `start`, immediately followed by a lower prime of length `lower_len`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UdOccurrence {
    /// Letter index where the upper prime begins.
    pub start: usize,
    /// Length of the upper prime.
    pub upper_len: usize,
    /// Length of the lower prime.
    pub lower_len: usize,
}

/// Errors from [`reduced_params`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReduceError {
    /// The word is not balanced.
    NotBalanced,
    /// The word is not reduced.
    NotReduced,
}

impl fmt::Display for ReduceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReduceError::NotBalanced => f.write_str("word is not balanced"),
            ReduceError::NotReduced => f.write_str("word is not reduced"),
        }
    }
}

/// Error from [`matching_elevation_witness`] when the input constraints
/// (balanced word, `i < j ≤ l(w)`, `e_i ≥ e_j`) do not hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PreconditionViolated;

impl fmt::Display for PreconditionViolated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("witness requires a balanced word and i < j with e_i >= e_j")
    }
}

/// The parameters of a reduced balanced word
/// `L^a (RL)^{k_1} R … (RL)^{k_m} R L^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedParams {
    /// Count `a` of leading `L` letters.
    pub leading: usize,
    /// Count `b` of trailing `L` letters. Always `leading + trailing = m`.
    pub trailing: usize,
    /// The exponents `k_1 … k_m`: the number of `RL` pairs preceding each of
    /// the `m` bare `R` letters.
    pub runs: Vec<usize>,
}

impl ReducedParams {
    /// The number `m` of bare `R` letters, which equals `a + b`.
    pub fn segment_count(&self) -> usize {
        self.runs.len()
    }

    /// Rebuilds the word `L^a (RL)^{k_1} R … (RL)^{k_m} R L^b`.
    pub fn rebuild(&self) -> Word {
        let mut letters = vec![Letter::L; self.leading];
        for &k in &self.runs {
            for _ in 0..k {
                letters.push(Letter::R);
                letters.push(Letter::L);
            }
            letters.push(Letter::R);
        }
        letters.resize(letters.len() + self.trailing, Letter::L);
        Word::from_letters(letters)
    }

    /// The elevation multiset in closed form, without walking the word:
    /// `{0,-1,…,-a} ∪ {0,1,…,b} ∪ {(i-a)^{μ_i}}` where `μ_0 = k_1`,
    /// `μ_i = k_i + 1 + k_{i+1}` for `1 ≤ i ≤ m-1`, and `μ_m = k_m`.
    pub fn elevation_multiset(&self) -> ElevationMultiset {
        let mut out = ElevationMultiset::default();
        let m = self.runs.len();
        if m == 0 {
            // L^a L^b is balanced only when empty.
            out.insert(0, 1);
            return out;
        }
        let a = self.leading as i32;
        let b = self.trailing as i32;
        for v in -a..=0 {
            out.insert(v, 1);
        }
        for v in 0..=b {
            out.insert(v, 1);
        }
        for i in 0..=m {
            let mu = if i == 0 {
                self.runs[0]
            } else if i == m {
                self.runs[m - 1]
            } else {
                self.runs[i - 1] + 1 + self.runs[i]
            };
            out.insert(i as i32 - a, mu as u32);
        }
        out
    }
}

/// True iff `w` contains no subword `R L^n R` with `n ≥ 2`.
///
/// A `UD` subword always contains such a run (the last `R` of `U` and the
/// first `R` of `D` enclose at least two `L` letters), so this test also
/// rules out `UD` subwords; on balanced words the two characterizations
/// coincide exactly. Debug builds cross-check against the `UD` scan.
pub fn is_reduced(w: &Word) -> bool {
    let reduced = !has_long_descent(w);
    debug_assert!(
        !w.is_balanced() || reduced == find_leftmost_ud(w).is_none(),
        "RL^nR and UD characterizations must agree on balanced words"
    );
    reduced
}

fn has_long_descent(w: &Word) -> bool {
    let ls = w.letters();
    let n = ls.len();
    let mut i = 0;
    while i < n {
        if ls[i] == Letter::L {
            i += 1;
            continue;
        }
        let mut j = i + 1;
        while j < n && ls[j] == Letter::L {
            j += 1;
        }
        if j < n && j - i > 2 {
            return true;
        }
        i = j;
    }
    false
}

/// Finds the `UD` subword with the smallest start index, if any.
///
/// A prime starting at index `s` must end at the first return of the
/// elevation sequence to `e_s`, so each start index admits at most one
/// candidate pair: "leftmost" means minimal start index with no further
/// tie-breaking.
pub fn find_leftmost_ud(w: &Word) -> Option<UdOccurrence> {
    let elev = w.elevation_sequence();
    let n = w.len();
    for start in 0..n {
        if w.letters()[start] != Letter::R {
            continue;
        }
        let base = elev[start];
        let Some(mid) = first_return(&elev, start, base) else {
            continue;
        };
        if mid >= n || w.letters()[mid] != Letter::L {
            continue;
        }
        let Some(end) = first_return(&elev, mid, base) else {
            continue;
        };
        return Some(UdOccurrence {
            start,
            upper_len: mid - start,
            lower_len: end - mid,
        });
    }
    None
}

fn first_return(elev: &[i32], from: usize, target: i32) -> Option<usize> {
    (from + 1..elev.len()).find(|&k| elev[k] == target)
}

/// One step of the reduction algorithm: swaps the leftmost `UD` to `DU`.
/// Returns `None` when no `UD` subword exists.
pub fn reduce_step(w: &Word) -> Option<Word> {
    let occ = find_leftmost_ud(w)?;
    let upper_end = occ.start + occ.upper_len;
    let end = upper_end + occ.lower_len;
    let mut patch = Vec::with_capacity(occ.upper_len + occ.lower_len);
    patch.extend_from_slice(&w.letters()[upper_end..end]);
    patch.extend_from_slice(&w.letters()[occ.start..upper_end]);
    Some(w.splice(occ.start, end, &patch))
}

/// Runs the reduction algorithm to completion.
///
/// For balanced input the output is the unique reduced word of the
/// equivalence class, which is also its alphabetical minimum. Unbalanced
/// input is accepted and still terminates, but no canonicity is claimed.
pub fn reduce(w: &Word) -> Word {
    let mut cur = w.clone();
    while let Some(next) = reduce_step(&cur) {
        debug_assert!(next < cur, "each reduction step must decrease the word");
        cur = next;
    }
    cur
}

/// Like [`reduce`] but records the whole trajectory, starting with the
/// input and ending with the reduced word.
pub fn reduce_trace(w: &Word) -> Vec<Word> {
    let mut trace = vec![w.clone()];
    while let Some(next) = reduce_step(trace.last().expect("nonempty")) {
        trace.push(next);
    }
    trace
}

/// Extracts the unique parameters `(a, k_1…k_m, b)` of a reduced balanced
/// word. [`ReducedParams::rebuild`] round-trips.
pub fn reduced_params(w: &Word) -> Result<ReducedParams, ReduceError> {
    if !w.is_balanced() {
        return Err(ReduceError::NotBalanced);
    }
    if !is_reduced(w) {
        return Err(ReduceError::NotReduced);
    }
    let ls = w.letters();
    let n = ls.len();
    let leading = ls.iter().take_while(|&&a| a == Letter::L).count();
    if leading == n {
        // A balanced word of L letters only is the empty word.
        return Ok(ReducedParams {
            leading: 0,
            trailing: 0,
            runs: Vec::new(),
        });
    }
    let trailing = ls.iter().rev().take_while(|&&a| a == Letter::L).count();
    let mid = &ls[leading..n - trailing];
    let mut runs = Vec::new();
    let mut pairs = 0usize;
    let mut p = 0;
    while p < mid.len() {
        debug_assert_eq!(mid[p], Letter::R, "factors of a reduced word start with R");
        if p + 1 < mid.len() && mid[p + 1] == Letter::L {
            pairs += 1;
            p += 2;
        } else {
            runs.push(pairs);
            pairs = 0;
            p += 1;
        }
    }
    let params = ReducedParams {
        leading,
        trailing,
        runs,
    };
    debug_assert_eq!(params.leading + params.trailing, params.segment_count());
    debug_assert_eq!(params.rebuild(), *w);
    Ok(params)
}

/// Matching-elevation witness: given a balanced word and indices `i < j` with
/// `e_i ≥ e_j`, finds an elevation `e ∈ [e_j, e_i]` attained both at some
/// `i' ≤ i` and some `j' ≥ j`. Among the valid elevations the smallest is
/// chosen, then the largest `i'` and the smallest `j'`.
pub fn matching_elevation_witness(
    w: &Word,
    i: usize,
    j: usize,
) -> Result<(i32, usize, usize), PreconditionViolated> {
    let elev = w.elevation_sequence();
    if !w.is_balanced() || i >= j || j >= elev.len() || elev[i] < elev[j] {
        return Err(PreconditionViolated);
    }
    for e in elev[j]..=elev[i] {
        let left = (0..=i).rev().find(|&k| elev[k] == e);
        let right = (j..elev.len()).find(|&k| elev[k] == e);
        if let (Some(best_i), Some(best_j)) = (left, right) {
            return Ok((e, best_i, best_j));
        }
    }
    unreachable!("a balanced word always attains a matching elevation on both sides")
}
