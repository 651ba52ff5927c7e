//! The swap relation and its finite equivalence classes.
//!
//! When two nonempty balanced words `F` and `G` sit next to each other
//! inside a word, exchanging them is a *swap of type `(F, G)`*. Two words
//! are equivalent exactly when a sequence of swaps connects them; the
//! classes are finite and all members share length and elevation multiset.
//!
//! Reachability under a restricted set of swap types is the word-level
//! counterpart of membership of `X - Y` in the ideal generated by the
//! corresponding commutators, and is what the generating-set checks in
//! [`crate::gens`] build on.

use crate::reduce::{reduce, reduce_step};
use crate::word::Word;
use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

/// Default bound on the size of an enumerated equivalence class.
pub const DEFAULT_CLASS_LIMIT: usize = 100_000;

/// An unordered pair of nonempty balanced words naming a swap type.
///
/// The pair is stored alphabetically sorted, so `(F, G)` and `(G, F)`
/// compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SwapType {
    first: Word,
    second: Word,
}

impl SwapType {
    /// Builds the type for an unordered pair of nonempty balanced words.
    pub fn new(f: Word, g: Word) -> SwapType {
        debug_assert!(!f.is_empty() && f.is_balanced());
        debug_assert!(!g.is_empty() && g.is_balanced());
        if f <= g {
            SwapType {
                first: f,
                second: g,
            }
        } else {
            SwapType {
                first: g,
                second: f,
            }
        }
    }

    /// The alphabetically smaller word of the pair.
    pub fn first(&self) -> &Word {
        &self.first
    }

    /// The alphabetically larger word of the pair.
    pub fn second(&self) -> &Word {
        &self.second
    }

    /// Total length of the two words, i.e. of the subword a swap of this
    /// type rearranges.
    pub fn span(&self) -> usize {
        self.first.len() + self.second.len()
    }
}

impl fmt::Display for SwapType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// Error for class enumerations that outgrow their size bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LimitExceeded {
    /// The bound that was exceeded.
    pub limit: usize,
}

impl fmt::Display for LimitExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "equivalence class grew beyond the limit of {}",
            self.limit
        )
    }
}

/// A finite equivalence class together with its swap graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClass {
    /// All members, alphabetically sorted.
    pub members: Vec<Word>,
    /// Unordered pairs `(x, y)` with `x < y` related by at least one swap.
    pub edges: Vec<(Word, Word)>,
    /// Ordered pairs `(x, y)` where one reduction-algorithm step turns `x`
    /// into `y` (the leftmost `UD` of `x` swapped to `DU`).
    pub reduction_edges: Vec<(Word, Word)>,
}

/// Every word obtainable from `w` by one swap, each with the complete set
/// of swap types realizing it. The word itself is never listed: swaps whose
/// two decomposition halves commute literally are discarded.
pub fn swap_neighbors(w: &Word) -> BTreeMap<Word, BTreeSet<SwapType>> {
    let mut out: BTreeMap<Word, BTreeSet<SwapType>> = BTreeMap::new();
    for_each_swap(w, |swapped, ty| {
        if swapped != *w {
            out.entry(swapped).or_default().insert(ty);
        }
    });
    out
}

/// The set of types realizing a single swap between `x` and `y` (possibly
/// empty). `x == y` is reported only for decompositions whose halves
/// commute literally, i.e. when the "swap" does not move any letters.
pub fn are_swap_related(x: &Word, y: &Word) -> BTreeSet<SwapType> {
    let mut out = BTreeSet::new();
    if x.len() != y.len() {
        return out;
    }
    for_each_swap(x, |swapped, ty| {
        if swapped == *y {
            out.insert(ty);
        }
    });
    out
}

/// Enumerates every decomposition `w = W1·F·G·W2` with `F`, `G` nonempty
/// balanced, and hands the swapped word `W1·G·F·W2` plus the type to `f`.
///
/// Index triples `i < j < k` with both halves balanced are found in O(1)
/// each from the elevation prefix sums.
fn for_each_swap<F: FnMut(Word, SwapType)>(w: &Word, mut f: F) {
    let elev = w.elevation_sequence();
    let n = w.len();
    for i in 0..n {
        for j in (i + 2..n).filter(|&j| elev[j] == elev[i]) {
            for k in (j + 2..=n).filter(|&k| elev[k] == elev[j]) {
                let left = w.subword(i, j);
                let right = w.subword(j, k);
                let mut patch = Vec::with_capacity(k - i);
                patch.extend_from_slice(right.letters());
                patch.extend_from_slice(left.letters());
                let swapped = w.splice(i, k, &patch);
                f(swapped, SwapType::new(left, right));
            }
        }
    }
}

/// Enumerates the full equivalence class of `w` by breadth-first closure
/// under single swaps, recording the swap graph and the reduction-step
/// edges. Fails with [`LimitExceeded`] if the class grows beyond `limit`.
pub fn equivalence_class(w: &Word, limit: usize) -> Result<EquivalenceClass, LimitExceeded> {
    let mut visited: BTreeSet<Word> = BTreeSet::new();
    let mut edges: BTreeSet<(Word, Word)> = BTreeSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    visited.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(x) = queue.pop_front() {
        for v in swap_neighbors(&x).into_keys() {
            let edge = if x < v {
                (x.clone(), v.clone())
            } else {
                (v.clone(), x.clone())
            };
            edges.insert(edge);
            if !visited.contains(&v) {
                if visited.len() >= limit {
                    return Err(LimitExceeded { limit });
                }
                visited.insert(v.clone());
                queue.push_back(v);
            }
        }
    }
    let reduction_edges = visited
        .iter()
        .filter_map(|x| reduce_step(x).map(|y| (x.clone(), y)))
        .collect();
    Ok(EquivalenceClass {
        members: visited.into_iter().collect(),
        edges: edges.into_iter().collect(),
        reduction_edges,
    })
}

/// Whether `x ~ y`. Balanced pairs are decided through their canonical
/// reduced forms; all other pairs fall back to breadth-first search.
pub fn are_equivalent(x: &Word, y: &Word, limit: usize) -> Result<bool, LimitExceeded> {
    if x == y {
        return Ok(true);
    }
    if x.len() != y.len() {
        return Ok(false);
    }
    if x.is_balanced() && y.is_balanced() {
        return Ok(reduce(x) == reduce(y));
    }
    let mut visited: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    visited.insert(x.clone());
    queue.push_back(x.clone());
    while let Some(cur) = queue.pop_front() {
        for v in swap_neighbors(&cur).into_keys() {
            if v == *y {
                return Ok(true);
            }
            if !visited.contains(&v) {
                if visited.len() >= limit {
                    return Err(LimitExceeded { limit });
                }
                visited.insert(v.clone());
                queue.push_back(v);
            }
        }
    }
    Ok(false)
}

fn restricted_neighbors(w: &Word, allowed: &BTreeSet<SwapType>) -> Vec<Word> {
    let n = w.len();
    let mut out = Vec::new();
    for ty in allowed {
        let span = ty.span();
        if span > n {
            continue;
        }
        let fg = ty.first.concat(&ty.second);
        let gf = ty.second.concat(&ty.first);
        if fg == gf {
            continue;
        }
        for s in 0..=n - span {
            let window = &w.letters()[s..s + span];
            if window == fg.letters() {
                out.push(w.splice(s, s + span, gf.letters()));
            } else if window == gf.letters() {
                out.push(w.splice(s, s + span, fg.letters()));
            }
        }
    }
    out
}

/// The closure of `x` under swaps whose type lies in `allowed`.
pub fn restricted_closure(
    x: &Word,
    allowed: &BTreeSet<SwapType>,
    limit: usize,
) -> Result<BTreeSet<Word>, LimitExceeded> {
    let mut visited: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    visited.insert(x.clone());
    queue.push_back(x.clone());
    while let Some(cur) = queue.pop_front() {
        for v in restricted_neighbors(&cur, allowed) {
            if !visited.contains(&v) {
                if visited.len() >= limit {
                    return Err(LimitExceeded { limit });
                }
                visited.insert(v.clone());
                queue.push_back(v);
            }
        }
    }
    Ok(visited)
}

/// Whether a sequence of swaps from `x` to `y` exists using only the
/// `allowed` types. This decides membership of `x - y` in the ideal
/// generated by the commutators of the allowed pairs.
pub fn restricted_reachable(
    x: &Word,
    y: &Word,
    allowed: &BTreeSet<SwapType>,
    limit: usize,
) -> Result<bool, LimitExceeded> {
    if x == y {
        return Ok(true);
    }
    if x.len() != y.len() {
        return Ok(false);
    }
    let mut visited: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    visited.insert(x.clone());
    queue.push_back(x.clone());
    while let Some(cur) = queue.pop_front() {
        for v in restricted_neighbors(&cur, allowed) {
            if v == *y {
                return Ok(true);
            }
            if !visited.contains(&v) {
                if visited.len() >= limit {
                    return Err(LimitExceeded { limit });
                }
                visited.insert(v.clone());
                queue.push_back(v);
            }
        }
    }
    Ok(false)
}

/// Renders the swap graph in DOT format. Plain swap relations become
/// undirected edges; pairs connected by a reduction-algorithm step become
/// directed edges instead.
pub fn swap_graph_dot(class: &EquivalenceClass) -> String {
    let directed: BTreeSet<&(Word, Word)> = class.reduction_edges.iter().collect();
    let mut out = String::from("digraph equivalence_class {\n");
    for m in &class.members {
        let _ = writeln!(out, "    \"{m}\";");
    }
    for (x, y) in &class.edges {
        if directed.contains(&(x.clone(), y.clone())) {
            let _ = writeln!(out, "    \"{x}\" -> \"{y}\";");
        } else if directed.contains(&(y.clone(), x.clone())) {
            let _ = writeln!(out, "    \"{y}\" -> \"{x}\";");
        } else {
            let _ = writeln!(out, "    \"{x}\" -> \"{y}\" [dir=none];");
        }
    }
    out.push_str("}\n");
    out
}
