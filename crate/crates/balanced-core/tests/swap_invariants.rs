mod oracle;

use balanced_core::gens::enumerate_primes;
use balanced_core::prime::{is_prime, prime_kind, PrimeKind};
use balanced_core::swap::{
    are_equivalent, are_swap_related, equivalence_class, restricted_closure, swap_neighbors,
    SwapType,
};
use balanced_core::word::{balanced_words, word, Word};
use std::collections::{BTreeMap, BTreeSet};

/// Production neighbor enumeration agrees with the exhaustive
/// subword-counting oracle on every word up to length 10.
#[test]
fn neighbors_match_oracle_exhaustive() {
    for len in 0..=10 {
        for w in oracle::all_words(len) {
            let produced: BTreeSet<Word> = swap_neighbors(&w).into_keys().collect();
            assert_eq!(produced, oracle::swap_neighbors(&w), "{w}");
        }
    }
}

/// Swaps preserve length and elevation multiset; the relation is symmetric
/// with identical realizing types. Exhaustive up to length 12.
#[test]
fn neighbors_preserve_multiset_exhaustive() {
    for len in 0..=12 {
        for w in oracle::all_words(len) {
            let multiset = w.elevation_multiset();
            for (v, types) in swap_neighbors(&w) {
                assert_eq!(v.len(), w.len());
                assert_eq!(v.elevation_multiset(), multiset, "{w} ~ {v}");
                assert!(!types.is_empty());
                assert_eq!(are_swap_related(&w, &v), types);
                assert_eq!(are_swap_related(&v, &w), types);
            }
        }
    }
}

/// Swap-neighbor trichotomy for a product of an upper and a lower prime:
/// each neighbor of `UD` is exactly one of `DU`, `U'D`, or `UD'`.
#[test]
fn ud_neighbor_trichotomy_exhaustive() {
    let uppers = enumerate_primes(PrimeKind::Upper, 10);
    let lowers = enumerate_primes(PrimeKind::Lower, 10);
    for u in &uppers {
        for d in &lowers {
            if u.len() + d.len() > 12 {
                continue;
            }
            let ud = u.concat(d);
            let du = d.concat(u);
            let u_neighbors: BTreeSet<Word> = swap_neighbors(u).into_keys().collect();
            let d_neighbors: BTreeSet<Word> = swap_neighbors(d).into_keys().collect();
            for w in swap_neighbors(&ud).into_keys() {
                let is_du = w == du;
                let prefix = w.subword(0, u.len());
                let suffix = w.subword(u.len(), w.len());
                let is_changed_upper = suffix == *d && u_neighbors.contains(&prefix);
                let is_changed_lower = prefix == *u && d_neighbors.contains(&suffix);
                let holds = [is_du, is_changed_upper, is_changed_lower];
                assert_eq!(
                    holds.iter().filter(|&&b| b).count(),
                    1,
                    "neighbor {w} of ({u})({d}) matched {holds:?}"
                );
            }
        }
    }
}

/// The class of a prime consists of primes of the same kind and length.
#[test]
fn prime_classes_stay_prime_exhaustive() {
    for kind in [PrimeKind::Upper, PrimeKind::Lower] {
        for p in enumerate_primes(kind, 12) {
            let class = equivalence_class(&p, 100_000).unwrap();
            for member in &class.members {
                assert_eq!(member.len(), p.len());
                assert!(is_prime(member));
                assert_eq!(prime_kind(member), Ok(kind));
            }
        }
    }
}

/// The reduce-based equivalence decision agrees with breadth-first class
/// membership for every pair of balanced words up to length 10.
#[test]
fn equivalence_paths_agree_exhaustive() {
    for len in (2..=10).step_by(2) {
        let words = balanced_words(len);
        // class ids from the naive oracle
        let mut class_of: BTreeMap<Word, usize> = BTreeMap::new();
        let mut next = 0;
        for w in &words {
            if class_of.contains_key(w) {
                continue;
            }
            for member in oracle::equivalence_class(w) {
                class_of.insert(member, next);
            }
            next += 1;
        }
        for x in &words {
            for y in &words {
                let expected = class_of[x] == class_of[y];
                assert_eq!(are_equivalent(x, y, 100_000), Ok(expected), "{x} ~ {y}");
            }
        }
    }
}

/// Closure under all swaps equals closure under only
/// (upper prime, lower prime) swaps, for every balanced word up to
/// length 12.
#[test]
fn upper_lower_swaps_suffice_exhaustive() {
    let uppers = enumerate_primes(PrimeKind::Upper, 10);
    let lowers = enumerate_primes(PrimeKind::Lower, 10);
    let mut allowed: BTreeSet<SwapType> = BTreeSet::new();
    for u in &uppers {
        for d in &lowers {
            if u.len() + d.len() <= 12 {
                allowed.insert(SwapType::new(u.clone(), d.clone()));
            }
        }
    }
    for len in (2..=12).step_by(2) {
        let mut seen: BTreeSet<Word> = BTreeSet::new();
        for w in balanced_words(len) {
            if !seen.insert(w.clone()) {
                continue;
            }
            let full: BTreeSet<Word> = equivalence_class(&w, 100_000)
                .unwrap()
                .members
                .into_iter()
                .collect();
            let restricted = restricted_closure(&w, &allowed, 100_000).unwrap();
            assert_eq!(full, restricted, "closures differ from {w}");
            seen.extend(full);
        }
    }
}

/// A six-word class of length-12 upper primes whose swap
/// graph is the complete graph minus the two stated edges.
#[test]
fn six_word_class_structure() {
    let class = equivalence_class(&word("RRLRLRRLRLLL"), 100).unwrap();
    let shorthand = |z: &str| {
        let inner: String = z
            .chars()
            .map(|c| if c == 'U' { "RL" } else { "LR" }.to_string())
            .collect();
        word(&format!("RR{inner}LL"))
    };
    let expected: Vec<Word> = ["DDUU", "DUDU", "DUUD", "UDDU", "UDUD", "UUDD"]
        .iter()
        .map(|z| shorthand(z))
        .collect();
    let mut sorted = expected.clone();
    sorted.sort();
    assert_eq!(class.members, sorted);
    assert_eq!(class.edges.len(), 13);
    let missing_a = (shorthand("UUDD"), shorthand("DUDU"));
    let missing_b = (shorthand("DDUU"), shorthand("UDUD"));
    for (x, y) in [missing_a, missing_b] {
        assert!(are_swap_related(&x, &y).is_empty());
        let key = if x < y { (x, y) } else { (y, x) };
        assert!(!class.edges.contains(&key));
    }

    let dot = balanced_core::swap::swap_graph_dot(&class);
    let node_lines = dot
        .lines()
        .filter(|l| l.contains('"') && !l.contains(" -> "))
        .count();
    let edge_lines: Vec<&str> = dot.lines().filter(|l| l.contains(" -> ")).collect();
    let directed = edge_lines
        .iter()
        .filter(|l| !l.contains("[dir=none]"))
        .count();
    assert_eq!(node_lines, 6);
    assert_eq!(edge_lines.len(), 13);
    assert_eq!(directed, 5, "every non-reduced member has one step");
}

/// Every class edge is realized by at least one swap, and every related
/// member pair appears as an edge.
#[test]
fn class_edges_are_exactly_the_related_pairs() {
    for text in ["RRLRLRRLRLLL", "RRLRRLLL", "RLRRLLRL"] {
        let w = word(text);
        let class = equivalence_class(&w, 100_000).unwrap();
        let edges: BTreeSet<(Word, Word)> = class.edges.iter().cloned().collect();
        for (i, x) in class.members.iter().enumerate() {
            for y in class.members.iter().skip(i + 1) {
                let related = !are_swap_related(x, y).is_empty();
                assert_eq!(edges.contains(&(x.clone(), y.clone())), related);
            }
        }
        // reduction edges point along the algorithm's steps
        for (x, y) in &class.reduction_edges {
            assert!(y < x);
            assert!(!are_swap_related(x, y).is_empty());
        }
    }
}
