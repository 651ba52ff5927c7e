mod oracle;

use balanced_core::reduce::{
    is_reduced, matching_elevation_witness, reduce, reduce_trace, reduced_params,
};
use balanced_core::word::{balanced_words, Word};

/// The reduction algorithm lands on the unique reduced word of the class,
/// which is the alphabetical minimum found by breadth-first search.
/// Exhaustive over balanced words up to length 12.
#[test]
fn reduce_reaches_the_class_minimum_exhaustive() {
    for len in (0..=12).step_by(2) {
        let mut seen: std::collections::BTreeSet<Word> = std::collections::BTreeSet::new();
        for w in balanced_words(len) {
            if seen.contains(&w) {
                // class already verified from an earlier member
                assert!(seen.contains(&reduce(&w)));
                continue;
            }
            let class = oracle::equivalence_class(&w);
            let minimum = oracle::min_by_string(&class);
            let reduced_members: Vec<&Word> = class.iter().filter(|m| is_reduced(m)).collect();
            assert_eq!(
                reduced_members,
                [&minimum],
                "class of {w} must contain exactly one reduced word"
            );
            for member in &class {
                assert_eq!(reduce(member), minimum, "reduce({member})");
            }
            seen.extend(class);
        }
    }
}

/// Each reduction step strictly decreases the word alphabetically.
/// Exhaustive over balanced words up to length 14.
#[test]
fn reduction_steps_decrease_exhaustive() {
    for len in (2..=14).step_by(2) {
        for w in balanced_words(len) {
            let trace = reduce_trace(&w);
            for pair in trace.windows(2) {
                assert!(pair[1] < pair[0], "step {} -> {}", pair[0], pair[1]);
            }
            assert!(is_reduced(trace.last().unwrap()));
        }
    }
}

/// The scan for `R L^n R` runs, the definitional `UD`-subword scan, and
/// parseability into the normal-form shape agree on every balanced word up
/// to length 14; the extracted parameters agree with the oracle parse.
#[test]
fn reduced_characterizations_agree_exhaustive() {
    for len in (0..=14).step_by(2) {
        for w in balanced_words(len) {
            let by_scan = is_reduced(&w);
            let by_ud = !oracle::has_ud_subword(&w);
            let by_shape = oracle::parse_reduced_shape(&w);
            assert_eq!(by_scan, by_ud, "{w}");
            assert_eq!(by_scan, by_shape.is_some(), "{w}");
            if let Some((a, b, ks)) = by_shape {
                let params = reduced_params(&w).unwrap();
                assert_eq!((params.leading, params.trailing), (a, b));
                assert_eq!(params.runs, ks);
                assert_eq!(params.rebuild(), w);
            } else {
                assert!(reduced_params(&w).is_err());
            }
        }
    }
}

/// The closed-form elevation multiset equals the directly computed one for
/// every reduced balanced word up to length 14.
#[test]
fn closed_form_multiset_exhaustive() {
    for len in (0..=14).step_by(2) {
        for w in balanced_words(len) {
            if !is_reduced(&w) {
                continue;
            }
            let params = reduced_params(&w).unwrap();
            assert_eq!(
                params.elevation_multiset(),
                w.elevation_multiset(),
                "closed form differs on {w}"
            );
        }
    }
}

/// The matching-elevation witness satisfies its contract for every balanced
/// word up to length 10 and every valid index pair.
#[test]
fn witness_postcondition_exhaustive() {
    for len in (2..=10).step_by(2) {
        for w in balanced_words(len) {
            let elev = w.elevation_sequence();
            for i in 0..elev.len() {
                for j in i + 1..elev.len() {
                    if elev[i] < elev[j] {
                        assert!(matching_elevation_witness(&w, i, j).is_err());
                        continue;
                    }
                    let (e, ii, jj) = matching_elevation_witness(&w, i, j).unwrap();
                    assert!(elev[j] <= e && e <= elev[i]);
                    assert!(ii <= i && j <= jj);
                    assert_eq!(elev[ii], e);
                    assert_eq!(elev[jj], e);
                }
            }
        }
    }
}

/// Not claimed by the theory, but observed to hold at small lengths:
/// equivalent unbalanced words also share their reduction output.
#[test]
fn unbalanced_reduce_hypothesis_small() {
    for len in 1..=8 {
        for w in oracle::all_words(len) {
            if w.is_balanced() {
                continue;
            }
            let out = reduce(&w);
            for member in oracle::equivalence_class(&w) {
                assert_eq!(reduce(&member), out, "class of {w}");
            }
        }
    }
}
