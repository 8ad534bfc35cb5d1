//! Randomized invariants tying the modules together: the indexed detector
//! against the brute-force oracle, constructions against the detector, and
//! the closed-form counting against materialized sets.

use proptest::prelude::*;

use progfree::claims::find_3ap_nondiv;
use progfree::density::{
    DensityKind, IntervalFamily, density_profile, member_count, theoretical_densities,
};
use progfree::{
    ExecMode, PermutationStream, ProgressionPattern, Rational, SequenceView, SignPolicy,
    contains_progression_with, find_progression, find_progression_filtered, naive_find,
    rearrange_progression_free, verify_witness,
};

fn small_pattern() -> impl Strategy<Value = ProgressionPattern> {
    // Coefficient sums stay <= 8 so occurrences fit inside tiny sequences.
    prop::collection::vec(1u32..=5, 2..=3)
        .prop_filter("coefficient sum <= 8", |c| c.iter().sum::<u32>() <= 8)
        .prop_map(|c| ProgressionPattern::new(c).unwrap())
}

fn permutation(n: i64) -> impl Strategy<Value = Vec<i64>> {
    Just((1..=n).collect::<Vec<i64>>()).prop_shuffle()
}

fn distinct_values() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::btree_set(-60i64..=60, 1..=20).prop_map(|s| s.into_iter().collect())
}

fn odd_coefficient() -> impl Strategy<Value = u32> {
    (0u32..=2).prop_map(|x| 2 * x + 1)
}

proptest! {
    #[test]
    fn detector_agrees_with_oracle(
        perm in (3i64..=8).prop_flat_map(permutation),
        pattern in small_pattern(),
        positive_only in any::<bool>(),
    ) {
        let policy = if positive_only { SignPolicy::PositiveOnly } else { SignPolicy::Both };
        let seq = SequenceView::new(perm).unwrap();
        let fast = find_progression(&seq, &pattern, policy);
        let slow = naive_find(&seq, &pattern, policy).unwrap();
        // Same least witness, not just the same verdict.
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn witnesses_are_sound(
        perm in (4i64..=10).prop_flat_map(permutation),
        pattern in small_pattern(),
    ) {
        let seq = SequenceView::new(perm).unwrap();
        if let Some(w) = find_progression(&seq, &pattern, SignPolicy::Both) {
            prop_assert_eq!(verify_witness(&seq, &pattern, &w, SignPolicy::Both), Ok(true));
        }
        if let Some(w) = find_progression_filtered(&seq, 3, SignPolicy::Both) {
            let ap3 = ProgressionPattern::plain_ap(3).unwrap();
            prop_assert_eq!(verify_witness(&seq, &ap3, &w, SignPolicy::Both), Ok(true));
            prop_assert!(w.d % 3 != 0);
        }
    }

    #[test]
    fn positive_policy_implies_both(
        perm in (3i64..=9).prop_flat_map(permutation),
        pattern in small_pattern(),
    ) {
        let seq = SequenceView::new(perm).unwrap();
        if find_progression(&seq, &pattern, SignPolicy::PositiveOnly).is_some() {
            prop_assert!(find_progression(&seq, &pattern, SignPolicy::Both).is_some());
        }
    }

    #[test]
    fn reversal_duality_for_plain_aps(perm in (3i64..=9).prop_flat_map(permutation)) {
        let ap3 = ProgressionPattern::plain_ap(3).unwrap();
        let seq = SequenceView::from_slice(&perm).unwrap();
        let negated: Vec<i64> = perm.iter().map(|&v| -v).collect();
        let neg_seq = SequenceView::new(negated).unwrap();
        prop_assert_eq!(
            find_progression(&seq, &ap3, SignPolicy::Both).is_some(),
            find_progression(&neg_seq, &ap3, SignPolicy::Both).is_some()
        );
    }

    #[test]
    fn existence_check_matches_search(
        perm in (3i64..=9).prop_flat_map(permutation),
        pattern in small_pattern(),
    ) {
        let seq = SequenceView::new(perm).unwrap();
        let found = find_progression(&seq, &pattern, SignPolicy::Both).is_some();
        prop_assert_eq!(
            contains_progression_with(&seq, &pattern, SignPolicy::Both, ExecMode::Parallel),
            found
        );
        prop_assert_eq!(
            contains_progression_with(&seq, &pattern, SignPolicy::Both, ExecMode::Sequential),
            found
        );
    }

    #[test]
    fn rearrangement_is_a_clean_permutation(
        values in distinct_values(),
        r in odd_coefficient(),
        s in odd_coefficient(),
    ) {
        let pattern = ProgressionPattern::three_term(r, s).unwrap();
        let arranged = rearrange_progression_free(&values, &pattern).unwrap();
        // Same multiset.
        let mut sorted = arranged.clone();
        sorted.sort_unstable();
        prop_assert_eq!(&sorted, &values);
        // Evens first, wherever the parity split happens (sets of size <= 2
        // are emitted ascending as-is).
        if values.len() > 2 {
            let first_odd = arranged.iter().position(|v| v.rem_euclid(2) == 1);
            if let Some(at) = first_odd {
                prop_assert!(arranged[at..].iter().all(|v| v.rem_euclid(2) == 1));
            }
        }
        // No occurrence, by the independent oracle.
        let seq = SequenceView::new(arranged).unwrap();
        prop_assert_eq!(naive_find(&seq, &pattern, SignPolicy::Both).unwrap(), None);
    }

    #[test]
    fn streaming_nondiv_scan_matches_detector(
        perm in (5i64..=40).prop_flat_map(permutation),
        k_div in 2u32..=6,
    ) {
        let budget = perm.len() as u64;
        let streamed = find_3ap_nondiv(perm.iter().copied(), k_div, SignPolicy::Both, budget)
            .unwrap();
        let seq = SequenceView::from_slice(&perm).unwrap();
        let indexed = find_progression_filtered(&seq, k_div, SignPolicy::Both);
        prop_assert_eq!(streamed.witness().is_some(), indexed.is_some());
    }

    #[test]
    fn dense_family_counts_match_materialization(
        intervals in prop::collection::vec((1i64..=400, 0i64..=30), 1..=6),
        symmetric in any::<bool>(),
        n in 0i64..=900,
    ) {
        // Turn random (start, len) pairs into disjoint increasing intervals.
        let mut normalized = Vec::new();
        let mut cursor = 0i64;
        for (gap, len) in intervals {
            let lo = cursor + gap;
            let hi = lo + len;
            normalized.push((lo, hi));
            cursor = hi + 1;
        }
        let family = IntervalFamily::custom(normalized.clone(), symmetric, false).unwrap();
        let mut set = std::collections::BTreeSet::new();
        for (lo, hi) in normalized {
            set.extend(lo..=hi);
            if symmetric {
                set.extend(-hi..=-lo);
            }
        }
        let expected = set.range(-n..=n.max(1)).filter(|&&v| v >= -n && v <= n && v != 0).count()
            as u64;
        let expected = if symmetric {
            expected
        } else {
            set.range(1..=n.max(1)).filter(|&&v| v <= n).count() as u64
        };
        prop_assert_eq!(member_count(&family, n), expected);
    }
}

proptest! {
    #[test]
    fn rs_witness_scan_never_returns_a_false_witness(
        perm in (10i64..=40).prop_flat_map(permutation),
        r in 1u32..=4,
        s in 1u32..=4,
    ) {
        let budget = perm.len() as u64;
        let outcome = progfree::claims::find_rs_witness(perm.iter().copied(), r, s, budget)
            .unwrap();
        if let Some(w) = outcome.witness() {
            let seq = SequenceView::from_slice(&perm).unwrap();
            let pattern = ProgressionPattern::three_term(r, s).unwrap();
            prop_assert_eq!(verify_witness(&seq, &pattern, w, SignPolicy::Both), Ok(true));
        }
    }
}

#[test]
fn detector_matches_oracle_on_every_small_permutation() {
    // Exhaustive, not sampled: all 720 permutations of 1..=6 against a
    // spread of patterns, under both sign conventions.
    let patterns = [
        ProgressionPattern::plain_ap(3).unwrap(),
        ProgressionPattern::plain_ap(4).unwrap(),
        ProgressionPattern::three_term(1, 2).unwrap(),
        ProgressionPattern::three_term(2, 3).unwrap(),
    ];
    let mut values: Vec<i64> = (1..=6).collect();
    loop {
        let seq = SequenceView::from_slice(&values).unwrap();
        for pattern in &patterns {
            for policy in [SignPolicy::Both, SignPolicy::PositiveOnly] {
                assert_eq!(
                    find_progression(&seq, pattern, policy),
                    naive_find(&seq, pattern, policy).unwrap(),
                    "on {values:?} pattern {pattern} policy {policy}"
                );
            }
        }
        // Lexicographic successor, inline to keep this test self-contained.
        let n = values.len();
        let Some(i) = (1..n).rev().find(|&i| values[i - 1] < values[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| values[j] > values[i - 1]).unwrap();
        values.swap(i - 1, j);
        values[i..].reverse();
    }
}

#[test]
fn stream_prefixes_cover_their_blocks() {
    let cases: Vec<PermutationStream> = vec![
        PermutationStream::ap6_free_integers(2).unwrap(),
        PermutationStream::dense_ap3_free_integers(3).unwrap(),
        PermutationStream::ap4_free_positives(Rational::new(7, 3).unwrap(), 4).unwrap(),
        PermutationStream::rs3_free_integers(
            1,
            1,
            Rational::from_int(6),
            Rational::new(5, 3).unwrap(),
            3,
        )
        .unwrap(),
    ];
    for stream in cases {
        let kind = stream.kind();
        let blocks = stream.blocks().to_vec();
        let has_zero = kind == "z6" || kind == "rs6";
        let mut expected: Vec<i64> = Vec::new();
        if has_zero {
            expected.push(0);
        }
        for b in &blocks {
            expected.extend(b.lo..=b.hi);
            if b.mirrored {
                expected.extend((-b.hi)..=(-b.lo));
            }
        }
        expected.sort_unstable();
        let mut emitted: Vec<i64> = stream.collect();
        emitted.sort_unstable();
        assert_eq!(emitted, expected, "ground set mismatch for {kind}");
    }
}

#[test]
fn envelope_samples_approach_the_closed_form() {
    // Dips and peaks from block 3 on must close in monotonically on the
    // family's theoretical densities.
    let (lower, upper) = theoretical_densities(&DensityKind::Beta4 {
        b: Rational::from_int(2),
    })
    .unwrap();
    let family = IntervalFamily::beta4(Rational::from_int(2), 5_000_000).unwrap();
    let records = density_profile(&family, 4_194_303); // 4^11 - 1
    let dips: Vec<Rational> = records
        .iter()
        .filter(|r| matches!(r.point, progfree::density::PointKind::Dip))
        .map(|r| r.ratio)
        .collect();
    let peaks: Vec<Rational> = records
        .iter()
        .filter(|r| matches!(r.point, progfree::density::PointKind::Peak))
        .map(|r| r.ratio)
        .collect();
    assert!(dips.len() >= 6 && peaks.len() >= 6);
    for w in dips[2..].windows(2) {
        let before = w[0].checked_sub(lower).unwrap().abs();
        let after = w[1].checked_sub(lower).unwrap().abs();
        assert!(after < before, "dip sequence not contracting: {w:?}");
    }
    for w in peaks[2..].windows(2) {
        let before = w[0].checked_sub(upper).unwrap().abs();
        let after = w[1].checked_sub(upper).unwrap().abs();
        assert!(after < before, "peak sequence not contracting: {w:?}");
    }
}
