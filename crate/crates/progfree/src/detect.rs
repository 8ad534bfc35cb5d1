//! Progression detection inside permutation prefixes.
//!
//! The scan fixes the first two positions of a candidate occurrence, solves
//! for the common parameter, and extends greedily through the value index;
//! each later term's position is forced because values are distinct. Work is
//! O(n^2 * k) for an n-element sequence and a k-term pattern.

use crate::exec::ExecMode;
use crate::pattern::{ProgressionPattern, SignPolicy};
use crate::sequence::SequenceView;
use crate::witness::Witness;

/// Completes an occurrence whose first two terms sit at `i < j`, if the pair
/// is consistent with the pattern, `policy`, and the extra `admit` filter
/// on the solved parameter.
/// Solves for the pair's parameter; `None` when the pair cannot open an
/// occurrence. Allocation-free: this runs for every ordered pair.
#[inline]
fn pair_parameter(
    values: &[i64],
    r1: i128,
    policy: SignPolicy,
    admit: impl Fn(i64) -> bool,
    i: usize,
    j: usize,
) -> Option<i64> {
    // 128-bit difference: arbitrary i64 inputs may span more than i64::MAX.
    let diff = values[j] as i128 - values[i] as i128;
    let d = if r1 == 1 {
        diff
    } else {
        if diff % r1 != 0 {
            return None;
        }
        diff / r1
    };
    let d = i64::try_from(d).ok()?;
    if d == 0 || !policy.admits(d) || !admit(d) {
        return None;
    }
    Some(d)
}

/// Walks the remaining terms through the value index; returns the final
/// position on success. Allocation-free.
#[inline]
fn chain_end(seq: &SequenceView, coeffs: &[u32], d: i64, j: usize) -> Option<usize> {
    let mut current = seq.values()[j] as i128;
    let mut last_pos = j;
    for &c in &coeffs[1..] {
        current += (c as i128) * (d as i128);
        let value = i64::try_from(current).ok()?;
        let pos = seq.position_of(value)?;
        if pos <= last_pos {
            return None;
        }
        last_pos = pos;
    }
    Some(last_pos)
}

/// Completes an occurrence whose first two terms sit at `i < j`, if the pair
/// is consistent with the pattern, `policy`, and the extra `admit` filter
/// on the solved parameter.
fn extend_pair(
    seq: &SequenceView,
    pattern: &ProgressionPattern,
    policy: SignPolicy,
    admit: impl Fn(i64) -> bool,
    i: usize,
    j: usize,
) -> Option<Witness> {
    let coeffs = pattern.coeffs();
    let values = seq.values();
    let d = pair_parameter(values, coeffs[0] as i128, policy, admit, i, j)?;
    chain_end(seq, coeffs, d, j)?;
    // Chain verified; rebuild it with storage for the certificate.
    let mut positions = Vec::with_capacity(coeffs.len() + 1);
    let mut terms = Vec::with_capacity(coeffs.len() + 1);
    positions.extend([i, j]);
    terms.extend([values[i], values[j]]);
    let mut current = values[j] as i128;
    for &c in &coeffs[1..] {
        current += (c as i128) * (d as i128);
        let value = i64::try_from(current).expect("verified by chain walk");
        let pos = seq.position_of(value).expect("verified by chain walk");
        positions.push(pos);
        terms.push(value);
    }
    Some(Witness::new(positions, terms, d))
}

fn scan(
    seq: &SequenceView,
    pattern: &ProgressionPattern,
    policy: SignPolicy,
    admit: impl Fn(i64) -> bool + Copy,
) -> Option<Witness> {
    let n = seq.len();
    if n < pattern.term_count() {
        return None;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if let Some(w) = extend_pair(seq, pattern, policy, admit, i, j) {
                return Some(w);
            }
        }
    }
    None
}

/// Finds the occurrence with lexicographically least positions, if any.
pub fn find_progression(
    seq: &SequenceView,
    pattern: &ProgressionPattern,
    policy: SignPolicy,
) -> Option<Witness> {
    scan(seq, pattern, policy, |_| true)
}

/// Like [`find_progression`] with the plain 3-term pattern, admitting only
/// occurrences whose parameter is not divisible by `k_div`.
pub fn find_progression_filtered(
    seq: &SequenceView,
    k_div: u32,
    policy: SignPolicy,
) -> Option<Witness> {
    assert!(k_div >= 2, "divisibility filter needs k_div >= 2");
    let pattern = ProgressionPattern::plain_ap(3).expect("3-term pattern");
    let k = k_div as i64;
    scan(seq, &pattern, policy, move |d| d % k != 0)
}

/// Existence-only detection; same verdict as `find_progression(..).is_some()`.
///
/// With the `parallel` feature the outer loop over first positions runs on
/// the rayon pool, which matters for the multi-billion-pair sweeps of the
/// larger construction prefixes. Without it the check runs sequentially.
pub fn contains_progression(
    seq: &SequenceView,
    pattern: &ProgressionPattern,
    policy: SignPolicy,
) -> bool {
    contains_progression_with(seq, pattern, policy, ExecMode::Parallel)
}

pub fn contains_progression_with(
    seq: &SequenceView,
    pattern: &ProgressionPattern,
    policy: SignPolicy,
    exec: ExecMode,
) -> bool {
    let n = seq.len();
    if n < pattern.term_count() {
        return false;
    }
    let coeffs = pattern.coeffs();
    let values = seq.values();
    let r1 = coeffs[0] as i128;
    let pair_found = |i: usize| {
        ((i + 1)..n).any(|j| {
            pair_parameter(values, r1, policy, |_| true, i, j)
                .is_some_and(|d| chain_end(seq, coeffs, d, j).is_some())
        })
    };
    if exec.parallel_enabled() {
        return parallel_any(n, pair_found);
    }
    (0..n).any(pair_found)
}

#[cfg(feature = "parallel")]
fn parallel_any(n: usize, pair_found: impl Fn(usize) -> bool + Send + Sync) -> bool {
    use rayon::prelude::*;
    (0..n).into_par_iter().any(pair_found)
}

#[cfg(not(feature = "parallel"))]
fn parallel_any(n: usize, pair_found: impl Fn(usize) -> bool + Send + Sync) -> bool {
    (0..n).any(pair_found)
}
