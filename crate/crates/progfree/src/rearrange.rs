//! Orderings of finite integer sets that avoid 3-term patterns with two odd
//! coefficients.
//!
//! The arrangement is recursive: split the set into evens and odds, arrange
//! each part, and emit evens before odds. The parts recurse through the
//! affine reductions v -> v/2 (evens) and v -> (v-1)/2 (odds), which are
//! bijections preserving progression structure: inside one parity class all
//! pairwise differences are even, so with odd coefficients the parameter d
//! of any occurrence is even and the occurrence descends to the reduced set
//! with parameter d/2. An occurrence crossing the parity boundary is
//! impossible outright: its two steps r*d and s*d would need d odd and d
//! even at once. Induction on the base case (at most two elements, which
//! cannot host a 3-term occurrence) gives avoidance for any integer d,
//! positive or negative.

use std::collections::HashSet;

use thiserror::Error;

use crate::caps::{REARRANGE_CAP, VALUE_ABS_BOUND};
use crate::pattern::ProgressionPattern;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RearrangeError {
    #[error("parity construction needs a 3-term pattern, got {0} terms")]
    NotThreeTerm(usize),
    #[error("parity construction needs odd coefficients; {0} is even")]
    EvenCoefficient(u32),
    #[error("duplicate value {0} in input set")]
    DuplicateValue(i64),
    #[error("set of {len} elements exceeds the rearrangement cap {cap}")]
    CapExceeded { len: usize, cap: usize },
    #[error("value {0} outside the supported range (|v| < 2^62)")]
    ValueOutOfRange(i64),
    #[error("ground set must be nonempty")]
    EmptyRange,
}

/// Validates that `pattern` is a 3-term pattern with two odd coefficients,
/// the shape the parity argument covers.
pub(crate) fn require_odd_three_term(
    pattern: &ProgressionPattern,
) -> Result<(u32, u32), RearrangeError> {
    let coeffs = pattern.coeffs();
    if coeffs.len() != 2 {
        return Err(RearrangeError::NotThreeTerm(pattern.term_count()));
    }
    for &c in coeffs {
        if c % 2 == 0 {
            return Err(RearrangeError::EvenCoefficient(c));
        }
    }
    Ok((coeffs[0], coeffs[1]))
}

/// Orders a finite set of distinct integers so that it contains no 3-term
/// occurrence of `pattern` (both coefficients odd), for either sign of d.
pub fn rearrange_progression_free(
    values: &[i64],
    pattern: &ProgressionPattern,
) -> Result<Vec<i64>, RearrangeError> {
    require_odd_three_term(pattern)?;
    if values.len() > REARRANGE_CAP {
        return Err(RearrangeError::CapExceeded {
            len: values.len(),
            cap: REARRANGE_CAP,
        });
    }
    let mut seen = HashSet::with_capacity(values.len());
    for &v in values {
        if v.abs() >= VALUE_ABS_BOUND {
            return Err(RearrangeError::ValueOutOfRange(v));
        }
        if !seen.insert(v) {
            return Err(RearrangeError::DuplicateValue(v));
        }
    }
    Ok(arrange(values.to_vec()))
}

/// The avoiding permutation of 1..=n for a 3-term pattern with odd
/// coefficients.
pub fn ap_free_permutation(
    n: u32,
    pattern: &ProgressionPattern,
) -> Result<Vec<i64>, RearrangeError> {
    if n == 0 {
        return Err(RearrangeError::EmptyRange);
    }
    rearrange_progression_free(&(1..=n as i64).collect::<Vec<_>>(), pattern)
}

fn arrange(mut values: Vec<i64>) -> Vec<i64> {
    if values.len() <= 2 {
        values.sort_unstable();
        return values;
    }
    let (evens, odds): (Vec<i64>, Vec<i64>) =
        values.into_iter().partition(|v| v.rem_euclid(2) == 0);
    // v and v-1 are even in their branches, so the divisions are exact.
    let evens_reduced: Vec<i64> = evens.into_iter().map(|v| v / 2).collect();
    let odds_reduced: Vec<i64> = odds.into_iter().map(|v| (v - 1) / 2).collect();
    let mut out: Vec<i64> = arrange(evens_reduced).into_iter().map(|w| 2 * w).collect();
    out.extend(arrange(odds_reduced).into_iter().map(|w| 2 * w + 1));
    out
}
