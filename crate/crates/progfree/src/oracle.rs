//! Brute-force reference detector.
//!
//! Enumerates every k-subset of positions and tests the pattern equation
//! directly. Deliberately shares no machinery with the indexed detector so
//! the two can validate each other.

use thiserror::Error;

use crate::caps::ORACLE_SEQUENCE_CAP;
use crate::pattern::{ProgressionPattern, SignPolicy};
use crate::sequence::SequenceView;
use crate::witness::Witness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("sequence length {len} exceeds the oracle cap {cap}")]
    CapExceeded { len: usize, cap: usize },
}

/// Exhaustive subset scan. Same existence verdict (and same least witness)
/// as the indexed detector; exponentially slower, only sensible for tests
/// and small inputs.
pub fn naive_find(
    seq: &SequenceView,
    pattern: &ProgressionPattern,
    policy: SignPolicy,
) -> Result<Option<Witness>, OracleError> {
    if seq.len() > ORACLE_SEQUENCE_CAP {
        return Err(OracleError::CapExceeded {
            len: seq.len(),
            cap: ORACLE_SEQUENCE_CAP,
        });
    }
    let k = pattern.term_count();
    let n = seq.len();
    if n < k {
        return Ok(None);
    }
    let values = seq.values();
    let coeffs = pattern.coeffs();
    // Positions in lexicographic combination order, so the first match is
    // the least witness.
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if let Some(w) = check_subset(values, coeffs, policy, &idx) {
            return Ok(Some(w));
        }
        if !advance(&mut idx, n) {
            return Ok(None);
        }
    }
}

fn check_subset(
    values: &[i64],
    coeffs: &[u32],
    policy: SignPolicy,
    idx: &[usize],
) -> Option<Witness> {
    let first = values[idx[0]] as i128;
    let second = values[idx[1]] as i128;
    let r1 = coeffs[0] as i128;
    let diff = second - first;
    if diff % r1 != 0 {
        return None;
    }
    let d = diff / r1;
    let d64 = i64::try_from(d).ok()?;
    if !policy.admits(d64) {
        return None;
    }
    let mut expected = second;
    for (t, &c) in coeffs.iter().enumerate().skip(1) {
        expected += (c as i128) * d;
        if values[idx[t + 1]] as i128 != expected {
            return None;
        }
    }
    Some(Witness::new(
        idx.to_vec(),
        idx.iter().map(|&p| values[p]).collect(),
        d64,
    ))
}

/// Advances `idx` to the next k-combination of 0..n in lexicographic order.
fn advance(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - (k - i) {
            idx[i] += 1;
            for t in (i + 1)..k {
                idx[t] = idx[t - 1] + 1;
            }
            return true;
        }
    }
    false
}
