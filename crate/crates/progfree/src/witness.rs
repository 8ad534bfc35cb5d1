//! Progression occurrence certificates and their verifier.

use serde::Serialize;
use thiserror::Error;

use crate::pattern::{ProgressionPattern, SignPolicy};
use crate::sequence::SequenceView;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("witness position {position} is outside the sequence (length {len})")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("witness has {got} terms but the pattern describes {expected}")]
    TermCountMismatch { got: usize, expected: usize },
}

/// Positions, values, and common parameter certifying one progression
/// occurrence inside a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub positions: Vec<usize>,
    pub values: Vec<i64>,
    pub d: i64,
}

impl Witness {
    pub fn new(positions: Vec<usize>, values: Vec<i64>, d: i64) -> Self {
        debug_assert_eq!(positions.len(), values.len());
        Witness {
            positions,
            values,
            d,
        }
    }
}

/// Checks a witness against a sequence.
///
/// Returns `Ok(true)` iff the positions are strictly increasing and in
/// bounds, the sequence holds the claimed values there, the values satisfy
/// the pattern equation with the claimed parameter, and the parameter is
/// admitted by `policy`. Structural defects (wrong term count, position out
/// of range) are errors, distinct from a false verdict.
pub fn verify_witness(
    seq: &SequenceView,
    pattern: &ProgressionPattern,
    witness: &Witness,
    policy: SignPolicy,
) -> Result<bool, WitnessError> {
    let expected = pattern.term_count();
    if witness.positions.len() != expected || witness.values.len() != expected {
        return Err(WitnessError::TermCountMismatch {
            got: witness.positions.len().max(witness.values.len()),
            expected,
        });
    }
    for &p in &witness.positions {
        if p >= seq.len() {
            return Err(WitnessError::PositionOutOfRange {
                position: p,
                len: seq.len(),
            });
        }
    }
    if !policy.admits(witness.d) {
        return Ok(false);
    }
    for pair in witness.positions.windows(2) {
        if pair[0] >= pair[1] {
            return Ok(false);
        }
    }
    for (&p, &v) in witness.positions.iter().zip(&witness.values) {
        if seq.get(p) != Some(v) {
            return Ok(false);
        }
    }
    // Pattern equation, in 128-bit to rule out overflow near the value caps.
    for (i, &c) in pattern.coeffs().iter().enumerate() {
        let step = (c as i128) * (witness.d as i128);
        if (witness.values[i + 1] as i128) - (witness.values[i] as i128) != step {
            return Ok(false);
        }
    }
    Ok(true)
}
