//! Exhaustive and streaming verification of the finite kernels behind the
//! containment results.
//!
//! The central exhaustive check: every permutation of {1..11} that starts
//! 2, 1 contains a 3-term progression whose parameter is not divisible by a
//! given k. The streaming finders consume a permutation prefix element by
//! element and certify containment claims with explicit witnesses, keeping
//! the three outcomes apart: witness found, provably absent in a fully
//! consumed finite input, or inconclusive because the budget ran out.

use std::collections::HashMap;
use std::sync::Arc;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::detect::find_progression_filtered;
use crate::exec::ExecMode;
use crate::pattern::SignPolicy;
use crate::permute::next_permutation;
use crate::sequence::SequenceView;
use crate::witness::Witness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaimError {
    #[error("duplicate value {0} in scanned input")]
    DuplicateValue(i64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Callback invoked with the running permutation count during exhaustive
/// checks, every [`PROGRESS_STRIDE`] permutations.
pub type ProgressFn = Arc<dyn Fn(u64) + Send + Sync>;

pub const PROGRESS_STRIDE: u64 = 10_000;

#[derive(Clone, Default)]
pub struct ClaimOptions {
    /// Sign convention for the progressions searched. Defaults to `Both`,
    /// the convention under which the exhaustive claim actually holds:
    /// under positive-only it is false outright, since a permutation whose
    /// tail descends (2, 1, 11, 10, ..., 3) has no ascending 3-term
    /// progression at all. Positive-only remains selectable so the failure
    /// is reportable.
    pub policy: Option<SignPolicy>,
    pub exec: ExecMode,
    pub progress: Option<ProgressFn>,
}

/// Outcome of one exhaustive claim check.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub claim: &'static str,
    pub k: u32,
    pub policy: SignPolicy,
    pub verdict: bool,
    /// A permutation with no qualifying progression, when the verdict is
    /// false; independently re-checkable.
    pub counterexample: Option<Vec<i64>>,
    pub permutations_checked: u64,
    /// Largest |d| over the witnesses found, when the verdict is true.
    pub max_abs_d: Option<i64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Exhaustively checks that every permutation of {1..11} with first element
/// 2 and second element 1 contains a 3-term progression with parameter not
/// divisible by `k_div`. Enumerates all 9! suffixes of {3..11}, sharded by
/// the value in the first free slot.
pub fn verify_degs_11_claim(k_div: u32) -> ClaimResult {
    verify_degs_11_claim_with(k_div, &ClaimOptions::default())
}

pub fn verify_degs_11_claim_with(k_div: u32, options: &ClaimOptions) -> ClaimResult {
    assert!(k_div >= 2, "divisibility filter needs k_div >= 2");
    let policy = options.policy.unwrap_or(SignPolicy::Both);
    let started = Instant::now();
    let ticker = AtomicU64::new(0);
    let shard_values: Vec<i64> = (3..=11).collect();

    let run_shard = |&first: &i64| -> ShardOutcome {
        let mut rest: Vec<i64> = (3..=11).filter(|&v| v != first).collect();
        let mut checked = 0u64;
        let mut max_abs_d = 0i64;
        loop {
            let mut perm = Vec::with_capacity(11);
            perm.extend([2, 1, first]);
            perm.extend_from_slice(&rest);
            let seq = SequenceView::new(perm).expect("permutation of 1..=11");
            checked += 1;
            if let Some(progress) = &options.progress {
                let total = ticker.fetch_add(1, Ordering::Relaxed) + 1;
                if total.is_multiple_of(PROGRESS_STRIDE) {
                    progress(total);
                }
            }
            match find_progression_filtered(&seq, k_div, policy) {
                Some(w) => max_abs_d = max_abs_d.max(w.d.abs()),
                None => {
                    return ShardOutcome {
                        checked,
                        max_abs_d,
                        counterexample: Some(seq.values().to_vec()),
                    };
                }
            }
            if !next_permutation(&mut rest) {
                break;
            }
        }
        ShardOutcome {
            checked,
            max_abs_d,
            counterexample: None,
        }
    };

    let outcomes: Vec<ShardOutcome> = if options.exec.parallel_enabled() {
        shard_map(&shard_values, run_shard)
    } else {
        shard_values.iter().map(run_shard).collect()
    };

    let permutations_checked = outcomes.iter().map(|o| o.checked).sum();
    // Shards are ordered by first free value and enumerate suffixes
    // lexicographically, so the first shard counterexample is the least one
    // regardless of scheduling.
    let counterexample = outcomes.iter().find_map(|o| o.counterexample.clone());
    let verdict = counterexample.is_none();
    let max_abs_d = verdict.then(|| outcomes.iter().map(|o| o.max_abs_d).max().unwrap_or(0));
    ClaimResult {
        claim: "degs11",
        k: k_div,
        policy,
        verdict,
        counterexample,
        permutations_checked,
        max_abs_d,
        elapsed: started.elapsed(),
    }
}

struct ShardOutcome {
    checked: u64,
    max_abs_d: i64,
    counterexample: Option<Vec<i64>>,
}

#[cfg(feature = "parallel")]
fn shard_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Send + Sync) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn shard_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Send + Sync) -> Vec<R> {
    items.iter().map(f).collect()
}

/// Result of a budgeted streaming scan: the three outcomes are distinct so
/// a truncated infinite stream is never conflated with a finite sequence
/// that provably lacks a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum ScanOutcome {
    Witness(Witness),
    AbsentInFiniteInput { consumed: u64 },
    Inconclusive { consumed: u64 },
}

impl ScanOutcome {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            ScanOutcome::Witness(w) => Some(w),
            _ => None,
        }
    }
}

/// Streaming search for a 3-term progression with parameter not divisible
/// by `k_div`, consuming at most `budget` elements.
///
/// Maintains a value index; each arriving element is tested as the closing
/// term of an occurrence whose earlier terms are already placed. Returns
/// the witness completed earliest (least closing position, then least
/// leading positions).
pub fn find_3ap_nondiv(
    values: impl IntoIterator<Item = i64>,
    k_div: u32,
    policy: SignPolicy,
    budget: u64,
) -> Result<ScanOutcome, ClaimError> {
    assert!(k_div >= 2, "divisibility filter needs k_div >= 2");
    let mut iter = values.into_iter().peekable();
    let mut seen: Vec<i64> = Vec::new();
    let mut pos_of: HashMap<i64, usize> = HashMap::new();
    let mut consumed = 0u64;
    while consumed < budget {
        let Some(z) = iter.next() else {
            return Ok(ScanOutcome::AbsentInFiniteInput { consumed });
        };
        consumed += 1;
        if pos_of.contains_key(&z) {
            return Err(ClaimError::DuplicateValue(z));
        }
        let p = seen.len();
        let mut best: Option<(usize, usize)> = None;
        for (py, &y) in seen.iter().enumerate() {
            let d = z as i128 - y as i128;
            let Ok(d) = i64::try_from(d) else { continue };
            if d == 0 || !policy.admits(d) || d % (k_div as i64) == 0 {
                continue;
            }
            let Some(x) = (y as i128)
                .checked_sub(d as i128)
                .and_then(|v| i64::try_from(v).ok())
            else {
                continue;
            };
            if let Some(&px) = pos_of.get(&x)
                && px < py
                && best.is_none_or(|b| (px, py) < b)
            {
                best = Some((px, py));
            }
        }
        if let Some((px, py)) = best {
            let (x, y) = (seen[px], seen[py]);
            return Ok(ScanOutcome::Witness(Witness::new(
                vec![px, py, p],
                vec![x, y, z],
                y - x,
            )));
        }
        pos_of.insert(z, p);
        seen.push(z);
    }
    if iter.peek().is_some() {
        Ok(ScanOutcome::Inconclusive { consumed })
    } else {
        Ok(ScanOutcome::AbsentInFiniteInput { consumed })
    }
}

/// Streaming search for an (r, s) 3-term progression via running maxima.
///
/// Tracks the elements larger than everything before them; two maxima
/// congruent mod r determine an integer parameter and a target value above
/// the later maximum, which therefore cannot have appeared yet. The scan
/// registers one target per new maximum (paired with the earliest stored
/// maximum in its residue class) and completes on the first arriving
/// target.
pub fn find_rs_witness(
    values: impl IntoIterator<Item = i64>,
    r: u32,
    s: u32,
    budget: u64,
) -> Result<ScanOutcome, ClaimError> {
    if r < 1 || s < 1 {
        return Err(ClaimError::InvalidParameter(format!(
            "need r, s >= 1, got r = {r}, s = {s}"
        )));
    }
    let mut iter = values.into_iter().peekable();
    let mut consumed = 0u64;
    let mut position = 0usize;
    let mut running_max: Option<i64> = None;
    // residue of maximum mod r -> (value, position) of the earliest maximum.
    let mut first_max_in_class: HashMap<i64, (i64, usize)> = HashMap::new();
    // target value -> (first two terms and their positions, parameter).
    let mut pending: HashMap<i64, (i64, usize, i64, usize, i64)> = HashMap::new();
    while consumed < budget {
        let Some(v) = iter.next() else {
            return Ok(ScanOutcome::AbsentInFiniteInput { consumed });
        };
        consumed += 1;
        if let Some(&(a_i, p_i, a_j, p_j, d)) = pending.get(&v) {
            return Ok(ScanOutcome::Witness(Witness::new(
                vec![p_i, p_j, position],
                vec![a_i, a_j, v],
                d,
            )));
        }
        if running_max.is_none_or(|m| v > m) {
            running_max = Some(v);
            let class = v.rem_euclid(r as i64);
            match first_max_in_class.get(&class) {
                None => {
                    first_max_in_class.insert(class, (v, position));
                }
                Some(&(a_i, p_i)) => {
                    let d = (v - a_i) / r as i64;
                    let target = (v as i128) + (s as i128) * (d as i128);
                    if let Ok(target) = i64::try_from(target) {
                        pending.entry(target).or_insert((a_i, p_i, v, position, d));
                    }
                }
            }
        }
        position += 1;
    }
    if iter.peek().is_some() {
        Ok(ScanOutcome::Inconclusive { consumed })
    } else {
        Ok(ScanOutcome::AbsentInFiniteInput { consumed })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{ProgressionPattern, SignPolicy::Both};
    use crate::witness::verify_witness;

    fn identity() -> impl Iterator<Item = i64> {
        1..
    }

    #[test]
    fn nondiv_scan_on_identity() {
        let outcome = find_3ap_nondiv(identity(), 2, Both, 100).unwrap();
        let w = outcome
            .witness()
            .expect("identity contains odd-parameter APs");
        assert_eq!(w.values, vec![1, 2, 3]);
        assert_eq!(w.d % 2, 1);
    }

    #[test]
    fn nondiv_scan_distinguishes_absent_from_inconclusive() {
        // All APs in 1,4,7,10 have d = 3.
        let outcome = find_3ap_nondiv(vec![1, 4, 7, 10], 3, Both, 100).unwrap();
        assert_eq!(outcome, ScanOutcome::AbsentInFiniteInput { consumed: 4 });
        let outcome = find_3ap_nondiv(identity(), 2, Both, 2).unwrap();
        assert_eq!(outcome, ScanOutcome::Inconclusive { consumed: 2 });
    }

    #[test]
    fn nondiv_scan_rejects_duplicates() {
        assert_eq!(
            find_3ap_nondiv(vec![5, 5], 2, Both, 10),
            Err(ClaimError::DuplicateValue(5))
        );
    }

    #[test]
    fn rs_witness_identity_examples() {
        let pattern = |r, s| ProgressionPattern::three_term(r, s).unwrap();
        let w = find_rs_witness(identity(), 1, 1, 100).unwrap();
        let w = w.witness().unwrap();
        assert_eq!(w.values, vec![1, 2, 3]);

        let w = find_rs_witness(identity(), 1, 3, 100).unwrap();
        let w = w.witness().unwrap();
        assert_eq!(w.values, vec![1, 2, 5]);
        assert_eq!(w.positions, vec![0, 1, 4]);

        let outcome = find_rs_witness(identity(), 3, 3, 100).unwrap();
        let w = outcome.witness().unwrap();
        assert_eq!(w.values, vec![1, 4, 7]);
        // All returned witnesses check out against the actual pattern.
        let seq = SequenceView::new((1..=10).collect()).unwrap();
        assert_eq!(verify_witness(&seq, &pattern(3, 3), w, Both), Ok(true));
    }

    #[test]
    fn rs_witness_budget_semantics() {
        let outcome = find_rs_witness(identity(), 1, 3, 3).unwrap();
        assert_eq!(outcome, ScanOutcome::Inconclusive { consumed: 3 });
        let outcome = find_rs_witness(vec![3, 2, 1], 1, 1, 10).unwrap();
        assert_eq!(outcome, ScanOutcome::AbsentInFiniteInput { consumed: 3 });
    }

    #[test]
    fn degs11_parallel_sequential_agree() {
        let seq_opts = ClaimOptions {
            policy: Some(SignPolicy::Both),
            exec: ExecMode::Sequential,
            progress: None,
        };
        let par = verify_degs_11_claim(3);
        let seq = verify_degs_11_claim_with(3, &seq_opts);
        assert!(par.verdict);
        assert_eq!(par.verdict, seq.verdict);
        assert_eq!(par.permutations_checked, seq.permutations_checked);
        assert_eq!(par.permutations_checked, 362_880);
        assert_eq!(par.max_abs_d, seq.max_abs_d);
    }

    #[test]
    fn degs11_fails_under_positive_only_with_checkable_counterexample() {
        // A descending tail kills every ascending 3-term progression, so
        // the positive-only reading of the claim is false; the result must
        // say so and hand back a counterexample that re-checks.
        let opts = ClaimOptions {
            policy: Some(SignPolicy::PositiveOnly),
            exec: ExecMode::Sequential,
            progress: None,
        };
        let result = verify_degs_11_claim_with(3, &opts);
        assert!(!result.verdict);
        let perm = result
            .counterexample
            .expect("false verdict carries a counterexample");
        assert_eq!(&perm[..2], &[2, 1]);
        let seq = SequenceView::from_slice(&perm).unwrap();
        assert!(find_progression_filtered(&seq, 3, SignPolicy::PositiveOnly).is_none());
        // The same permutation does contain a signed-parameter occurrence.
        assert!(find_progression_filtered(&seq, 3, SignPolicy::Both).is_some());
    }

    #[test]
    fn progress_callback_fires() {
        use std::sync::atomic::AtomicU64;
        let hits = Arc::new(AtomicU64::new(0));
        let hits_in = hits.clone();
        let opts = ClaimOptions {
            policy: None,
            exec: ExecMode::Sequential,
            progress: Some(Arc::new(move |_| {
                hits_in.fetch_add(1, Ordering::Relaxed);
            })),
        };
        let result = verify_degs_11_claim_with(7, &opts);
        assert!(result.verdict);
        assert_eq!(hits.load(Ordering::Relaxed), 362_880 / PROGRESS_STRIDE);
    }
}
