//! Exact counts of progression-avoiding permutations of 1..=n.
//!
//! The backtracking counter grows a permutation left to right and keeps,
//! per prefix, the set of values that would complete a pattern occurrence:
//! every placed pair opens a chain carrying the solved parameter, every
//! later placement advances the chains waiting on it, and a candidate is
//! admissible iff no chain awaits it as a final term. The naive counter
//! filters all n! permutations through the brute-force oracle and exists to
//! check the backtracker, not to be fast.

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::caps::{BACKTRACK_COUNT_CAP, ENUMERATE_CAP, NAIVE_COUNT_CAP};
use crate::detect::find_progression;
use crate::exec::ExecMode;
use crate::oracle::naive_find;
use crate::pattern::{ProgressionPattern, SignPolicy};
use crate::permute::next_permutation;
use crate::sequence::SequenceView;
use crate::witness::Witness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("n = {n} exceeds the {method} cap of {cap}")]
    CapExceeded {
        n: u32,
        cap: u32,
        method: &'static str,
    },
    #[error("count does not fit in 64 bits")]
    Overflow,
    #[error("enumeration would exceed {cap} permutations")]
    EnumerationTooLarge { cap: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid class order: {0}")]
    InvalidClassOrder(String),
    #[error("invalid class ordering: {0}")]
    InvalidClassOrdering(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    Backtrack,
    Naive,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CountOptions {
    pub method: Option<CountMethod>,
    pub exec: ExecMode,
}

/// An exact count with the inputs that produced it.
#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub n: u32,
    pub pattern: ProgressionPattern,
    pub policy: SignPolicy,
    pub count: u64,
    pub method: CountMethod,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Number of permutations of 1..=n with no occurrence of `pattern`,
/// by pruned backtracking (default) sharded over first elements.
pub fn count_progression_free(
    n: u32,
    pattern: &ProgressionPattern,
    policy: SignPolicy,
) -> Result<CountReport, CountError> {
    count_progression_free_with(n, pattern, policy, CountOptions::default())
}

pub fn count_progression_free_with(
    n: u32,
    pattern: &ProgressionPattern,
    policy: SignPolicy,
    options: CountOptions,
) -> Result<CountReport, CountError> {
    let method = options.method.unwrap_or(CountMethod::Backtrack);
    let started = Instant::now();
    let count = match method {
        CountMethod::Backtrack => {
            check_cap(n, BACKTRACK_COUNT_CAP, "backtrack")?;
            count_backtrack(n, pattern, policy, options.exec)
        }
        CountMethod::Naive => {
            check_cap(n, NAIVE_COUNT_CAP, "naive")?;
            count_naive(n, pattern, policy)
        }
    };
    Ok(CountReport {
        n,
        pattern: pattern.clone(),
        policy,
        count,
        method,
        elapsed: started.elapsed(),
    })
}

fn check_cap(n: u32, cap: u32, method: &'static str) -> Result<(), CountError> {
    if n > cap {
        return Err(CountError::CapExceeded { n, cap, method });
    }
    Ok(())
}

/// All avoiding permutations of 1..=n, in lexicographic order.
pub fn enumerate_progression_free(
    n: u32,
    pattern: &ProgressionPattern,
    policy: SignPolicy,
) -> Result<Vec<Vec<i64>>, CountError> {
    check_cap(n, BACKTRACK_COUNT_CAP, "backtrack")?;
    if n == 0 {
        return Ok(vec![vec![]]);
    }
    let mut out = Vec::new();
    let mut state = ChainState::new(n, pattern, policy);
    let mut overflow = false;
    walk(&mut state, n as usize, &mut |perm| {
        if out.len() as u64 >= ENUMERATE_CAP {
            overflow = true;
        } else {
            out.push(perm.to_vec());
        }
    });
    if overflow {
        return Err(CountError::EnumerationTooLarge { cap: ENUMERATE_CAP });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Backtracking with incremental completion chains.

struct ChainState {
    coeffs: Vec<i64>,
    k: u8,
    policy: SignPolicy,
    placed: Vec<i64>,
    used: Vec<bool>,
    /// (value, term index it would become) -> parameters of open chains.
    awaiting: HashMap<(i64, u8), Vec<i64>>,
    journal: Vec<Vec<(i64, u8, i64)>>,
}

impl ChainState {
    fn new(n: u32, pattern: &ProgressionPattern, policy: SignPolicy) -> Self {
        ChainState {
            coeffs: pattern.coeffs().iter().map(|&c| c as i64).collect(),
            k: pattern.term_count() as u8,
            policy,
            placed: Vec::with_capacity(n as usize),
            used: vec![false; n as usize + 1],
            awaiting: HashMap::new(),
            journal: Vec::with_capacity(n as usize),
        }
    }

    fn admissible(&self, v: i64) -> bool {
        !self.used[v as usize] && !self.awaiting.contains_key(&(v, self.k))
    }

    fn push(&mut self, v: i64) {
        let mut added = Vec::new();
        // v as second term of a fresh chain with each earlier x as first.
        for &x in &self.placed {
            let diff = v - x;
            if diff % self.coeffs[0] != 0 {
                continue;
            }
            let d = diff / self.coeffs[0];
            if d == 0 || !self.policy.admits(d) {
                continue;
            }
            added.push((v + self.coeffs[1] * d, 3u8, d));
        }
        // Advance chains that were waiting on v as a middle term. Chains
        // waiting on v as the final term never fire: such v is inadmissible.
        for stage in 3..self.k {
            if let Some(ds) = self.awaiting.get(&(v, stage)) {
                for d in ds.clone() {
                    added.push((v + self.coeffs[stage as usize - 1] * d, stage + 1, d));
                }
            }
        }
        for &(value, stage, d) in &added {
            self.awaiting.entry((value, stage)).or_default().push(d);
        }
        self.placed.push(v);
        self.used[v as usize] = true;
        self.journal.push(added);
    }

    fn pop(&mut self) {
        let v = self.placed.pop().expect("pop without push");
        self.used[v as usize] = false;
        for (value, stage, d) in self.journal.pop().expect("journal underflow") {
            let entry = self
                .awaiting
                .get_mut(&(value, stage))
                .expect("journaled entry");
            let at = entry
                .iter()
                .rposition(|&x| x == d)
                .expect("journaled parameter");
            entry.swap_remove(at);
            if entry.is_empty() {
                self.awaiting.remove(&(value, stage));
            }
        }
    }
}

fn walk(state: &mut ChainState, n: usize, visit: &mut dyn FnMut(&[i64])) {
    if state.placed.len() == n {
        visit(&state.placed);
        return;
    }
    for v in 1..=n as i64 {
        if !state.admissible(v) {
            continue;
        }
        state.push(v);
        walk(state, n, visit);
        state.pop();
    }
}

fn count_from_first(n: u32, pattern: &ProgressionPattern, policy: SignPolicy, first: i64) -> u64 {
    let mut state = ChainState::new(n, pattern, policy);
    state.push(first);
    let mut count = 0u64;
    walk(&mut state, n as usize, &mut |_| count += 1);
    count
}

fn count_backtrack(
    n: u32,
    pattern: &ProgressionPattern,
    policy: SignPolicy,
    exec: ExecMode,
) -> u64 {
    if n == 0 {
        return 1;
    }
    if exec.parallel_enabled() {
        count_backtrack_parallel(n, pattern, policy)
    } else {
        (1..=n as i64)
            .map(|first| count_from_first(n, pattern, policy, first))
            .sum()
    }
}

#[cfg(feature = "parallel")]
fn count_backtrack_parallel(n: u32, pattern: &ProgressionPattern, policy: SignPolicy) -> u64 {
    use rayon::prelude::*;
    (1..=n as i64)
        .into_par_iter()
        .map(|first| count_from_first(n, pattern, policy, first))
        .sum()
}

#[cfg(not(feature = "parallel"))]
fn count_backtrack_parallel(n: u32, pattern: &ProgressionPattern, policy: SignPolicy) -> u64 {
    (1..=n as i64)
        .map(|first| count_from_first(n, pattern, policy, first))
        .sum()
}

fn count_naive(n: u32, pattern: &ProgressionPattern, policy: SignPolicy) -> u64 {
    if n == 0 {
        return 1;
    }
    let mut values: Vec<i64> = (1..=n as i64).collect();
    let mut count = 0;
    loop {
        let seq = SequenceView::from_slice(&values).expect("distinct by construction");
        if naive_find(&seq, pattern, policy)
            .expect("within oracle cap")
            .is_none()
        {
            count += 1;
        }
        if !next_permutation(&mut values) {
            break;
        }
    }
    count
}

// ---------------------------------------------------------------------------
// Closed-form lower bounds.

/// Value of the product lower bound for the count at n = (k-1)^m, either
/// evaluated or left as base and exponent when it overflows 64 bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ThetaBound {
    Exact(u64),
    Symbolic { base: u64, exponent: u64 },
}

impl std::fmt::Display for ThetaBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ThetaBound::Exact(v) => write!(f, "{v}"),
            ThetaBound::Symbolic { base, exponent } => write!(f, "{base}^{exponent}"),
        }
    }
}

fn factorial_u64(n: u64) -> Option<u64> {
    let mut acc: u64 = 1;
    for i in 2..=n {
        acc = acc.checked_mul(i)?;
    }
    Some(acc)
}

/// Lower bound (k-1)!^(sum of (k-1)^i for i < m) on the number of k-term-AP
/// avoiding permutations of 1..=(k-1)^m.
///
/// This is a lower bound, not an exact value: the residue-class product
/// construction it counts does not reach every avoiding permutation (already
/// at k = 3, m = 2 the true count is 10 against a bound of 8).
pub fn theta_power_lower_bound(k: u32, m: u32) -> Result<ThetaBound, CountError> {
    if k < 3 {
        return Err(CountError::InvalidParameter(format!(
            "k must be >= 3, got {k}"
        )));
    }
    if m < 1 {
        return Err(CountError::InvalidParameter("m must be >= 1".into()));
    }
    let base = factorial_u64(k as u64 - 1)
        .ok_or_else(|| CountError::InvalidParameter(format!("(k-1)! overflows for k = {k}")))?;
    let mut exponent: u64 = 0;
    let mut power: u64 = 1;
    for _ in 0..m {
        exponent = exponent.checked_add(power).ok_or(CountError::Overflow)?;
        power = power
            .checked_mul(k as u64 - 1)
            .ok_or(CountError::Overflow)?;
    }
    let mut value: u64 = 1;
    for _ in 0..exponent {
        match value.checked_mul(base) {
            Some(v) => value = v,
            None => return Ok(ThetaBound::Symbolic { base, exponent }),
        }
    }
    Ok(ThetaBound::Exact(value))
}

/// Both sides of the product inequality: the count at (k-1)*n must be at
/// least (k-1)! times the k-1 power of the count at n.
#[derive(Debug, Clone, Serialize)]
pub struct RecursiveInequalityReport {
    pub k: u32,
    pub n: u32,
    pub policy: SignPolicy,
    pub n_scaled: u32,
    pub theta_n: u64,
    pub theta_n_scaled: u64,
    pub factorial_term: u64,
    pub lower_bound: u64,
    pub holds: bool,
}

pub fn verify_recursive_inequality(
    k: u32,
    n: u32,
    policy: SignPolicy,
) -> Result<RecursiveInequalityReport, CountError> {
    if k < 3 || n < 1 {
        return Err(CountError::InvalidParameter(format!(
            "need k >= 3 and n >= 1, got k = {k}, n = {n}"
        )));
    }
    let n_scaled = (k - 1).checked_mul(n).ok_or(CountError::Overflow)?;
    check_cap(n_scaled, BACKTRACK_COUNT_CAP, "backtrack")?;
    let pattern = ProgressionPattern::plain_ap(k as usize)
        .map_err(|e| CountError::InvalidParameter(e.to_string()))?;
    let theta_n = count_progression_free(n, &pattern, policy)?.count;
    let theta_n_scaled = count_progression_free(n_scaled, &pattern, policy)?.count;
    let factorial_term = factorial_u64(k as u64 - 1).ok_or(CountError::Overflow)?;
    let mut lower_bound = factorial_term;
    for _ in 0..(k - 1) {
        lower_bound = lower_bound
            .checked_mul(theta_n)
            .ok_or(CountError::Overflow)?;
    }
    Ok(RecursiveInequalityReport {
        k,
        n,
        policy,
        n_scaled,
        theta_n,
        theta_n_scaled,
        factorial_term,
        lower_bound,
        holds: theta_n_scaled >= lower_bound,
    })
}

// ---------------------------------------------------------------------------
// Residue-class product construction.

/// A pattern occurrence found inside an emitted permutation; the residue
/// construction is only guaranteed when the class count does not divide any
/// step of the pattern times the parameter, so emissions are re-checked.
#[derive(Debug, Clone, Serialize)]
pub struct ResidueViolation {
    pub index: usize,
    pub witness: Witness,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResidueBlockReport {
    /// Distinct emitted permutations, in emission order.
    pub permutations: Vec<Vec<i64>>,
    pub violations: Vec<ResidueViolation>,
}

/// Values 1..=n_total split into classes by residue mod k-1; class i
/// (1-based, i = k-1 holding the multiples) in ascending order.
fn residue_classes(n_total: u32, k: u32) -> Vec<Vec<i64>> {
    let modulus = (k - 1) as i64;
    let mut classes: Vec<Vec<i64>> = vec![Vec::new(); (k - 1) as usize];
    for v in 1..=n_total as i64 {
        let mut r = v % modulus;
        if r == 0 {
            r = modulus;
        }
        classes[(r - 1) as usize].push(v);
    }
    classes
}

/// Builds every concatenation of per-class arrangements: for each supplied
/// class order, each combination of per-class orderings is transported onto
/// its class (order positions index the ascending class values) and the
/// classes are concatenated. Emitted permutations are deduplicated and each
/// one is re-checked against the pattern; hits are reported as violations,
/// not errors.
pub fn residue_block_permutations(
    n_total: u32,
    k: u32,
    class_orders: &[Vec<u32>],
    per_class: &[Vec<Vec<u32>>],
    pattern: &ProgressionPattern,
    policy: SignPolicy,
) -> Result<ResidueBlockReport, CountError> {
    if k < 3 || n_total < 1 {
        return Err(CountError::InvalidParameter(format!(
            "need k >= 3 and n_total >= 1, got k = {k}, n_total = {n_total}"
        )));
    }
    let classes = residue_classes(n_total, k);
    if per_class.len() != classes.len() {
        return Err(CountError::InvalidClassOrdering(format!(
            "expected orderings for {} classes, got {}",
            classes.len(),
            per_class.len()
        )));
    }
    for order in class_orders {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != (1..=k - 1).collect::<Vec<u32>>() {
            return Err(CountError::InvalidClassOrder(format!(
                "{order:?} is not a permutation of 1..={}",
                k - 1
            )));
        }
    }
    for (ci, orderings) in per_class.iter().enumerate() {
        let m = classes[ci].len() as u32;
        for ordering in orderings {
            let mut sorted = ordering.clone();
            sorted.sort_unstable();
            if sorted != (1..=m).collect::<Vec<u32>>() {
                return Err(CountError::InvalidClassOrdering(format!(
                    "{ordering:?} is not a permutation of 1..={m} for class {}",
                    ci + 1
                )));
            }
            let as_seq: Vec<i64> = ordering.iter().map(|&x| x as i64).collect();
            let view = SequenceView::new(as_seq).expect("validated permutation");
            if find_progression(&view, pattern, policy).is_some() {
                return Err(CountError::InvalidClassOrdering(format!(
                    "class {} ordering {ordering:?} contains a {pattern} occurrence",
                    ci + 1
                )));
            }
        }
    }
    let combinations: u64 = per_class
        .iter()
        .map(|o| o.len() as u64)
        .try_fold(class_orders.len() as u64, |acc, m| acc.checked_mul(m))
        .ok_or(CountError::Overflow)?;
    if combinations > ENUMERATE_CAP {
        return Err(CountError::EnumerationTooLarge { cap: ENUMERATE_CAP });
    }

    let mut seen = HashSet::new();
    let mut permutations = Vec::new();
    let mut violations = Vec::new();
    let mut choice = vec![0usize; per_class.len()];
    for order in class_orders {
        loop {
            let mut assembled = Vec::with_capacity(n_total as usize);
            for &class_id in order {
                let ci = (class_id - 1) as usize;
                let values = &classes[ci];
                let ordering = &per_class[ci][choice[ci]];
                assembled.extend(ordering.iter().map(|&t| values[(t - 1) as usize]));
            }
            if seen.insert(assembled.clone()) {
                let view = SequenceView::from_slice(&assembled).expect("classes partition 1..=n");
                if let Some(witness) = find_progression(&view, pattern, policy) {
                    violations.push(ResidueViolation {
                        index: permutations.len(),
                        witness,
                    });
                }
                permutations.push(assembled);
            }
            // Odometer step over per-class choices.
            let mut pos = 0;
            loop {
                if pos == choice.len() {
                    break;
                }
                choice[pos] += 1;
                if choice[pos] < per_class[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
            if pos == choice.len() {
                break;
            }
        }
    }
    Ok(ResidueBlockReport {
        permutations,
        violations,
    })
}

/// Full enumeration audit: all class orders and all avoiding per-class
/// orderings, with the predicted product lower bound for cross-checking.
#[derive(Debug, Clone, Serialize)]
pub struct ResidueBlockAudit {
    pub report: ResidueBlockReport,
    pub predicted_lower_bound: u64,
}

pub fn all_residue_block_permutations(
    n_total: u32,
    k: u32,
    pattern: &ProgressionPattern,
    policy: SignPolicy,
) -> Result<ResidueBlockAudit, CountError> {
    if k < 3 || n_total < 1 {
        return Err(CountError::InvalidParameter(format!(
            "need k >= 3 and n_total >= 1, got k = {k}, n_total = {n_total}"
        )));
    }
    let classes = residue_classes(n_total, k);
    let mut per_class = Vec::with_capacity(classes.len());
    let mut predicted: u64 = factorial_u64(k as u64 - 1).ok_or(CountError::Overflow)?;
    for class in &classes {
        let orderings: Vec<Vec<u32>> =
            enumerate_progression_free(class.len() as u32, pattern, policy)?
                .into_iter()
                .map(|o| o.into_iter().map(|v| v as u32).collect())
                .collect();
        predicted = predicted
            .checked_mul(orderings.len() as u64)
            .ok_or(CountError::Overflow)?;
        per_class.push(orderings);
    }
    let mut ids: Vec<i64> = (1..=(k - 1) as i64).collect();
    let mut class_orders = vec![ids.iter().map(|&x| x as u32).collect::<Vec<u32>>()];
    while next_permutation(&mut ids) {
        class_orders.push(ids.iter().map(|&x| x as u32).collect());
    }
    let report =
        residue_block_permutations(n_total, k, &class_orders, &per_class, pattern, policy)?;
    Ok(ResidueBlockAudit {
        report,
        predicted_lower_bound: predicted,
    })
}
