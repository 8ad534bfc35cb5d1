//! Block-concatenation permutation streams.
//!
//! Every construction here emits a deterministic sequence of pairwise
//! distinct integers: an optional leading zero, then block after block,
//! where each block is a geometrically growing interval (possibly mirrored
//! with its additive inverses) arranged by the parity recursion so the block
//! itself contains no 3-term occurrence of the construction's pattern. The
//! growth rates are chosen so occurrences spanning several blocks are
//! impossible; the density module checks those inequalities exactly.

use std::fmt;

use thiserror::Error;

use crate::caps::{STREAM_DEFAULT_MAX_ELEMENTS, STREAM_HARD_MAX_ELEMENTS, VALUE_ABS_BOUND};
use crate::pattern::ProgressionPattern;
use crate::rational::{Rational, RationalError};
use crate::rearrange::{RearrangeError, rearrange_progression_free, require_odd_three_term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StreamError {
    #[error("construction needs {needed} elements, over the budget of {max}")]
    ElementBudgetExceeded { needed: u128, max: u64 },
    #[error("construction reaches |value| >= {bound}, over the budget")]
    ValueBudgetExceeded { bound: i64 },
    #[error("invalid budget: {0}")]
    InvalidBudget(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parameter constraint {name} violated: {detail}")]
    ConstraintViolated { name: &'static str, detail: String },
    #[error(transparent)]
    Rearrange(#[from] RearrangeError),
    #[error(transparent)]
    Rational(#[from] RationalError),
}

/// Element and value caps for a stream. Callers may lower the defaults but
/// not raise them past the overflow-safety ceiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StreamBudget {
    pub max_elements: u64,
    pub max_abs_value: i64,
}

impl Default for StreamBudget {
    fn default() -> Self {
        StreamBudget {
            max_elements: STREAM_DEFAULT_MAX_ELEMENTS,
            max_abs_value: VALUE_ABS_BOUND,
        }
    }
}

impl StreamBudget {
    fn validate(&self) -> Result<(), StreamError> {
        if self.max_elements == 0 || self.max_abs_value <= 0 {
            return Err(StreamError::InvalidBudget("budget must be positive".into()));
        }
        if self.max_elements > STREAM_HARD_MAX_ELEMENTS {
            return Err(StreamError::InvalidBudget(format!(
                "element budget {} exceeds the hard cap {}",
                self.max_elements, STREAM_HARD_MAX_ELEMENTS
            )));
        }
        if self.max_abs_value > VALUE_ABS_BOUND {
            return Err(StreamError::InvalidBudget(format!(
                "value budget {} exceeds the overflow-safety bound {}",
                self.max_abs_value, VALUE_ABS_BOUND
            )));
        }
        Ok(())
    }
}

/// One block of a construction: the positive interval [lo, hi] and whether
/// the additive inverses are included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockSpec {
    pub index: u32,
    pub lo: i64,
    pub hi: i64,
    pub mirrored: bool,
}

impl BlockSpec {
    pub fn len(&self) -> u64 {
        let base = (self.hi - self.lo + 1) as u64;
        if self.mirrored { base * 2 } else { base }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }
}

/// A deterministic, resumable generator of a permutation prefix.
///
/// Iteration yields the leading zero (when present), then each block
/// rearranged by the parity recursion, in block order. Two streams built
/// with identical parameters yield identical prefixes.
pub struct PermutationStream {
    kind: &'static str,
    pattern: ProgressionPattern,
    blocks: Vec<BlockSpec>,
    emit_zero: bool,
    total: u64,
    emitted: u64,
    zero_done: bool,
    block_idx: usize,
    within: usize,
    current: Option<Vec<i64>>,
}

impl fmt::Debug for PermutationStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutationStream")
            .field("kind", &self.kind)
            .field("pattern", &self.pattern)
            .field("blocks", &self.blocks.len())
            .field("total", &self.total)
            .field("emitted", &self.emitted)
            .finish()
    }
}

impl PermutationStream {
    fn assemble(
        kind: &'static str,
        pattern: ProgressionPattern,
        blocks: Vec<BlockSpec>,
        emit_zero: bool,
        budget: StreamBudget,
    ) -> Result<Self, StreamError> {
        require_odd_three_term(&pattern)?;
        let mut needed: u128 = if emit_zero { 1 } else { 0 };
        for b in &blocks {
            debug_assert!(b.lo >= 1 && b.lo <= b.hi);
            if b.hi >= budget.max_abs_value {
                return Err(StreamError::ValueBudgetExceeded {
                    bound: budget.max_abs_value,
                });
            }
            if b.len() as u128 > crate::caps::REARRANGE_CAP as u128 {
                return Err(StreamError::ElementBudgetExceeded {
                    needed: b.len() as u128,
                    max: crate::caps::REARRANGE_CAP as u64,
                });
            }
            needed += b.len() as u128;
        }
        if needed > budget.max_elements as u128 {
            return Err(StreamError::ElementBudgetExceeded {
                needed,
                max: budget.max_elements,
            });
        }
        Ok(PermutationStream {
            kind,
            pattern,
            blocks,
            emit_zero,
            total: needed as u64,
            emitted: 0,
            zero_done: false,
            block_idx: 0,
            within: 0,
            current: None,
        })
    }

    /// Construction identifier, e.g. `"z6"`.
    pub fn kind(&self) -> &'static str {
        self.kind
    }

    /// The pattern each block is arranged to avoid.
    pub fn pattern(&self) -> &ProgressionPattern {
        &self.pattern
    }

    /// The (nonempty) blocks this stream will emit, in order.
    pub fn blocks(&self) -> &[BlockSpec] {
        &self.blocks
    }

    /// Exact number of elements the full stream emits.
    pub fn total_len(&self) -> u64 {
        self.total
    }

    /// Elements emitted so far; the resumable cursor position.
    pub fn position(&self) -> u64 {
        self.emitted
    }

    fn materialize(&self, idx: usize) -> Vec<i64> {
        let b = &self.blocks[idx];
        let mut values: Vec<i64> = (b.lo..=b.hi).collect();
        if b.mirrored {
            values.extend((b.lo..=b.hi).map(|v| -v));
        }
        rearrange_progression_free(&values, &self.pattern)
            .expect("block contents validated at construction")
    }

    /// Permutation of the integers avoiding plain 6-term progressions:
    /// a leading zero, then mirrored decade blocks [10^i, 10^(i+1)).
    pub fn ap6_free_integers(block_count: u32) -> Result<Self, StreamError> {
        Self::ap6_free_integers_with(block_count, StreamBudget::default())
    }

    pub fn ap6_free_integers_with(
        block_count: u32,
        budget: StreamBudget,
    ) -> Result<Self, StreamError> {
        budget.validate()?;
        let pattern = ProgressionPattern::plain_ap(3).expect("static pattern");
        let blocks = geometric_blocks(10, block_count, budget.max_abs_value)?;
        Self::assemble("z6", pattern, blocks, true, budget)
    }

    /// Positive-density permuted subset of the integers with no 3-term
    /// progression: mirrored blocks [5^i, floor(5^(i+1)/3)], i >= 1.
    pub fn dense_ap3_free_integers(block_count: u32) -> Result<Self, StreamError> {
        Self::dense_ap3_free_integers_with(block_count, StreamBudget::default())
    }

    pub fn dense_ap3_free_integers_with(
        block_count: u32,
        budget: StreamBudget,
    ) -> Result<Self, StreamError> {
        budget.validate()?;
        let pattern = ProgressionPattern::plain_ap(3).expect("static pattern");
        let a = Rational::from_int(5);
        let b = Rational::new(5, 3).expect("static rational");
        let blocks = ratio_blocks(a, b, block_count, true, budget.max_abs_value)?;
        Self::assemble("z3-density", pattern, blocks, false, budget)
    }

    /// Permuted subset of the positive integers with no 4-term progression
    /// and lower density (b-1)/(2b-1): blocks [ceil(a^n), floor(b a^n)] with
    /// a = 2b.
    pub fn ap4_free_positives(b: Rational, block_count: u32) -> Result<Self, StreamError> {
        Self::ap4_free_positives_with(b, block_count, StreamBudget::default())
    }

    pub fn ap4_free_positives_with(
        b: Rational,
        block_count: u32,
        budget: StreamBudget,
    ) -> Result<Self, StreamError> {
        budget.validate()?;
        if b <= Rational::from_int(1) {
            return Err(StreamError::InvalidParameter(format!(
                "b must exceed 1, got {b}"
            )));
        }
        let a = b.checked_mul(Rational::from_int(2))?;
        let pattern = ProgressionPattern::plain_ap(3).expect("static pattern");
        let blocks = ratio_blocks(a, b, block_count, false, budget.max_abs_value)?;
        Self::assemble("beta4", pattern, blocks, false, budget)
    }

    /// Permuted subset of the positive integers avoiding (r,s) 3-term
    /// progressions, blocks [ceil(a^n), floor(b a^n)].
    pub fn rs3_free_positives(
        r: u32,
        s: u32,
        a: Rational,
        b: Rational,
        block_count: u32,
    ) -> Result<Self, StreamError> {
        Self::rs3_free_positives_with(r, s, a, b, block_count, StreamBudget::default())
    }

    pub fn rs3_free_positives_with(
        r: u32,
        s: u32,
        a: Rational,
        b: Rational,
        block_count: u32,
        budget: StreamBudget,
    ) -> Result<Self, StreamError> {
        budget.validate()?;
        let pattern = ProgressionPattern::three_term(r, s).map_err(invalid_pattern)?;
        require_odd_three_term(&pattern)?;
        check_b_above_one(b)?;
        // b*(r+s) <= a*r, the one-block containment condition.
        let (lhs, rhs) = scale_pair(b, r as u64 + s as u64, a, r as u64)?;
        if lhs > rhs {
            return Err(StreamError::ConstraintViolated {
                name: "b <= a/(1 + s/r)",
                detail: format!("b*(r+s) = {lhs} exceeds a*r = {rhs}"),
            });
        }
        cross_block_constraint(r, s, a, b)?;
        let blocks = ratio_blocks(a, b, block_count, false, budget.max_abs_value)?;
        Self::assemble("rs-pos", pattern, blocks, false, budget)
    }

    /// Permuted subset of the integers avoiding (r,s) 3-term progressions,
    /// mirrored blocks [ceil(a^n), floor(b a^n)].
    pub fn rs3_free_integers(
        r: u32,
        s: u32,
        a: Rational,
        b: Rational,
        block_count: u32,
    ) -> Result<Self, StreamError> {
        Self::rs3_free_integers_with(r, s, a, b, block_count, StreamBudget::default())
    }

    pub fn rs3_free_integers_with(
        r: u32,
        s: u32,
        a: Rational,
        b: Rational,
        block_count: u32,
        budget: StreamBudget,
    ) -> Result<Self, StreamError> {
        budget.validate()?;
        let pattern = ProgressionPattern::three_term(r, s).map_err(invalid_pattern)?;
        require_odd_three_term(&pattern)?;
        check_b_above_one(b)?;
        // b*(r+2s) < a*r: the mirrored span must still fit in the gap.
        let (lhs, rhs) = scale_pair(b, r as u64 + 2 * s as u64, a, r as u64)?;
        if lhs >= rhs {
            return Err(StreamError::ConstraintViolated {
                name: "b < a/(1 + 2s/r)",
                detail: format!("b*(r+2s) = {lhs} is not below a*r = {rhs}"),
            });
        }
        cross_block_constraint(r, s, a, b)?;
        let blocks = ratio_blocks(a, b, block_count, true, budget.max_abs_value)?;
        Self::assemble("rs-z", pattern, blocks, false, budget)
    }

    /// Permutation of the integers avoiding (r^4, r^3 s, r^2 s^2, r s^3, s^4)
    /// 6-term progressions: a leading zero, then mirrored blocks
    /// [a^i, a^(i+1)) for an integer base a above 1 + 2(s/r + s^2/r^2 + s^3/r^3).
    pub fn rs6_free_integers(
        r: u32,
        s: u32,
        a: i64,
        block_count: u32,
    ) -> Result<Self, StreamError> {
        Self::rs6_free_integers_with(r, s, a, block_count, StreamBudget::default())
    }

    pub fn rs6_free_integers_with(
        r: u32,
        s: u32,
        a: i64,
        block_count: u32,
        budget: StreamBudget,
    ) -> Result<Self, StreamError> {
        budget.validate()?;
        let pattern = ProgressionPattern::three_term(r, s).map_err(invalid_pattern)?;
        require_odd_three_term(&pattern)?;
        let (r, s) = (r as i128, s as i128);
        // a*r^3 > r^3 + 2(s*r^2 + s^2*r + s^3), the escape-rate bound.
        let r3 = r * r * r;
        let tail = 2 * (s * r * r + s * s * r + s * s * s);
        if (a as i128) * r3 <= r3 + tail {
            let g = gcd_i128(r3 + tail, r3);
            let (num, den) = ((r3 + tail) / g, r3 / g);
            let bound = if den == 1 {
                format!("{num}")
            } else {
                format!("{num}/{den}")
            };
            return Err(StreamError::ConstraintViolated {
                name: "a > 1 + 2(s/r + s^2/r^2 + s^3/r^3)",
                detail: format!("a = {a} does not exceed the bound {bound}"),
            });
        }
        let blocks = geometric_blocks(a, block_count, budget.max_abs_value)?;
        Self::assemble("rs6", pattern, blocks, true, budget)
    }
}

fn invalid_pattern(e: crate::pattern::PatternError) -> StreamError {
    StreamError::InvalidParameter(e.to_string())
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs().max(1)
}

fn check_b_above_one(b: Rational) -> Result<(), StreamError> {
    if b <= Rational::from_int(1) {
        return Err(StreamError::InvalidParameter(format!(
            "b must exceed 1, got {b}"
        )));
    }
    Ok(())
}

/// (b * m1, a * m2) as exact rationals.
fn scale_pair(
    b: Rational,
    m1: u64,
    a: Rational,
    m2: u64,
) -> Result<(Rational, Rational), StreamError> {
    let lhs = b.checked_mul(Rational::from_int(m1 as i64))?;
    let rhs = a.checked_mul(Rational::from_int(m2 as i64))?;
    Ok((lhs, rhs))
}

/// b*(a*r + s) < a*(r + s): growth fast enough that an occurrence cannot
/// have its last two terms in one later block.
fn cross_block_constraint(r: u32, s: u32, a: Rational, b: Rational) -> Result<(), StreamError> {
    let ar = a.checked_mul(Rational::from_int(r as i64))?;
    let lhs = b.checked_mul(ar.checked_add(Rational::from_int(s as i64))?)?;
    let rhs = a.checked_mul(Rational::from_int(r as i64 + s as i64))?;
    if lhs >= rhs {
        return Err(StreamError::ConstraintViolated {
            name: "b < (1 + s/r)/(1 + (s/r)/a)",
            detail: format!("b*(a*r+s) = {lhs} is not below a*(r+s) = {rhs}"),
        });
    }
    Ok(())
}

/// Blocks [a^i, a^(i+1) - 1] for i in 0..count, always mirrored.
fn geometric_blocks(a: i64, count: u32, max_abs: i64) -> Result<Vec<BlockSpec>, StreamError> {
    if a < 2 {
        return Err(StreamError::InvalidParameter(format!(
            "integer base must be >= 2, got {a}"
        )));
    }
    let mut blocks = Vec::with_capacity(count as usize);
    let mut lo: i128 = 1;
    for i in 0..count {
        let hi = lo.checked_mul(a as i128).ok_or(RationalError::Overflow)? - 1;
        if hi >= max_abs as i128 {
            return Err(StreamError::ValueBudgetExceeded { bound: max_abs });
        }
        blocks.push(BlockSpec {
            index: i,
            lo: lo as i64,
            hi: hi as i64,
            mirrored: true,
        });
        lo = hi + 1;
    }
    Ok(blocks)
}

/// Blocks [ceil(a^n), floor(b*a^n)] for n in 1..=count; empty blocks are
/// dropped (they occur for b close to 1 with fractional a).
fn ratio_blocks(
    a: Rational,
    b: Rational,
    count: u32,
    mirrored: bool,
    max_abs: i64,
) -> Result<Vec<BlockSpec>, StreamError> {
    if a <= b {
        return Err(StreamError::InvalidParameter(format!(
            "need b < a, got a = {a}, b = {b}"
        )));
    }
    let mut blocks = Vec::with_capacity(count as usize);
    let mut power = Rational::from_int(1);
    for n in 1..=count {
        power = power.checked_mul(a)?;
        let lo = power.ceil_i64()?;
        let hi = b.checked_mul(power)?.floor_i64()?;
        if hi >= max_abs {
            return Err(StreamError::ValueBudgetExceeded { bound: max_abs });
        }
        if lo > hi {
            continue;
        }
        debug_assert!(lo >= 1);
        blocks.push(BlockSpec {
            index: n,
            lo,
            hi,
            mirrored,
        });
    }
    Ok(blocks)
}

impl Iterator for PermutationStream {
    type Item = i64;

    fn next(&mut self) -> Option<i64> {
        if self.emit_zero && !self.zero_done {
            self.zero_done = true;
            self.emitted += 1;
            return Some(0);
        }
        loop {
            if self.block_idx >= self.blocks.len() {
                return None;
            }
            if self.current.is_none() {
                self.current = Some(self.materialize(self.block_idx));
                self.within = 0;
            }
            let current = self.current.as_ref().unwrap();
            if self.within < current.len() {
                let v = current[self.within];
                self.within += 1;
                self.emitted += 1;
                return Some(v);
            }
            self.current = None;
            self.block_idx += 1;
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.emitted) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for PermutationStream {}
