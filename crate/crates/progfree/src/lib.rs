//! Permutations avoiding generalized arithmetic progressions.
//!
//! A progression of length k with coefficients (c1, ..., c_{k-1}) is a value
//! sequence a, a + c1*d, ..., a + (c1+...+c_{k-1})*d for a nonzero integer d,
//! occurring at strictly increasing positions. This crate provides, for such
//! patterns:
//!
//! - detection inside finite sequences, with an independent brute-force
//!   oracle ([`detect`], [`oracle`]);
//! - deterministic constructions of finite and block-infinite permutations
//!   that provably avoid given patterns ([`rearrange`], [`stream`]);
//! - exact counts of avoiding permutations of 1..=n and the recursive
//!   lower-bound machinery around them ([`count`]);
//! - exhaustive verification of the finite kernels used by the structural
//!   containment proofs, plus streaming witness finders ([`claims`]);
//! - closed-form membership counting and density profiles for the interval
//!   families underlying the constructions ([`density`]).
//!
//! Heavy enumerations shard across the rayon pool when the default
//! `parallel` feature is enabled and run sequentially otherwise; verdicts
//! and counts do not depend on the mode.

pub mod caps;
pub mod claims;
pub mod count;
pub mod density;
pub mod detect;
mod exec;
pub mod oracle;
pub mod pattern;
mod permute;
pub mod rational;
pub mod rearrange;
pub mod sequence;
pub mod stream;
pub mod witness;

pub use exec::ExecMode;
pub use pattern::{PatternError, ProgressionPattern, SignPolicy};
pub use rational::{Rational, RationalError};
pub use sequence::{SequenceError, SequenceView};
pub use witness::{Witness, WitnessError, verify_witness};

pub use detect::{
    contains_progression, contains_progression_with, find_progression, find_progression_filtered,
};
pub use oracle::naive_find;
pub use rearrange::{ap_free_permutation, rearrange_progression_free};
pub use stream::{PermutationStream, StreamBudget};
