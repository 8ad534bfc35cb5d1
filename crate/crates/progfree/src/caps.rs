//! Central size and value caps.
//!
//! The block constructions grow geometrically, so runaway parameters are
//! stopped up front: element budgets bound memory and time, and the value
//! bound keeps every intermediate product of the detection arithmetic inside
//! 128 bits without resorting to big integers.

/// Max sequence length accepted by the brute-force oracle.
pub const ORACLE_SEQUENCE_CAP: usize = 4096;

/// Max ground-set size for exact backtracking counts.
pub const BACKTRACK_COUNT_CAP: u32 = 12;

/// Max ground-set size for the naive count (filters all n! permutations).
pub const NAIVE_COUNT_CAP: u32 = 9;

/// Max number of permutations the enumerating counter will materialize.
pub const ENUMERATE_CAP: u64 = 1_000_000;

/// Max ground-set size for the recursive rearrangement.
pub const REARRANGE_CAP: usize = 1_000_000;

/// Default element budget for block construction streams.
pub const STREAM_DEFAULT_MAX_ELEMENTS: u64 = 1_000_000;

/// Hard ceiling callers may not raise the element budget past.
pub const STREAM_HARD_MAX_ELEMENTS: u64 = 10_000_000;

/// Absolute-value bound for every emitted or counted integer: |v| < 2^62.
pub const VALUE_ABS_BOUND: i64 = 1 << 62;
