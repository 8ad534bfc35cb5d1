//! Execution mode for the shardable operations.

/// Whether a shardable operation (exhaustive claim checks, backtracking
/// counts) may fan out over the rayon pool.
///
/// `Parallel` is a request, not a guarantee: when the crate is built without
/// the `parallel` feature it degrades to sequential execution. Results are
/// identical either way; only wall time differs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

impl ExecMode {
    pub(crate) fn parallel_enabled(self) -> bool {
        cfg!(feature = "parallel") && self == ExecMode::Parallel
    }
}
