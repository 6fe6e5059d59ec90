//! Thin execution-mode shim: data-parallel map with a sequential fallback.
//!
//! The `parallel` feature (on by default) routes [`ExecMode::Auto`] through
//! rayon; without it everything runs sequentially.  Results are collected in
//! input order, so output is deterministic in either mode.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a bulk operation should execute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExecMode {
    /// Parallel when the `parallel` feature is enabled, sequential otherwise.
    Auto,
    /// Force single-threaded execution.
    Sequential,
    /// Force the rayon pool; falls back to sequential without the feature.
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        ExecMode::Auto
    }
}

impl ExecMode {
    fn parallel(self) -> bool {
        match self {
            ExecMode::Sequential => false,
            ExecMode::Parallel | ExecMode::Auto => cfg!(feature = "parallel"),
        }
    }
}

/// Map over a slice, preserving order.
pub fn map_slice<T, U, F>(mode: ExecMode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// Map-reduce over an index range with a commutative, associative fold.
pub fn reduce_range<U, F, R>(mode: ExecMode, len: usize, map: F, identity: U, reduce: R) -> U
where
    U: Send + Sync + Clone,
    F: Fn(usize) -> U + Sync + Send,
    R: Fn(U, U) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.parallel() {
        return (0..len)
            .into_par_iter()
            .map(map)
            .reduce(|| identity.clone(), &reduce);
    }
    let _ = mode;
    (0..len).map(map).fold(identity, reduce)
}
