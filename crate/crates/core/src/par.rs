//! Data-parallel execution of independent work items.
//!
//! Checks over independent `(S, v)` or `I` instances fan out through
//! [`map_slice`]; each individual search stays single-threaded and
//! deterministic, and results come back in input order, so output never
//! depends on the scheduler or thread count.
//!
//! With the default `parallel` feature the work runs on the rayon pool; built
//! with `--no-default-features` the same code degrades to a plain sequential
//! loop.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Sequential map with the same signature, kept available in both builds so
/// benchmarks can compare the two paths directly.
pub fn map_slice_sequential<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Pin the global worker count (the CLI `--jobs` flag). A no-op without the
/// `parallel` feature, and after the pool has already been used.
#[cfg(feature = "parallel")]
pub fn configure_threads(n: usize) -> bool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .is_ok()
}

#[cfg(not(feature = "parallel"))]
pub fn configure_threads(_n: usize) -> bool {
    false
}
