//! Parallel/sequential execution switch.
//!
//! Batch stages (sweeps, catalog checking, pairwise flow fan-out) funnel
//! through [`map_collect`], which runs on rayon when the `parallel` feature is
//! enabled and degrades to a plain sequential map otherwise. Results keep input
//! order either way, so callers are schedule-independent by construction; the
//! bench suite compares the two paths on identical workloads.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every item, preserving input order in the output.
///
/// With the `parallel` feature this fans out on the rayon thread pool; without
/// it, it is exactly [`map_collect_seq`].
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_collect_seq(items, f)
    }
}

/// Sequential reference path with the same contract as [`map_collect`].
pub fn map_collect_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
