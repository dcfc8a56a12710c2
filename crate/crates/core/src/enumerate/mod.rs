//! Exhaustive catalogs of small graphs in each supported class, plus seeded
//! random connected graphs.
//!
//! Every catalog holds exactly one representative per isomorphism class —
//! deduplication is by canonical code — and is returned in canonical-code
//! order, so results are deterministic across runs and parallel schedules.
//! Each generator is paired with an independent recount (filtered generation
//! for triangulations and quadrangulations, ear growth for maximal
//! outerplanar graphs) so catalog sizes are confirmed by two methods.

mod outerplanar;
mod quadrangulation;
mod random;
mod triangulation;

pub use outerplanar::enumerate_maximal_outerplanar;
pub use quadrangulation::enumerate_quadrangulations;
pub use random::random_connected;
pub use triangulation::enumerate_triangulations;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::canon::CanonicalCode;
use crate::graph::Graph;
use crate::graph6;

/// Rejection of an order outside a catalog's supported range.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {n} is out of range for {what}: supported {min} ≤ n ≤ {max}")]
    OutOfRange {
        what: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },
}

/// Decodes a deduplicated code set into graphs, in code order.
fn decode_sorted(codes: BTreeSet<CanonicalCode>) -> Vec<Graph> {
    codes
        .iter()
        .map(|code| graph6::decode(&code.0).expect("canonical codes are valid graph6"))
        .collect()
}

/// Lexicographic k-subset successor over `0..n`; `false` when exhausted.
/// Feeds the brute-force recount oracles, so only test builds need it.
#[cfg(test)]
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Runs `f` on every k-subset of `0..n`, in lexicographic order.
#[cfg(test)]
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        if !next_combination(&mut idx, n) {
            return;
        }
    }
}

/// All unordered vertex pairs of an n-vertex graph.
#[cfg(test)]
fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    pairs
}
