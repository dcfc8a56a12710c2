//! Seeded random connected graphs for randomized sweeps.
//!
//! Uniform-random-edge model: each draw samples an edge probability p from
//! U[0.05, 0.95], then a G(n, p) graph, rejecting until connected. Streams
//! are keyed by (seed, index) so any single graph can be regenerated
//! without replaying the whole sweep.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Supported order range for random generation.
pub const RANDOM_N_RANGE: (usize, usize) = (2, 16);

/// The `index`-th random connected graph of order `n` in the stream `seed`.
/// Deterministic: the same triple always yields the same graph.
///
/// # Panics
///
/// Panics when `n` is outside `2 ..= 16`.
///
/// # Examples
///
/// ```
/// use plandist::enumerate::random_connected;
///
/// let a = random_connected(7, 0, 9);
/// let b = random_connected(7, 0, 9);
/// assert_eq!(a.edges(), b.edges());
/// assert!(a.is_connected());
/// ```
pub fn random_connected(seed: u64, index: u64, n: usize) -> Graph {
    assert!(
        (RANDOM_N_RANGE.0..=RANDOM_N_RANGE.1).contains(&n),
        "random_connected supports {} ≤ n ≤ {}",
        RANDOM_N_RANGE.0,
        RANDOM_N_RANGE.1
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    loop {
        let p: f64 = rng.random_range(0.05..=0.95);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).expect("sampled edges are simple");
        if g.is_connected() {
            return g;
        }
    }
}
