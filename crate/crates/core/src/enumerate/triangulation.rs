//! Catalog of maximal planar graphs (triangulations of the sphere) by
//! diagonal-flip closure.
//!
//! Vertex-insertion-only generation would miss every triangulation of
//! minimum degree ≥ 4 (the octahedron already), but the flip graph of
//! n-vertex sphere triangulations is connected, so breadth-first closure
//! under diagonal flips starting from the stacked triangulation reaches
//! every isomorphism class. A brute-force filter over all graphs with
//! 3n−6 edges independently confirms the catalog for small n.

use std::collections::{BTreeMap, BTreeSet};

use crate::canon::canonical_code;
use crate::exec;
use crate::graph::Graph;
use crate::planar::{classify, embed_planar};

use super::{decode_sorted, EnumerateError};

#[cfg(test)]
use super::{all_pairs, for_each_combination};
#[cfg(test)]
use crate::{canon::CanonicalCode, planar::is_planar};

/// All maximal planar graphs of order `n`, one per isomorphism class, in
/// canonical-code order.
///
/// # Errors
///
/// Rejects `n` outside `4 ..= 10`.
///
/// # Examples
///
/// ```
/// use plandist::enumerate::enumerate_triangulations;
///
/// assert_eq!(enumerate_triangulations(4).unwrap().len(), 1); // K4
/// assert_eq!(enumerate_triangulations(6).unwrap().len(), 2);
/// ```
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if !(4..=10).contains(&n) {
        return Err(EnumerateError::OutOfRange {
            what: "triangulations",
            n,
            min: 4,
            max: 10,
        });
    }
    let seed = stacked_triangulation(n);
    let mut seen = BTreeSet::new();
    seen.insert(canonical_code(&seed));
    let mut frontier = vec![seed];
    while !frontier.is_empty() {
        let expansions = exec::map_collect(frontier, |g| {
            diagonal_flips(&g)
                .into_iter()
                .map(|h| (canonical_code(&h), h))
                .collect::<Vec<_>>()
        });
        let mut next = Vec::new();
        for (code, h) in expansions.into_iter().flatten() {
            if seen.insert(code) {
                next.push(h);
            }
        }
        frontier = next;
    }
    Ok(decode_sorted(seen))
}

/// The stacked triangulation: K4, then each new vertex subdivides the face
/// (0, 1, previous vertex), which the previous insertion always recreates.
fn stacked_triangulation(n: usize) -> Graph {
    debug_assert!(n >= 4);
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    for v in 4..n {
        edges.push((0, v));
        edges.push((1, v));
        edges.push((v - 1, v));
    }
    Graph::from_edges(n, &edges).expect("stacked triangulation is simple")
}

/// Every triangulation one diagonal flip away from `g`: an edge shared by
/// triangles (u, v, a) and (u, v, b) is replaced by (a, b) when that keeps
/// the graph simple.
fn diagonal_flips(g: &Graph) -> Vec<Graph> {
    let planarity = embed_planar(g);
    let emb = planarity.embedding().expect("triangulations are planar");
    let mut apexes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for face in &emb.faces {
        debug_assert_eq!(face.len(), 3, "triangulation face must be a triangle");
        for i in 0..3 {
            let (u, v, w) = (face[i], face[(i + 1) % 3], face[(i + 2) % 3]);
            apexes.entry((u.min(v), u.max(v))).or_default().push(w);
        }
    }
    let mut out = Vec::new();
    for (&(u, v), pair) in &apexes {
        debug_assert_eq!(pair.len(), 2, "every edge borders two triangles");
        let (a, b) = (pair[0], pair[1]);
        if a == b || g.has_edge(a, b) {
            continue;
        }
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .filter(|&(x, y)| (x.min(y), x.max(y)) != (u, v))
            .collect();
        edges.push((a, b));
        let h = Graph::from_edges(g.n(), &edges).expect("flip keeps the graph simple");
        debug_assert!(classify(&h).maximal_planar, "flip must preserve maximality");
        out.push(h);
    }
    out
}

/// Independent recount: filter every n-vertex graph with 3n−6 edges for
/// connected maximal planarity. Exponential; intended for n ≤ 7.
#[cfg(test)]
fn triangulations_by_filter(n: usize) -> BTreeSet<CanonicalCode> {
    let pairs = all_pairs(n);
    let m = 3 * n - 6;
    let mut out = BTreeSet::new();
    for_each_combination(pairs.len(), m, |idx| {
        let edges: Vec<(usize, usize)> = idx.iter().map(|&i| pairs[i]).collect();
        let g = Graph::from_edges(n, &edges).expect("pair subsets are simple");
        if g.is_connected() && is_planar(&g) && classify(&g).maximal_planar {
            out.insert(canonical_code(&g));
        }
    });
    out
}
