//! Catalog of maximal outerplanar graphs via convex-polygon triangulations.
//!
//! A maximal outerplanar graph of order n is exactly a triangulation of a
//! convex n-gon: the outer face is the Hamiltonian boundary cycle and every
//! inner face is a triangle. The primary generator enumerates all chord sets
//! recursively (one per labeled triangulation, Catalan-many) and
//! deduplicates by canonical code; an independent ear-growth recount
//! confirms the catalog sizes.

use std::collections::BTreeSet;

use crate::canon::{canonical_code, CanonicalCode};
use crate::exec;
use crate::graph::Graph;

use super::{decode_sorted, EnumerateError};

#[cfg(test)]
use crate::planar::outerplane_embedding;

/// All maximal outerplanar graphs of order `n`, one per isomorphism class,
/// in canonical-code order.
///
/// # Errors
///
/// Rejects `n` outside `3 ..= 14`.
///
/// # Examples
///
/// ```
/// use plandist::enumerate::enumerate_maximal_outerplanar;
///
/// assert_eq!(enumerate_maximal_outerplanar(4).unwrap().len(), 1);
/// assert_eq!(enumerate_maximal_outerplanar(6).unwrap().len(), 3);
/// ```
pub fn enumerate_maximal_outerplanar(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if !(3..=14).contains(&n) {
        return Err(EnumerateError::OutOfRange {
            what: "maximal outerplanar graphs",
            n,
            min: 3,
            max: 14,
        });
    }
    let mut boundary: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    boundary.push((0, n - 1));
    let codes: BTreeSet<CanonicalCode> =
        exec::map_collect(polygon_triangulations(n), |chords| {
            let mut edges = boundary.clone();
            edges.extend(chords);
            canonical_code(&Graph::from_edges(n, &edges).expect("polygon chords are simple"))
        })
        .into_iter()
        .collect();
    Ok(decode_sorted(codes))
}

/// Chord sets of all triangulations of the convex polygon `0 .. n-1`
/// (boundary edges excluded). Recursion on the apex of the triangle
/// containing the edge `(lo, hi)`.
fn polygon_triangulations(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if hi - lo < 2 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for apex in (lo + 1)..hi {
            for left in rec(lo, apex) {
                for right in rec(apex, hi) {
                    let mut chords = left.clone();
                    chords.extend_from_slice(&right);
                    if apex > lo + 1 {
                        chords.push((lo, apex));
                    }
                    if hi > apex + 1 {
                        chords.push((apex, hi));
                    }
                    out.push(chords);
                }
            }
        }
        out
    }
    rec(0, n - 1)
}

/// Independent recount by ear growth: every maximal outerplanar graph on
/// k+1 vertices arises from one on k vertices by attaching a new vertex to
/// two consecutive boundary vertices (an ear), since every such graph has a
/// degree-2 boundary vertex whose removal is again maximal outerplanar.
#[cfg(test)]
fn maximal_outerplanar_by_ears(n: usize) -> BTreeSet<CanonicalCode> {
    assert!(n >= 3);
    let mut level = vec![Graph::complete(3)];
    for size in 4..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            let emb = outerplane_embedding(g).expect("members are outerplanar");
            let outer = &emb.faces[emb.outer_face.expect("outer face is marked")];
            for i in 0..outer.len() {
                let (u, v) = (outer[i], outer[(i + 1) % outer.len()]);
                let mut edges = g.edges();
                edges.push((u, size - 1));
                edges.push((v, size - 1));
                let h = Graph::from_edges(size, &edges).expect("ear keeps the graph simple");
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level.iter().map(canonical_code).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::planar::{classify, is_outerplanar};

    #[test]
    fn rejects_out_of_range_orders() {
        assert!(enumerate_maximal_outerplanar(2).is_err());
        assert!(enumerate_maximal_outerplanar(15).is_err());
    }

    #[test]
    fn catalog_sizes_match_the_frozen_counts() {
        let counts: Vec<usize> = (3..=12)
            .map(|n| enumerate_maximal_outerplanar(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 3, 4, 12, 27, 82, 228, 733]);
    }

    #[test]
    fn polygon_and_ear_methods_agree() {
        for n in 3..=10 {
            let polygon: BTreeSet<CanonicalCode> = enumerate_maximal_outerplanar(n)
                .unwrap()
                .iter()
                .map(canonical_code)
                .collect();
            assert_eq!(polygon, maximal_outerplanar_by_ears(n), "n = {n}");
        }
    }

    #[test]
    fn members_pass_the_class_predicate_and_are_edge_maximal() {
        for n in [5, 8] {
            for g in enumerate_maximal_outerplanar(n).unwrap() {
                assert!(classify(&g).maximal_outerplanar);
                for u in 0..n {
                    for v in (u + 1)..n {
                        if g.has_edge(u, v) {
                            continue;
                        }
                        let mut edges = g.edges();
                        edges.push((u, v));
                        let h = Graph::from_edges(n, &edges).unwrap();
                        assert!(!is_outerplanar(&h), "adding ({u},{v}) stayed outerplanar");
                    }
                }
            }
        }
    }

    #[test]
    fn generated_family_members_appear_in_their_catalog() {
        for n in [8, 12] {
            let member = generate(&FamilySpec::mop(n)).unwrap().graph;
            let code = canonical_code(&member);
            let catalog = enumerate_maximal_outerplanar(n).unwrap();
            assert!(
                catalog.iter().any(|g| canonical_code(g) == code),
                "MOP({n}) missing from its catalog"
            );
        }
    }

    #[test]
    fn fan_and_snake_are_distinct_at_order_six() {
        let catalog = enumerate_maximal_outerplanar(6).unwrap();
        // Max degree distinguishes the fan (5), the snake (3-3-4... max 4)
        // and the intermediate shape.
        let mut max_degrees: Vec<usize> = catalog
            .iter()
            .map(|g| (0..6).map(|v| g.degree(v)).max().unwrap())
            .collect();
        max_degrees.sort_unstable();
        assert_eq!(max_degrees, vec![4, 4, 5]);
    }
}
