//! Active vertices and per-level face-sharing graphs.
//!
//! Fix a root `v`. A vertex `u ∈ N_i(v)` is *active* when it has a neighbor
//! in `N_{i+1}(v)`; the active set is `A_i(v)`. For `1 ≤ i ≤ ecc(v)−1` the
//! face-sharing graph `Ĥ_i` has vertex set `A_i(v)` with two vertices
//! adjacent exactly when some face walk of the fixed embedding contains both.

use std::collections::HashSet;

use crate::graph::Graph;

use super::{embed_planar, Embedding};

/// One level's face-sharing graph `Ĥ_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSharingLevel {
    /// Vertices of `A_i(root)` in ascending order.
    pub members: Vec<usize>,
    /// `Ĥ_i` on indices into `members`.
    pub graph: Graph,
}

/// Active sets of one root across all levels `1 ≤ i ≤ ecc(root)−1`.
///
/// Roots with eccentricity ≤ 1 yield empty structures (no levels in range).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActiveStructure {
    pub root: usize,
    /// Covered level indices: `1, 2, …, ecc(root)−1`.
    pub levels: Vec<usize>,
    /// `active_sets[k] = A_{levels[k]}(root)`, ascending.
    pub active_sets: Vec<Vec<usize>>,
    /// `Ĥ_i` aligned with `levels`; `None` when no embedding is available
    /// (non-planar input).
    pub face_sharing: Option<Vec<FaceSharingLevel>>,
}

impl ActiveStructure {
    /// Active set at level `i`, if `i` is in range.
    pub fn active_at(&self, i: usize) -> Option<&[usize]> {
        let k = self.levels.iter().position(|&l| l == i)?;
        Some(&self.active_sets[k])
    }
}

/// Computes `A_i(v)` for all levels, with `Ĥ_i` from the planar embedding
/// when one exists.
///
/// # Panics
///
/// Panics on disconnected input or `v ≥ n`.
pub fn active_sets(g: &Graph, v: usize) -> ActiveStructure {
    match embed_planar(g) {
        super::PlanarityResult::Planar(emb) => build(g, v, Some((&emb.faces, None))),
        super::PlanarityResult::NonPlanar(_) => build(g, v, None),
    }
}

/// Like [`active_sets`], but face sharing is read from a caller-fixed
/// embedding. With `exclude_outer` set, co-occurrence on the outer face does
/// not count — the sharing face must be an inner face.
///
/// # Panics
///
/// Panics when `exclude_outer` is set but `emb.outer_face` is `None`.
pub fn active_sets_in(g: &Graph, v: usize, emb: &Embedding, exclude_outer: bool) -> ActiveStructure {
    let skip = exclude_outer.then(|| {
        emb.outer_face
            .expect("outer-face exclusion requires an outerplane embedding")
    });
    build(g, v, Some((&emb.faces, skip)))
}

fn build(g: &Graph, v: usize, faces: Option<(&[Vec<usize>], Option<usize>)>) -> ActiveStructure {
    let levels = g
        .level_sets(v)
        .expect("active_sets requires a connected graph and a valid root")
        .levels;
    let ecc = levels.len() - 1;
    let n = g.n();
    let mut level_of = vec![0usize; n];
    for (i, level) in levels.iter().enumerate() {
        for &u in level {
            level_of[u] = i;
        }
    }

    let mut out_levels = Vec::new();
    let mut active_sets = Vec::new();
    for i in 1..ecc {
        let active: Vec<usize> = levels[i]
            .iter()
            .copied()
            .filter(|&u| g.neighbors(u).iter().any(|&w| level_of[w] == i + 1))
            .collect();
        // Every vertex one level further out is reached through an active vertex.
        debug_assert!(levels[i + 1]
            .iter()
            .all(|&w| g.neighbors(w).iter().any(|&u| active.binary_search(&u).is_ok())));
        out_levels.push(i);
        active_sets.push(active);
    }

    let face_sharing = faces.map(|(walks, skip)| {
        out_levels
            .iter()
            .zip(&active_sets)
            .map(|(_, members)| face_sharing_level(members, walks, skip))
            .collect()
    });

    ActiveStructure {
        root: v,
        levels: out_levels,
        active_sets,
        face_sharing,
    }
}

fn face_sharing_level(
    members: &[usize],
    walks: &[Vec<usize>],
    skip: Option<usize>,
) -> FaceSharingLevel {
    let index_of = |u: usize| members.binary_search(&u).ok();
    let mut edges = HashSet::new();
    for (f, walk) in walks.iter().enumerate() {
        if Some(f) == skip {
            continue;
        }
        let mut present: Vec<usize> = walk.iter().filter_map(|&u| index_of(u)).collect();
        present.sort_unstable();
        present.dedup();
        for a in 0..present.len() {
            for b in (a + 1)..present.len() {
                edges.insert((present[a], present[b]));
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = edges.into_iter().collect();
    edges.sort_unstable();
    let graph = Graph::from_edges(members.len(), &edges).expect("index pairs are valid");
    FaceSharingLevel {
        members: members.to_vec(),
        graph,
    }
}
