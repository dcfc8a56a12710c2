//! Planarity, combinatorial embeddings, face machinery, class predicates, and
//! the active-vertex lemma checkers.
//!
//! [`embed_planar`] either returns an [`Embedding`] — a rotation system with
//! its derived face walks, self-certified by Euler's formula — or a
//! [`KuratowskiWitness`] naming a K5/K3,3 subdivision. [`classify`] evaluates
//! the class predicates (planar, outerplanar, bipartite, maximal planar,
//! quadrangulation, maximal outerplanar) used as bound guards, and
//! [`active_sets`]/[`check_lemma`] expose the level-by-level active-vertex
//! structure with its face-sharing graphs.

mod active;
mod demoucron;
mod kuratowski;
mod lemmas;

pub use active::{active_sets, active_sets_in, ActiveStructure, FaceSharingLevel};
pub use lemmas::{check_lemma, LemmaError, LemmaId, LemmaReport, Verdict};

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Combinatorial embedding of a connected planar graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    /// Cyclic neighbor order around each vertex.
    pub rotation: Vec<Vec<usize>>,
    /// Closed walks bounding the faces; every directed arc appears in exactly
    /// one walk, so Σ lengths = 2m and (for connected graphs) n − m + f = 2.
    pub faces: Vec<Vec<usize>>,
    /// Index of the outer face for outerplane embeddings.
    pub outer_face: Option<usize>,
}

impl Embedding {
    /// Face count.
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Faces (as indices) incident to each vertex, deduplicated.
    pub fn vertex_faces(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); n];
        for (idx, face) in self.faces.iter().enumerate() {
            for &v in face {
                if out[v].last() != Some(&idx) {
                    out[v].push(idx);
                }
            }
        }
        for list in &mut out {
            list.sort_unstable();
            list.dedup();
        }
        out
    }

    /// Debug-oriented text form: one line per vertex, `v: cyclic neighbors`.
    pub fn rotation_text(&self) -> String {
        let mut out = String::new();
        for (v, order) in self.rotation.iter().enumerate() {
            let line: Vec<String> = order.iter().map(usize::to_string).collect();
            out.push_str(&format!("{v}: {}\n", line.join(" ")));
        }
        out
    }
}

/// Which Kuratowski graph the witness subdivides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A K5 or K3,3 subdivision certifying non-planarity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    /// The 5 (K5) or 6 (K3,3) branch vertices.
    pub branch_vertices: Vec<usize>,
    /// Internally disjoint paths between branch vertices; endpoints are branch
    /// vertices, interiors are the subdividing vertices.
    pub paths: Vec<Vec<usize>>,
}

/// Outcome of a planarity run: constructive either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanarityResult {
    Planar(Embedding),
    NonPlanar(KuratowskiWitness),
}

impl PlanarityResult {
    /// The embedding, if planar.
    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            PlanarityResult::Planar(emb) => Some(emb),
            PlanarityResult::NonPlanar(_) => None,
        }
    }

    /// True on the planar branch.
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityResult::Planar(_))
    }
}

/// Face-tracing and rotation validation errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("rotation at vertex {0} is not a permutation of its neighbors")]
    MalformedRotation(usize),
    #[error("face walks violate Euler's formula: n={n}, m={m}, f={f}")]
    EulerViolation { n: usize, m: usize, f: usize },
}

/// Class membership flags used as bound guards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    pub planar: bool,
    pub outerplanar: bool,
    pub bipartite: bool,
    /// Planar with m = 3n−6 (n ≥ 3): a triangulation.
    pub maximal_planar: bool,
    /// Planar, bipartite, m = 2n−4, every face a quadrilateral cycle.
    pub quadrangulation: bool,
    /// Outerplanar with m = 2n−3 (n ≥ 3): a triangulated polygon.
    pub maximal_outerplanar: bool,
}

/// Tests planarity and constructs an embedding or a Kuratowski witness.
///
/// The planar branch self-certifies: face walks are traced from the rotation
/// system and checked against Euler's formula. The non-planar branch deletes
/// edges while non-planarity persists, leaving exactly a K5/K3,3 subdivision,
/// which is verified by suppressing degree-2 vertices.
///
/// # Panics
///
/// Panics on disconnected input (enumeration pipelines filter beforehand).
///
/// # Examples
///
/// ```
/// use plandist::{planar::embed_planar, Graph};
///
/// let emb = embed_planar(&Graph::complete(4));
/// assert_eq!(emb.embedding().unwrap().face_count(), 4);
/// assert!(!embed_planar(&Graph::complete(5)).is_planar());
/// ```
pub fn embed_planar(g: &Graph) -> PlanarityResult {
    assert!(g.is_connected(), "embed_planar requires a connected graph");
    match demoucron::embed_connected(g) {
        Some(rotation) => {
            let faces = trace_faces(g, &rotation).expect("constructed rotations are valid");
            let emb = Embedding {
                rotation,
                faces,
                outer_face: None,
            };
            debug_assert!(verify_embedding(g, &emb).is_ok());
            PlanarityResult::Planar(emb)
        }
        None => PlanarityResult::NonPlanar(kuratowski::witness(g)),
    }
}

/// Planarity as a predicate (components tested independently).
pub fn is_planar(g: &Graph) -> bool {
    demoucron::is_planar(g)
}

/// Outerplane embedding via the apex reduction: add a vertex adjacent to all
/// of `V`; the graph is outerplanar iff the augmented graph is planar, and
/// deleting the apex merges its incident faces into one face bounded by every
/// vertex — the outer face.
///
/// Returns `None` when `g` is not outerplanar.
///
/// # Panics
///
/// Panics on disconnected input.
pub fn outerplane_embedding(g: &Graph) -> Option<Embedding> {
    assert!(g.is_connected(), "outerplane_embedding requires a connected graph");
    let n = g.n();
    if n == 1 {
        return Some(Embedding {
            rotation: vec![Vec::new()],
            faces: vec![vec![0]],
            outer_face: Some(0),
        });
    }
    let mut edges = g.edges();
    for v in 0..n {
        edges.push((v, n));
    }
    let augmented = Graph::from_edges(n + 1, &edges).expect("apex edges are valid");
    let rotation_aug = demoucron::embed_connected(&augmented)?;
    let mut rotation: Vec<Vec<usize>> = rotation_aug[..n].to_vec();
    for order in &mut rotation {
        order.retain(|&w| w != n);
    }
    let faces = trace_faces(g, &rotation).expect("apex-reduced rotations are valid");
    // Deleting the apex merged its faces into one containing every vertex.
    let outer = faces.iter().position(|face| {
        let mut seen = vec![false; n];
        for &v in face {
            seen[v] = true;
        }
        seen.iter().all(|&s| s)
    });
    debug_assert!(outer.is_some());
    let emb = Embedding {
        rotation,
        faces,
        outer_face: outer,
    };
    debug_assert!(verify_embedding(g, &emb).is_ok());
    Some(emb)
}

/// Outerplanarity as a predicate.
pub fn is_outerplanar(g: &Graph) -> bool {
    outerplane_embedding(g).is_some()
}

/// Traces all face walks of a rotation system.
///
/// Walk rule: after arriving at `v` from `u`, leave along the neighbor that
/// follows `u` in the cyclic order at `v`. Each directed arc lies on exactly
/// one walk.
///
/// # Errors
///
/// Rejects rotations that are not permutations of the neighbor lists.
pub fn trace_faces(g: &Graph, rotation: &[Vec<usize>]) -> Result<Vec<Vec<usize>>, EmbedError> {
    let n = g.n();
    let mut pos: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for v in 0..n {
        let mut sorted: Vec<usize> = rotation[v].clone();
        sorted.sort_unstable();
        if sorted != g.neighbors(v) {
            return Err(EmbedError::MalformedRotation(v));
        }
        for (i, &w) in rotation[v].iter().enumerate() {
            pos[v].insert(w, i);
        }
    }
    if n == 1 {
        // A single vertex bounds the one face of the plane.
        return Ok(vec![vec![0]]);
    }
    let mut used: Vec<Vec<bool>> = (0..n).map(|v| vec![false; g.degree(v)]).collect();
    let mut faces = Vec::new();
    for start_v in 0..n {
        for start_i in 0..g.degree(start_v) {
            if used[start_v][start_i] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut u, mut i) = (start_v, start_i);
            loop {
                used[u][i] = true;
                walk.push(u);
                let v = rotation[u][i];
                let j = (pos[v][&u] + 1) % g.degree(v);
                (u, i) = (v, j);
                if (u, i) == (start_v, start_i) {
                    break;
                }
            }
            faces.push(walk);
        }
    }
    Ok(faces)
}

/// Full validity check of an embedding against its graph: rotations are
/// neighbor permutations, faces re-trace identically, arc coverage is exact,
/// and Euler's formula holds.
pub fn verify_embedding(g: &Graph, emb: &Embedding) -> Result<(), EmbedError> {
    let retraced = trace_faces(g, &emb.rotation)?;
    let total_len: usize = emb.faces.iter().map(Vec::len).sum();
    let (n, m, f) = (g.n(), g.edge_count(), emb.faces.len());
    let expected_len = if m == 0 { 1 } else { 2 * m };
    if retraced.len() != f || total_len != expected_len || n + f != m + 2 {
        return Err(EmbedError::EulerViolation { n, m, f });
    }
    Ok(())
}

/// Evaluates all class predicates for a connected graph.
///
/// Maximality flags use the edge-count characterizations (m = 3n−6 planar,
/// m = 2n−3 outerplanar, m = 2n−4 planar-bipartite with quadrilateral faces);
/// the catalog tests cross-verify them against literal edge-addition probes.
///
/// # Panics
///
/// Panics on disconnected input.
///
/// # Examples
///
/// ```
/// use plandist::{planar::classify, Graph};
///
/// let flags = classify(&Graph::complete(4));
/// assert!(flags.maximal_planar && !flags.outerplanar);
///
/// let c4 = Graph::cycle(4);
/// assert!(classify(&c4).quadrangulation);
/// ```
pub fn classify(g: &Graph) -> ClassFlags {
    assert!(g.is_connected(), "classify requires a connected graph");
    let n = g.n();
    let m = g.edge_count();
    let bipartite = g.is_bipartite();
    // Screen with the cheap planarity test so non-planar inputs never pay
    // for Kuratowski witness extraction.
    let planar = is_planar(g);
    let outerplanar = planar && is_outerplanar(g);
    let maximal_planar = planar && n >= 3 && m == 3 * n - 6;
    let maximal_outerplanar = outerplanar && n >= 3 && m == 2 * n - 3;
    let quadrangulation = planar && bipartite && n >= 4 && m == 2 * n - 4 && {
        let planarity = embed_planar(g);
        let faces = &planarity.embedding().expect("planar was confirmed").faces;
        faces.iter().all(|face| {
            face.len() == 4 && {
                let mut sorted = face.clone();
                sorted.sort_unstable();
                sorted.windows(2).all(|w| w[0] != w[1])
            }
        })
    };
    ClassFlags {
        planar,
        outerplanar,
        bipartite,
        maximal_planar,
        quadrangulation,
        maximal_outerplanar,
    }
}
