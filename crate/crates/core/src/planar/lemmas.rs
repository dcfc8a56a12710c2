//! Executable checks of the active-vertex lemmas.
//!
//! Each lemma makes an existential claim about every active vertex (or vertex
//! triple) at every level `1 ≤ i ≤ ecc(v)−1` of every root `v`, phrased in the
//! face-sharing graph `Ĥ_i`:
//!
//! - **L3.1a** (3-connected planar): every `u ∈ Ĥ_i` has two distinct
//!   neighbors in `A_i(v) − {u}`.
//! - **L3.1b** (4-connected planar): of any three distinct `u, w, x ∈ Ĥ_i`,
//!   at least one has a neighbor in `A_i(v) − {u, w, x}`.
//! - **L3.1c** (5-connected planar): every `u ∈ Ĥ_i` has two neighbors `w, x`
//!   sharing no common `Ĥ_i`-neighbor other than `u`.
//! - **L3.2** (quadrangulation): every active vertex shares a face with
//!   another active vertex of its level.
//! - **L3.3** (2-connected outerplanar): every active vertex shares a face
//!   *distinct from the outer face* with another active vertex of its level.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connectivity::vertex_connectivity;
use crate::exec;
use crate::graph::Graph;

use super::active::{active_sets_in, FaceSharingLevel};
use super::{classify, embed_planar, outerplane_embedding, Embedding, PlanarityResult};

/// The five checkable lemma statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LemmaId {
    #[serde(rename = "L3.1a")]
    L31a,
    #[serde(rename = "L3.1b")]
    L31b,
    #[serde(rename = "L3.1c")]
    L31c,
    #[serde(rename = "L3.2")]
    L32,
    #[serde(rename = "L3.3")]
    L33,
}

impl LemmaId {
    /// All ids in display order.
    pub const ALL: [LemmaId; 5] = [
        LemmaId::L31a,
        LemmaId::L31b,
        LemmaId::L31c,
        LemmaId::L32,
        LemmaId::L33,
    ];
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            LemmaId::L31a => "L3.1a",
            LemmaId::L31b => "L3.1b",
            LemmaId::L31c => "L3.1c",
            LemmaId::L32 => "L3.2",
            LemmaId::L33 => "L3.3",
        };
        f.write_str(text)
    }
}

impl FromStr for LemmaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "l3.1a" => Ok(LemmaId::L31a),
            "l3.1b" => Ok(LemmaId::L31b),
            "l3.1c" => Ok(LemmaId::L31c),
            "l3.2" => Ok(LemmaId::L32),
            "l3.3" => Ok(LemmaId::L33),
            other => Err(format!(
                "unknown lemma id '{other}' (expected one of L3.1a, L3.1b, L3.1c, L3.2, L3.3)"
            )),
        }
    }
}

/// Pass/fail verdict for one (root, level) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Result of checking one lemma at one root and level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma_id: LemmaId,
    pub root: usize,
    pub level: usize,
    pub verdict: Verdict,
    /// First violating vertex (or triple, for L3.1b), present exactly on fail.
    pub counterexample: Option<Vec<usize>>,
}

/// Precondition failures: the graph is not in the class the lemma presumes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("lemma {lemma} requires a {flag} graph")]
    ClassPrecondition { lemma: LemmaId, flag: &'static str },
}

/// Checks one lemma exhaustively: one report per (root, level) pair, in
/// ascending (root, level) order. Levels run over `1 ≤ i ≤ ecc(root)−1`, so
/// low-eccentricity roots contribute no reports.
///
/// # Errors
///
/// Rejects graphs outside the lemma's class, naming the failed flag.
///
/// # Examples
///
/// ```
/// use plandist::{planar::{check_lemma, LemmaId, Verdict}, Graph};
///
/// let reports = check_lemma(&Graph::cycle(4), LemmaId::L32).unwrap();
/// assert!(!reports.is_empty());
/// assert!(reports.iter().all(|r| r.verdict == Verdict::Pass));
///
/// let err = check_lemma(&Graph::cycle(4), LemmaId::L31a).unwrap_err();
/// assert!(err.to_string().contains("3-connected"));
/// ```
pub fn check_lemma(g: &Graph, lemma_id: LemmaId) -> Result<Vec<LemmaReport>, LemmaError> {
    let reject = |flag: &'static str| LemmaError::ClassPrecondition {
        lemma: lemma_id,
        flag,
    };
    if !g.is_connected() {
        return Err(reject("connected"));
    }
    let flags = classify(g);
    let kappa = || vertex_connectivity(g).kappa;
    let (emb, exclude_outer): (Embedding, bool) = match lemma_id {
        LemmaId::L31a | LemmaId::L31b | LemmaId::L31c => {
            if !flags.planar {
                return Err(reject("planar"));
            }
            let (min_kappa, flag) = match lemma_id {
                LemmaId::L31a => (3, "3-connected"),
                LemmaId::L31b => (4, "4-connected"),
                _ => (5, "5-connected"),
            };
            if kappa() < min_kappa {
                return Err(reject(flag));
            }
            match embed_planar(g) {
                PlanarityResult::Planar(emb) => (emb, false),
                PlanarityResult::NonPlanar(_) => unreachable!("planarity already checked"),
            }
        }
        LemmaId::L32 => {
            if !flags.quadrangulation {
                return Err(reject("quadrangulation"));
            }
            match embed_planar(g) {
                PlanarityResult::Planar(emb) => (emb, false),
                PlanarityResult::NonPlanar(_) => unreachable!("quadrangulations are planar"),
            }
        }
        LemmaId::L33 => {
            if !flags.outerplanar {
                return Err(reject("outerplanar"));
            }
            if kappa() < 2 {
                return Err(reject("2-connected"));
            }
            let emb = outerplane_embedding(g).expect("outerplanarity already checked");
            (emb, true)
        }
    };

    let per_root = exec::map_collect(g.vertices().collect(), |v| {
        let s = active_sets_in(g, v, &emb, exclude_outer);
        let sharing = s.face_sharing.expect("embedding was supplied");
        s.levels
            .iter()
            .zip(&sharing)
            .map(|(&level, fs)| {
                let counterexample = violation(lemma_id, fs);
                LemmaReport {
                    lemma_id,
                    root: v,
                    level,
                    verdict: if counterexample.is_none() {
                        Verdict::Pass
                    } else {
                        Verdict::Fail
                    },
                    counterexample,
                }
            })
            .collect::<Vec<_>>()
    });
    Ok(per_root.into_iter().flatten().collect())
}

/// First violation of `lemma` in one level's face-sharing graph, if any.
fn violation(lemma: LemmaId, fs: &FaceSharingLevel) -> Option<Vec<usize>> {
    let h = &fs.graph;
    let members = &fs.members;
    let k = members.len();
    match lemma {
        LemmaId::L31a => (0..k)
            .find(|&u| h.degree(u) < 2)
            .map(|u| vec![members[u]]),
        LemmaId::L31b => {
            for a in 0..k {
                for b in (a + 1)..k {
                    for c in (b + 1)..k {
                        let trio = [a, b, c];
                        let escapes = trio.iter().any(|&x| {
                            h.neighbors(x).iter().any(|y| !trio.contains(y))
                        });
                        if !escapes {
                            return Some(vec![members[a], members[b], members[c]]);
                        }
                    }
                }
            }
            None
        }
        LemmaId::L31c => (0..k)
            .find(|&u| !has_nonoverlapping_neighbor_pair(h, u))
            .map(|u| vec![members[u]]),
        LemmaId::L32 | LemmaId::L33 => (0..k)
            .find(|&u| h.degree(u) == 0)
            .map(|u| vec![members[u]]),
    }
}

/// True when `u` has two `Ĥ`-neighbors `w, x` whose only possible common
/// `Ĥ`-neighbor is `u` itself.
fn has_nonoverlapping_neighbor_pair(h: &Graph, u: usize) -> bool {
    let nbrs = h.neighbors(u);
    for (i, &w) in nbrs.iter().enumerate() {
        for &x in &nbrs[(i + 1)..] {
            let overlap = h
                .neighbors(w)
                .iter()
                .any(|&y| y != u && h.has_edge(y, x));
            if !overlap {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> Graph {
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in (u + 1)..6 {
                if v != u + 3 {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(6, &edges).unwrap()
    }

    fn icosahedron() -> Graph {
        // Standard adjacency of the icosahedron on vertices 0..12.
        let edges = [
            (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
            (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
            (1, 6), (1, 7), (2, 7), (2, 8), (3, 8),
            (3, 9), (4, 9), (4, 10), (5, 10), (5, 6),
            (6, 7), (7, 8), (8, 9), (9, 10), (10, 6),
            (6, 11), (7, 11), (8, 11), (9, 11), (10, 11),
        ];
        Graph::from_edges(12, &edges).unwrap()
    }

    #[test]
    fn lemma_ids_round_trip_through_display() {
        for id in LemmaId::ALL {
            assert_eq!(id.to_string().parse::<LemmaId>().unwrap(), id);
        }
        assert!("L9".parse::<LemmaId>().is_err());
    }

    #[test]
    fn l32_passes_on_c4() {
        let reports = check_lemma(&Graph::cycle(4), LemmaId::L32).unwrap();
        // Every root has ecc 2, so exactly one level each.
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| r.verdict == Verdict::Pass));
        assert!(reports.iter().all(|r| r.counterexample.is_none()));
    }

    #[test]
    fn l31a_and_l31b_pass_on_the_octahedron() {
        let g = octahedron();
        for id in [LemmaId::L31a, LemmaId::L31b] {
            let reports = check_lemma(&g, id).unwrap();
            assert!(!reports.is_empty());
            assert!(reports.iter().all(|r| r.verdict == Verdict::Pass), "{id}");
        }
    }

    #[test]
    fn l31_all_parts_pass_on_the_icosahedron() {
        let g = icosahedron();
        for id in [LemmaId::L31a, LemmaId::L31b, LemmaId::L31c] {
            let reports = check_lemma(&g, id).unwrap();
            assert!(!reports.is_empty(), "{id}");
            assert!(reports.iter().all(|r| r.verdict == Verdict::Pass), "{id}");
        }
    }

    #[test]
    fn l33_passes_on_two_connected_outerplanar_graphs() {
        let graphs = [
            Graph::cycle(8),
            // Triangulated hexagon (fan from vertex 0).
            Graph::from_edges(
                6,
                &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (0, 3), (0, 4)],
            )
            .unwrap(),
        ];
        for g in &graphs {
            let reports = check_lemma(g, LemmaId::L33).unwrap();
            assert!(!reports.is_empty());
            assert!(reports.iter().all(|r| r.verdict == Verdict::Pass));
        }
    }

    #[test]
    fn reports_are_ordered_by_root_then_level() {
        let reports = check_lemma(&Graph::cycle(9), LemmaId::L33).unwrap();
        let keys: Vec<(usize, usize)> = reports.iter().map(|r| (r.root, r.level)).collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
        // C9: every root has ecc 4, levels 1..=3.
        assert_eq!(reports.len(), 9 * 3);
    }

    #[test]
    fn class_preconditions_are_enforced_by_name() {
        let cases = [
            (Graph::path(4), LemmaId::L31a, "3-connected"),
            (octahedron(), LemmaId::L31c, "5-connected"),
            (Graph::complete(4), LemmaId::L32, "quadrangulation"),
            (Graph::complete(4), LemmaId::L33, "outerplanar"),
            (Graph::path(4), LemmaId::L33, "2-connected"),
            (Graph::complete_bipartite(3, 3), LemmaId::L31a, "planar"),
        ];
        for (g, id, flag) in cases {
            let err = check_lemma(&g, id).unwrap_err();
            assert_eq!(
                err,
                LemmaError::ClassPrecondition { lemma: id, flag },
                "{id} on the wrong class"
            );
        }
    }

    #[test]
    fn violations_name_recheckable_counterexamples() {
        // The lemmas are theorems on their classes, so public reports always
        // pass; the fail path is exercised on structures outside the classes.
        let level = |members: Vec<usize>, edges: &[(usize, usize)]| FaceSharingLevel {
            graph: Graph::from_edges(members.len(), edges).unwrap(),
            members,
        };

        // Degree-1 vertices violate the two-neighbor claim; first one is named.
        let path3 = level(vec![4, 7, 9], &[(0, 1), (1, 2)]);
        assert_eq!(violation(LemmaId::L31a, &path3), Some(vec![4]));
        assert_eq!(violation(LemmaId::L32, &path3), None);

        // A triangle is a trio with no neighbor outside itself.
        let triangle = level(vec![2, 5, 8], &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(violation(LemmaId::L31b, &triangle), Some(vec![2, 5, 8]));
        assert_eq!(violation(LemmaId::L31a, &triangle), None);

        // In K4 every neighbor pair of a vertex shares the fourth vertex.
        let k4 = level(
            vec![1, 3, 6, 7],
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        );
        assert_eq!(violation(LemmaId::L31c, &k4), Some(vec![1]));
        assert_eq!(violation(LemmaId::L31b, &k4), None);

        // An isolated active vertex shares no face with anyone.
        let isolated = level(vec![5], &[]);
        assert_eq!(violation(LemmaId::L32, &isolated), Some(vec![5]));
        assert_eq!(violation(LemmaId::L33, &isolated), Some(vec![5]));
    }
}
