//! Kuratowski subdivision extraction.
//!
//! A non-planar graph stays non-planar while redundant edges are deleted; an
//! edge-minimal non-planar graph is precisely a subdivision of K5 or K3,3.
//! One greedy pass suffices: once an edge is declined (its removal would make
//! the graph planar), removing further edges never makes it removable, so the
//! surviving set is minimal.

use crate::graph::Graph;

use super::{demoucron, KuratowskiKind, KuratowskiWitness};

/// Extracts a K5/K3,3 subdivision certifying non-planarity.
pub(super) fn witness(g: &Graph) -> KuratowskiWitness {
    debug_assert!(!demoucron::is_planar(g));
    let n = g.n();
    let mut edges = g.edges();
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        let h = Graph::from_edges(n, &trial).expect("edge subset of a valid graph");
        if demoucron::is_planar(&h) {
            i += 1;
        } else {
            edges = trial;
        }
    }

    let sub = Graph::from_edges(n, &edges).expect("edge subset of a valid graph");
    let branch_vertices: Vec<usize> = (0..n).filter(|&v| sub.degree(v) >= 3).collect();

    // Walk the degree-2 chains between branch vertices; each path is seen once
    // from either end, so keep the orientation with the smaller start.
    let mut paths = Vec::new();
    for &b in &branch_vertices {
        for &w in sub.neighbors(b) {
            let mut path = vec![b, w];
            let (mut prev, mut cur) = (b, w);
            while sub.degree(cur) == 2 {
                let next = sub
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&x| x != prev)
                    .expect("degree-2 vertex has a second neighbor");
                path.push(next);
                (prev, cur) = (cur, next);
            }
            if path[0] < path[path.len() - 1] {
                paths.push(path);
            }
        }
    }
    paths.sort_by_key(|p| (p[0], p[p.len() - 1]));

    let kind = classify_quotient(&branch_vertices, &paths);
    KuratowskiWitness {
        kind,
        branch_vertices,
        paths,
    }
}

/// Suppresses the chain interiors and checks the branch graph is K5 or K3,3.
fn classify_quotient(branch: &[usize], paths: &[Vec<usize>]) -> KuratowskiKind {
    let index_of = |v: usize| branch.iter().position(|&b| b == v).expect("branch vertex");
    let k = branch.len();
    let mut quotient = vec![vec![false; k]; k];
    for p in paths {
        let a = index_of(p[0]);
        let b = index_of(p[p.len() - 1]);
        assert_ne!(a, b, "subdivision paths join distinct branch vertices");
        assert!(!quotient[a][b], "duplicate branch pair");
        quotient[a][b] = true;
        quotient[b][a] = true;
    }
    match (k, paths.len()) {
        (5, 10) => {
            assert!(
                (0..5).all(|a| (0..5).all(|b| a == b || quotient[a][b])),
                "five branch vertices must be mutually joined"
            );
            KuratowskiKind::K5
        }
        (6, 9) => {
            let side_a: Vec<usize> = (0..6).filter(|&v| v == 0 || !quotient[0][v]).collect();
            let side_b: Vec<usize> = (0..6).filter(|&v| v != 0 && quotient[0][v]).collect();
            assert_eq!(side_a.len(), 3);
            assert_eq!(side_b.len(), 3);
            for &a in &side_a {
                for &b in &side_b {
                    assert!(quotient[a][b], "cross pair missing in K3,3 quotient");
                }
            }
            for side in [&side_a, &side_b] {
                for i in 0..3 {
                    for j in (i + 1)..3 {
                        assert!(!quotient[side[i]][side[j]], "intra-side edge in K3,3 quotient");
                    }
                }
            }
            KuratowskiKind::K33
        }
        other => panic!("edge-minimal non-planar graph with unexpected shape {other:?}"),
    }
}
