//! Immutable simple graphs and the exact distance invariants built on them.
//!
//! A [`Graph`] is a simple undirected graph on vertices `0..n` with sorted
//! adjacency lists, frozen at construction. All distance work is breadth-first
//! search; the derived [`ParamSummary`] carries proximity and remoteness as exact
//! rationals so downstream equality verdicts are never approximate.

use std::collections::VecDeque;

use thiserror::Error;

use crate::rat::Rat;

/// Sentinel distance for unreachable pairs in disconnected graphs.
const UNREACHABLE: usize = usize::MAX;

/// Errors from graph construction and invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// A loop edge `(v, v)` was supplied.
    #[error("loop edge ({0}, {0}) not allowed in a simple graph")]
    LoopEdge(usize),
    /// An endpoint is not in `0..n`.
    #[error("vertex {index} out of range for order {n}")]
    VertexOutOfRange { index: usize, n: usize },
    /// The operation requires a connected graph.
    #[error("graph is disconnected")]
    Disconnected,
    /// The operation requires order at least 2.
    #[error("order {0} is too small; need n >= 2")]
    OrderTooSmall(usize),
}

/// Immutable simple undirected graph with positional vertex identity.
///
/// # Examples
///
/// ```
/// use plandist::Graph;
///
/// let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
/// assert_eq!(p3.edge_count(), 2);
/// assert_eq!(p3.neighbors(1), &[0, 2]);
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
    had_duplicates: bool,
}

impl Graph {
    /// Builds a graph from an edge list, collapsing duplicates.
    ///
    /// Duplicate edges are legal input (several generators re-list edges); they
    /// are collapsed and remembered via [`Graph::had_duplicate_edges`].
    ///
    /// # Errors
    ///
    /// Rejects loop edges and endpoints outside `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut had_duplicates = false;
        let mut m = 0;
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { index: x, n });
                }
            }
            if adj[u].contains(&v) {
                had_duplicates = true;
                continue;
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            adj,
            m,
            had_duplicates,
        })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// True when construction collapsed at least one duplicate edge.
    pub fn had_duplicate_edges(&self) -> bool {
        self.had_duplicates
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Minimum degree δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Adjacency test by binary search on the sorted neighbor list.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Iterator over vertices `0..n`.
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Copy of this graph with one extra edge.
    ///
    /// # Panics
    ///
    /// Panics on loops, out-of-range endpoints, or an already-present edge; it
    /// is a test-harness helper for maximality probes, not general mutation.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u != v && u < self.n && v < self.n && !self.has_edge(u, v));
        let mut adj = self.adj.clone();
        adj[u].push(v);
        adj[v].push(u);
        adj[u].sort_unstable();
        adj[v].sort_unstable();
        Graph {
            n: self.n,
            adj,
            m: self.m + 1,
            had_duplicates: self.had_duplicates,
        }
    }

    /// Copy of this graph with one edge removed.
    ///
    /// # Panics
    ///
    /// Panics if the edge is absent.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        assert!(self.has_edge(u, v));
        let mut adj = self.adj.clone();
        adj[u].retain(|&x| x != v);
        adj[v].retain(|&x| x != u);
        Graph {
            n: self.n,
            adj,
            m: self.m - 1,
            had_duplicates: self.had_duplicates,
        }
    }

    /// Induced subgraph on `keep` (deduplicated, sorted), with vertices
    /// renumbered `0..keep.len()` in sorted order. Returns the subgraph and the
    /// map from new index to original vertex.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut map: Vec<usize> = keep.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut inverse = vec![UNREACHABLE; self.n];
        for (new, &old) in map.iter().enumerate() {
            inverse[old] = new;
        }
        let mut edges = Vec::new();
        for (new_u, &old_u) in map.iter().enumerate() {
            for &old_v in &self.adj[old_u] {
                if old_v > old_u && inverse[old_v] != UNREACHABLE {
                    edges.push((new_u, inverse[old_v]));
                }
            }
        }
        let g = Graph::from_edges(map.len(), &edges).expect("induced edges are valid");
        (g, map)
    }

    /// Relabels vertices by `perm`, where `perm[old] = new`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edges(self.n, &edges).expect("permutation preserves validity")
    }

    // ---- standard graphs used across tests and the CLI ------------------

    /// Path on `n` vertices, `0 - 1 - … - (n−1)`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Complete bipartite graph `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..(a + b) {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges).unwrap()
    }

    // ---- breadth-first distance machinery --------------------------------

    /// Distances from `src` to every vertex, `UNREACHABLE` where disconnected.
    fn bfs(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// True when every vertex is reachable from vertex 0 (vacuously for n ≤ 1).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// BFS 2-coloring; `true` when no edge joins same-colored vertices.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![2u8; self.n];
        for start in 0..self.n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if color[w] == 2 {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All-pairs hop distances by `n` breadth-first searches.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let rows: Vec<Vec<usize>> = (0..self.n).map(|v| self.bfs(v)).collect();
        let connected = self.n <= 1 || rows[0].iter().all(|&d| d != UNREACHABLE);
        DistanceMatrix {
            n: self.n,
            rows,
            connected,
        }
    }

    /// Status (total distance) `σ(v) = Σ_w d(v, w)`.
    ///
    /// # Errors
    ///
    /// Rejects out-of-range `v` and disconnected graphs.
    pub fn status(&self, v: usize) -> Result<u64, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { index: v, n: self.n });
        }
        let dist = self.bfs(v);
        if dist.iter().any(|&d| d == UNREACHABLE) {
            return Err(GraphError::Disconnected);
        }
        Ok(dist.iter().map(|&d| d as u64).sum())
    }

    /// Restricted status `σ(v | X) = Σ_{x ∈ X} d(v, x)`.
    ///
    /// # Errors
    ///
    /// Rejects out-of-range vertices (in `v` or `X`) and disconnected graphs.
    pub fn status_restricted(&self, v: usize, xs: &[usize]) -> Result<u64, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { index: v, n: self.n });
        }
        for &x in xs {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { index: x, n: self.n });
            }
        }
        let dist = self.bfs(v);
        if dist.iter().any(|&d| d == UNREACHABLE) {
            return Err(GraphError::Disconnected);
        }
        Ok(xs.iter().map(|&x| dist[x] as u64).sum())
    }

    /// Distance levels `N_0(v), N_1(v), …, N_ecc(v)` from `v`.
    ///
    /// # Errors
    ///
    /// Rejects out-of-range `v` and disconnected graphs.
    pub fn level_sets(&self, v: usize) -> Result<LevelStructure, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { index: v, n: self.n });
        }
        let dist = self.bfs(v);
        if dist.iter().any(|&d| d == UNREACHABLE) {
            return Err(GraphError::Disconnected);
        }
        let ecc = dist.iter().copied().max().unwrap_or(0);
        let mut levels = vec![Vec::new(); ecc + 1];
        for (w, &d) in dist.iter().enumerate() {
            levels[d].push(w);
        }
        Ok(LevelStructure { root: v, levels })
    }

    /// Full parameter summary: σ, eccentricities, π, ρ, radius, diameter and
    /// the vertex sets attaining π and ρ.
    ///
    /// # Errors
    ///
    /// Rejects `n < 2` and disconnected graphs.
    ///
    /// # Examples
    ///
    /// ```
    /// use plandist::{rat, Graph};
    ///
    /// let p5 = Graph::path(5);
    /// let s = p5.param_summary().unwrap();
    /// assert_eq!(s.proximity, rat(3, 2));
    /// assert_eq!(s.remoteness, rat(5, 2));
    /// assert_eq!((s.radius, s.diameter), (2, 4));
    /// ```
    pub fn param_summary(&self) -> Result<ParamSummary, GraphError> {
        if self.n < 2 {
            return Err(GraphError::OrderTooSmall(self.n));
        }
        let dm = self.distance_matrix();
        if !dm.connected {
            return Err(GraphError::Disconnected);
        }
        let status: Vec<u64> = dm
            .rows
            .iter()
            .map(|row| row.iter().map(|&d| d as u64).sum())
            .collect();
        let ecc: Vec<usize> = dm
            .rows
            .iter()
            .map(|row| row.iter().copied().max().unwrap())
            .collect();
        let sigma_min = *status.iter().min().unwrap();
        let sigma_max = *status.iter().max().unwrap();
        let denom = (self.n - 1) as i64;
        let summary = ParamSummary {
            n: self.n,
            proximity: Rat::new(sigma_min as i64, denom),
            remoteness: Rat::new(sigma_max as i64, denom),
            radius: *ecc.iter().min().unwrap(),
            diameter: *ecc.iter().max().unwrap(),
            median_vertices: (0..self.n).filter(|&v| status[v] == sigma_min).collect(),
            remote_vertices: (0..self.n).filter(|&v| status[v] == sigma_max).collect(),
            status,
            ecc,
        };
        debug_assert!(summary.proximity <= summary.remoteness);
        debug_assert!(summary.radius <= summary.diameter);
        debug_assert!(summary.diameter <= 2 * summary.radius);
        Ok(summary)
    }
}

/// All-pairs hop distances; disconnected inputs are a detectable state rather
/// than an error here, and downstream invariant operations reject them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    rows: Vec<Vec<usize>>,
    connected: bool,
}

impl DistanceMatrix {
    /// Order of the underlying graph.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Hop distance, or `None` when `v` is unreachable from `u`.
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        let d = self.rows[u][v];
        (d != UNREACHABLE).then_some(d)
    }

    /// True when all pairs are reachable.
    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Eccentricity of `v`; `None` on disconnected matrices.
    pub fn eccentricity(&self, v: usize) -> Option<usize> {
        self.connected
            .then(|| self.rows[v].iter().copied().max().unwrap_or(0))
    }
}

/// Exact distance parameters of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSummary {
    /// Order of the graph.
    pub n: usize,
    /// Per-vertex status σ(v).
    pub status: Vec<u64>,
    /// Per-vertex eccentricity.
    pub ecc: Vec<usize>,
    /// Proximity π = min_v σ(v)/(n−1), in lowest terms.
    pub proximity: Rat,
    /// Remoteness ρ = max_v σ(v)/(n−1), in lowest terms.
    pub remoteness: Rat,
    /// Minimum eccentricity.
    pub radius: usize,
    /// Maximum eccentricity.
    pub diameter: usize,
    /// Vertices attaining π (median vertices), ascending.
    pub median_vertices: Vec<usize>,
    /// Vertices attaining ρ, ascending.
    pub remote_vertices: Vec<usize>,
}

impl ParamSummary {
    /// Average distance σ̄(v) = σ(v)/(n−1) of a single vertex.
    pub fn mean_status(&self, v: usize) -> Rat {
        Rat::new(self.status[v] as i64, (self.n - 1) as i64)
    }
}

/// Partition of the vertex set by distance from a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelStructure {
    /// BFS root.
    pub root: usize,
    /// `levels[i]` is N_i(root), ascending within each level; `levels[0] == [root]`.
    pub levels: Vec<Vec<usize>>,
}

impl LevelStructure {
    /// Eccentricity of the root (index of the last non-empty level).
    pub fn ecc(&self) -> usize {
        self.levels.len() - 1
    }

    /// Level sizes n_i(root).
    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Total distance recovered from the levels: Σ_i i·n_i(root).
    pub fn level_sum(&self) -> u64 {
        self.levels
            .iter()
            .enumerate()
            .map(|(i, level)| (i * level.len()) as u64)
            .sum()
    }
}
