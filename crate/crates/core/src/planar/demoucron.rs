//! Incremental face-placement planarity (Demoucron–Malgrange–Pertuiset).
//!
//! A connected graph is embedded block by block: bridges are trivial, and each
//! 2-connected block is grown from a seed cycle by repeatedly routing a path of
//! some unembedded fragment through a face whose boundary contains all of the
//! fragment's attachment vertices. If a fragment ever has no such *admissible*
//! face the block — hence the graph — is non-planar; otherwise any admissible
//! choice extends to a full embedding (the classical correctness guarantee of
//! this method), so the greedy needs no backtracking.
//!
//! Faces are maintained as consistently oriented closed walks (every directed
//! arc used exactly once across the face list), which makes the rotation
//! system recoverable at the end by reading corner successors off the walks.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::graph::Graph;

/// Rotation system (cyclic neighbor order per vertex) for a connected planar
/// graph, or `None` when some block is non-planar.
pub(super) fn embed_connected(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for block_edges in blocks(g) {
        if block_edges.len() == 1 {
            let (u, v) = block_edges[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        // Renumber the block's vertex support, embed, and splice the block's
        // rotations into the global ones. Appending whole blocks at each cut
        // vertex nests every later block inside a face corner of the earlier
        // arrangement, so the merged rotation system stays planar.
        let mut support: Vec<usize> = block_edges
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .collect();
        support.sort_unstable();
        support.dedup();
        let index: HashMap<usize, usize> =
            support.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let local_edges: Vec<(usize, usize)> = block_edges
            .iter()
            .map(|&(u, v)| (index[&u], index[&v]))
            .collect();
        let block = Graph::from_edges(support.len(), &local_edges).expect("block edges are valid");
        let local_rotation = dmp_embed(&block)?;
        for (i, neighbors) in local_rotation.into_iter().enumerate() {
            rotation[support[i]].extend(neighbors.into_iter().map(|j| support[j]));
        }
    }
    Some(rotation)
}

/// Planarity of a possibly disconnected graph: every component embeds.
pub(super) fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        let (sub, _) = g.induced(&comp);
        if embed_connected(&sub).is_none() {
            return false;
        }
    }
    true
}

/// Biconnected components as edge lists, by iterative DFS with an edge stack
/// (Tarjan). Blocks come out in a deterministic order for a given graph.
pub(super) fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    let mut timer = 0usize;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // Frame: (vertex, index into its neighbor list).
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if *i < g.degree(u) {
                let w = g.neighbors(u)[*i];
                *i += 1;
                if disc[w] == usize::MAX {
                    parent[w] = u;
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    edge_stack.push((u, w));
                    stack.push((w, 0));
                } else if w != parent[u] && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        // p is a cut vertex (or the root); pop one block.
                        let mut block = Vec::new();
                        while let Some(&(a, b)) = edge_stack.last() {
                            if disc[a] >= disc[u] || (a, b) == (p, u) {
                                block.push((a, b));
                                edge_stack.pop();
                                if (a, b) == (p, u) {
                                    break;
                                }
                            } else {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// Demoucron embedding of a 2-connected graph on ≥ 3 vertices; returns the
/// rotation system or `None` when non-planar.
fn dmp_embed(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    debug_assert!(n >= 3);
    let seed = find_cycle(g);
    let mut faces: Vec<Vec<usize>> = vec![seed.clone(), seed.iter().rev().copied().collect()];
    let mut in_h = vec![false; n];
    let mut h_edges: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..seed.len() {
        in_h[seed[i]] = true;
        h_edges.insert(norm(seed[i], seed[(i + 1) % seed.len()]));
    }

    while h_edges.len() < g.edge_count() {
        let fragments = fragments(g, &in_h, &h_edges);
        debug_assert!(!fragments.is_empty());

        // For every fragment, the faces whose boundary holds all attachments.
        let mut best: Option<(usize, usize, usize)> = None; // (#admissible, fragment, face)
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| faces[f].contains(a)))
                .collect();
            if admissible.is_empty() {
                return None;
            }
            if best.is_none_or(|(count, _, _)| admissible.len() < count) {
                best = Some((admissible.len(), fi, admissible[0]));
            }
        }
        let (_, fi, face_idx) = best.unwrap();
        let path = fragment_path(g, &fragments[fi], &in_h);

        // Split the chosen face along the path, keeping arc orientations.
        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], path[path.len() - 1]);
        let i = face.iter().position(|&x| x == a).unwrap();
        let j = face.iter().position(|&x| x == b).unwrap();
        let len = face.len();
        let mut one: Vec<usize> = Vec::new(); // a → … → b along the face, then path back
        let mut k = i;
        while k != j {
            one.push(face[k]);
            k = (k + 1) % len;
        }
        one.push(face[j]);
        one.extend(path[1..path.len() - 1].iter().rev());
        let mut two: Vec<usize> = Vec::new(); // b → … → a along the face, then path forward
        let mut k = j;
        while k != i {
            two.push(face[k]);
            k = (k + 1) % len;
        }
        two.push(face[i]);
        two.extend(path[1..path.len() - 1].iter());
        faces.push(one);
        faces.push(two);

        for w in &path {
            in_h[*w] = true;
        }
        for pair in path.windows(2) {
            h_edges.insert(norm(pair[0], pair[1]));
        }
    }
    Some(rotation_from_faces(g, &faces))
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// A fragment of `G` relative to the embedded subgraph `H`: either a chord
/// between two embedded vertices, or a component of `G − V(H)` together with
/// its attachment vertices in `H`.
struct Fragment {
    /// Sorted embedded vertices the fragment touches (≥ 2 in a 2-connected graph).
    attachments: Vec<usize>,
    /// Component vertices (empty for a chord).
    interior: Vec<usize>,
    /// The chord, when the fragment is a single embedded-to-embedded edge.
    chord: Option<(usize, usize)>,
}

fn fragments(g: &Graph, in_h: &[bool], h_edges: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let n = g.n();
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if in_h[u] && in_h[v] && !h_edges.contains(&norm(u, v)) {
            out.push(Fragment {
                attachments: vec![u, v],
                interior: Vec::new(),
                chord: Some((u, v)),
            });
        }
    }
    let mut seen = vec![false; n];
    for start in 0..n {
        if in_h[start] || seen[start] {
            continue;
        }
        let mut interior = vec![start];
        let mut attachments = HashSet::new();
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if in_h[w] {
                    attachments.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    interior.push(w);
                    queue.push_back(w);
                }
            }
        }
        let mut attachments: Vec<usize> = attachments.into_iter().collect();
        attachments.sort_unstable();
        interior.sort_unstable();
        debug_assert!(attachments.len() >= 2, "2-connected blocks attach twice");
        out.push(Fragment {
            attachments,
            interior,
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices; the
/// interior (if any) lies wholly inside the fragment's component.
fn fragment_path(g: &Graph, frag: &Fragment, in_h: &[bool]) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let inside = |w: usize| !in_h[w] && frag.interior.binary_search(&w).is_ok();
    let a = frag.attachments[0];
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &w in g.neighbors(a) {
        if inside(w) && !parent.contains_key(&w) {
            parent.insert(w, a);
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if inside(w) {
                if !parent.contains_key(&w) {
                    parent.insert(w, u);
                    queue.push_back(w);
                }
            } else if w != a && in_h[w] {
                // Reached another attachment; rebuild a → … → w.
                let mut path = vec![w, u];
                let mut cur = u;
                while cur != a {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.reverse();
                return path;
            }
        }
    }
    unreachable!("fragment with ≥ 2 attachments always yields a path");
}

/// Seed cycle of a 2-connected graph from the first DFS back edge.
fn find_cycle(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n]; // 0 unvisited, 1 on stack, 2 done
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    state[0] = 1;
    while let Some(&mut (u, ref mut i)) = stack.last_mut() {
        if *i < g.degree(u) {
            let w = g.neighbors(u)[*i];
            *i += 1;
            if state[w] == 0 {
                parent[w] = u;
                state[w] = 1;
                stack.push((w, 0));
            } else if state[w] == 1 && w != parent[u] {
                // Back edge u → w closes a cycle along parent pointers.
                let mut cycle = vec![u];
                let mut cur = u;
                while cur != w {
                    cur = parent[cur];
                    cycle.push(cur);
                }
                cycle.reverse();
                return cycle;
            }
        } else {
            state[u] = 2;
            stack.pop();
        }
    }
    unreachable!("2-connected graphs contain a cycle");
}

/// Rebuilds the rotation system from consistently oriented face walks: the
/// corner `x → v → y` says that `y` follows `x` in the cyclic order at `v`.
fn rotation_from_faces(g: &Graph, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut successor: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for face in faces {
        let len = face.len();
        for idx in 0..len {
            let x = face[idx];
            let v = face[(idx + 1) % len];
            let y = face[(idx + 2) % len];
            let prev = successor[v].insert(x, y);
            debug_assert!(prev.is_none(), "each directed arc lies on one face");
        }
    }
    (0..n)
        .map(|v| {
            let deg = g.degree(v);
            let mut order = Vec::with_capacity(deg);
            if deg > 0 {
                let mut cur = g.neighbors(v)[0];
                for _ in 0..deg {
                    order.push(cur);
                    cur = successor[v][&cur];
                }
                debug_assert_eq!(order.len(), deg);
                debug_assert_eq!(cur, order[0], "corner successors close one cycle");
            }
            order
        })
        .collect()
}
