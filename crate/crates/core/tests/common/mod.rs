//! Brute-force oracles shared by the integration suites. Everything here is
//! deliberately naive — independent of the library's algorithms — so that
//! agreement is evidence, not circularity.

// Each integration binary uses a subset of these helpers.
#![allow(dead_code)]

use plandist::Graph;

/// Runs `f` on every k-subset of `0..n`, ascending within each subset.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for v in start..n {
            acc.push(v);
            rec(v + 1, n, k, acc, f);
            acc.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), &mut f);
}

/// Whether deleting `cut` leaves the remaining vertices disconnected.
pub fn disconnects(g: &Graph, cut: &[usize]) -> bool {
    let n = g.n();
    let removed = |v: usize| cut.contains(&v);
    let Some(start) = (0..n).find(|&v| !removed(v)) else {
        return false;
    };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !removed(w) && !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached < n - cut.len()
}

/// Brute-force vertex connectivity: the smallest vertex set whose removal
/// disconnects the graph; `n − 1` for complete graphs by convention.
pub fn kappa_by_brute_force(g: &Graph) -> usize {
    let n = g.n();
    if g.edge_count() == n * (n - 1) / 2 {
        return n - 1;
    }
    for size in 0..n - 1 {
        let mut found = false;
        for_each_subset(n, size, |cut| {
            if !found && disconnects(g, cut) {
                found = true;
            }
        });
        if found {
            return size;
        }
    }
    n - 1
}

/// Brute-force graph isomorphism by backtracking over degree-compatible
/// vertex assignments with incremental adjacency consistency.
pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut deg_a: Vec<usize> = (0..n).map(|v| a.neighbors(v).len()).collect();
    let mut deg_b: Vec<usize> = (0..n).map(|v| b.neighbors(v).len()).collect();
    let (da, db) = (deg_a.clone(), deg_b.clone());
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }

    fn extend(
        a: &Graph,
        b: &Graph,
        da: &[usize],
        db: &[usize],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let v = image.len();
        if v == a.n() {
            return true;
        }
        for w in 0..b.n() {
            if used[w] || da[v] != db[w] {
                continue;
            }
            let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(image[u], w));
            if !consistent {
                continue;
            }
            image.push(w);
            used[w] = true;
            if extend(a, b, da, db, image, used) {
                return true;
            }
            image.pop();
            used[w] = false;
        }
        false
    }

    extend(a, b, &da, &db, &mut Vec::new(), &mut vec![false; n])
}
