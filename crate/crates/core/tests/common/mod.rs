#![allow(dead_code)]

use sieve_sparing::iso::are_isomorphic;
use sieve_sparing::Graph;

/// Every labelled graph on `n` vertices, as edge subsets of the complete
/// graph in lexicographic pair order.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u32..(1 << pairs.len()))
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e);
            Graph::from_edges(n, edges).unwrap()
        })
        .collect()
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices.
pub fn connected_atlas(n: usize) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for g in all_graphs(n).into_iter().filter(Graph::is_connected) {
        if !reps.iter().any(|r| are_isomorphic(r, &g).unwrap()) {
            reps.push(g);
        }
    }
    reps
}

/// Maximum over all vertex subsets that are independent of the sum of
/// degrees. Plain subset scan, no pruning.
pub fn brute_force_max_degree_weight(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 22);
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let independent = g
            .edges()
            .iter()
            .all(|&(u, v)| mask & (1 << u) == 0 || mask & (1 << v) == 0);
        if independent {
            let w = (0..n)
                .filter(|&v| mask & (1 << v) != 0)
                .map(|v| g.degree(v))
                .sum();
            best = usize::max(best, w);
        }
    }
    best
}

pub fn brute_force_phi(g: &Graph) -> usize {
    g.edge_count() - brute_force_max_degree_weight(g)
}

/// All simple paths with exactly `len` edges from `u` to `v`, by DFS.
pub fn simple_paths(g: &Graph, u: usize, v: usize, len: usize) -> usize {
    fn go(g: &Graph, at: usize, target: usize, left: usize, seen: &mut Vec<bool>) -> usize {
        if left == 0 {
            return usize::from(at == target);
        }
        let mut total = 0;
        for w in g.neighbors(at) {
            if !seen[w] {
                seen[w] = true;
                total += go(g, w, target, left - 1, seen);
                seen[w] = false;
            }
        }
        total
    }
    let mut seen = vec![false; g.n()];
    seen[u] = true;
    go(g, u, v, len, &mut seen)
}

/// Whether the graph has a cycle of odd length, by searching closed walks
/// over simple paths.
pub fn has_odd_cycle(g: &Graph) -> bool {
    fn go(g: &Graph, start: usize, at: usize, len: usize, seen: &mut Vec<bool>) -> bool {
        for w in g.neighbors(at) {
            if w == start && len >= 3 && len % 2 == 1 {
                return true;
            }
            if !seen[w] && w > start {
                seen[w] = true;
                if go(g, start, w, len + 1, seen) {
                    return true;
                }
                seen[w] = false;
            }
        }
        false
    }
    (0..g.n()).any(|s| {
        let mut seen = vec![false; g.n()];
        seen[s] = true;
        go(g, s, s, 1, &mut seen)
    })
}
