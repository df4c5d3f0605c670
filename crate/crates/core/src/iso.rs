//! Exact isomorphism test for small graphs by pruned permutation search.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ISOMORPHISM_CAP: usize = 10;

/// Exact isomorphism check, refusing graphs above [`ISOMORPHISM_CAP`].
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    are_isomorphic_capped(g1, g2, ISOMORPHISM_CAP)
}

pub fn are_isomorphic_capped(g1: &Graph, g2: &Graph, cap: usize) -> Result<bool> {
    let largest = g1.n().max(g2.n());
    if largest > cap {
        return Err(Error::SizeCap {
            operation: "are_isomorphic",
            cap,
            actual: largest,
        });
    }
    Ok(find_isomorphism(g1, g2).is_some())
}

/// A vertex bijection `map` with `uv ∈ E(g1) ⇔ map[u]map[v] ∈ E(g2)`.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let sig1 = signatures(g1);
    let sig2 = signatures(g2);
    let mut sorted1 = sig1.clone();
    let mut sorted2 = sig2.clone();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return None;
    }

    // Visit rare signatures first, preferring vertices adjacent to ones
    // already placed so adjacency checks prune early.
    let n = g1.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = order.iter().filter(|&&u| g1.has_edge(u, v)).count();
                let rarity = n - sorted1.iter().filter(|s| **s == sig1[v]).count();
                (linked, rarity, g1.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g1, g2, &sig1, &sig2, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Degree plus sorted neighbour degrees.
fn signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &Graph,
    g2: &Graph,
    sig1: &[(usize, Vec<usize>)],
    sig2: &[(usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..g2.n() {
        if used[w] || sig1[v] != sig2[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g1.has_edge(u, v) == g2.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g1, g2, sig1, sig2, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}
