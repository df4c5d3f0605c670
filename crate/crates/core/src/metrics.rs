//! Hop distances, bipartiteness and longest paths.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Upper bound on vertex count for [`longest_path_length`].
pub const LONGEST_PATH_CAP: usize = 20;

/// All-pairs hop distances. Unreachable pairs hold [`DistanceMatrix::UNREACHABLE`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw entry; [`Self::UNREACHABLE`] across components.
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        match self.raw(u, v) {
            Self::UNREACHABLE => None,
            d => Some(d as usize),
        }
    }

    /// Pairs `u < v` at distance exactly `d`, in lexicographic order.
    pub fn pairs_at(&self, d: usize) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.get(u, v) == Some(d))
            .collect()
    }

    /// Largest finite distance (the diameter when the graph is connected).
    pub fn eccentricity_max(&self) -> usize {
        self.dist
            .iter()
            .filter(|&&d| d != Self::UNREACHABLE)
            .max()
            .copied()
            .unwrap_or(0) as usize
    }
}

/// Single-source BFS distances.
pub fn bfs(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![DistanceMatrix::UNREACHABLE; g.n()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if dist[w] == DistanceMatrix::UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut dist = Vec::with_capacity(n * n);
    for s in 0..n {
        dist.extend(bfs(g, s));
    }
    DistanceMatrix { n, dist }
}

/// Largest distance between two vertices in the same component.
pub fn diameter(g: &Graph) -> usize {
    distances(g).eccentricity_max()
}

/// A proper 2-colouring if one exists. Each component's smallest vertex
/// gets colour 0.
pub fn two_coloring(g: &Graph) -> Option<Vec<u8>> {
    let mut color = vec![u8::MAX; g.n()];
    for s in 0..g.n() {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

pub fn is_bipartite(g: &Graph) -> bool {
    two_coloring(g).is_some()
}

/// Number of edges on a longest simple path.
///
/// Exact, via a reachability table over vertex subsets: `ends[mask]` holds
/// the vertices at which some simple path covering exactly `mask` can end.
pub fn longest_path_length(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > LONGEST_PATH_CAP {
        return Err(Error::SizeCap {
            operation: "longest_path_length",
            cap: LONGEST_PATH_CAP,
            actual: n,
        });
    }
    if g.edge_count() == 0 {
        return Ok(0);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | (1 << w)))
        .collect();
    let mut ends = vec![0u32; 1 << n];
    let mut best = 0;
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1usize..(1 << n) {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize - 1);
        if best == n - 1 {
            break;
        }
        let mut rest = e;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut next = adj[v] & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[mask | (1 << w)] |= 1 << w;
            }
        }
    }
    Ok(best)
}
