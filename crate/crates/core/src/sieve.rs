//! k-sieves and graph powers.
//!
//! The k-sieve of `G` keeps every edge of `G` and joins each pair of
//! vertices whose hop distance in `G` is exactly `k`. Vertices in different
//! components are never joined.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::metrics::{bfs, distances, DistanceMatrix};

/// The k-sieve of `g`.
pub fn k_sieve(g: &Graph, k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::domain(format!(
            "sieve distance must be at least 2, got {k}"
        )));
    }
    let added = distances(g).pairs_at(k);
    g.with_edges(added)
}

/// `g^r`: joins every pair at distance at most `r`.
pub fn graph_power(g: &Graph, r: usize) -> Result<Graph> {
    if r < 1 {
        return Err(Error::domain("graph power exponent must be at least 1"));
    }
    let d = distances(g);
    let n = g.n();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| d.get(u, v).is_some_and(|x| x <= r))
        .collect();
    Ok(Graph::from_sorted_unchecked(n, edges))
}

/// One sieve edge together with how many shortest paths of length `k`
/// join its endpoints in the base graph. Each such path closes a
/// `(k + 1)`-cycle with the new edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingletEdge {
    pub u: usize,
    pub v: usize,
    pub geodesic_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingletCensus {
    pub k: usize,
    pub added_edges: Vec<RingletEdge>,
}

impl RingletCensus {
    /// Total number of ringlets, counting each geodesic separately.
    pub fn ringlet_count(&self) -> u64 {
        self.added_edges.iter().map(|e| e.geodesic_count).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.added_edges.iter().map(|e| (e.u, e.v))
    }

    /// CSV with header `u,v,geodesic_count`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("u,v,geodesic_count\n");
        for e in &self.added_edges {
            let _ = writeln!(out, "{},{},{}", e.u, e.v, e.geodesic_count);
        }
        out
    }
}

pub fn ringlet_census(g: &Graph, k: usize) -> Result<RingletCensus> {
    if k < 2 {
        return Err(Error::domain(format!(
            "sieve distance must be at least 2, got {k}"
        )));
    }
    let mut added_edges = Vec::new();
    for u in 0..g.n() {
        let (dist, count) = shortest_path_counts(g, u);
        for v in u + 1..g.n() {
            if dist[v] as usize == k && dist[v] != DistanceMatrix::UNREACHABLE {
                added_edges.push(RingletEdge {
                    u,
                    v,
                    geodesic_count: count[v],
                });
            }
        }
    }
    Ok(RingletCensus { k, added_edges })
}

/// BFS distances and number of shortest paths from `source`.
fn shortest_path_counts(g: &Graph, source: usize) -> (Vec<u32>, Vec<u64>) {
    let dist = bfs(g, source);
    let mut order: Vec<usize> = (0..g.n())
        .filter(|&v| dist[v] != DistanceMatrix::UNREACHABLE)
        .collect();
    order.sort_by_key(|&v| dist[v]);
    let mut count = vec![0u64; g.n()];
    count[source] = 1;
    for &v in &order {
        if v == source {
            continue;
        }
        count[v] = g
            .neighbors(v)
            .iter()
            .filter(|&w| dist[w] != DistanceMatrix::UNREACHABLE && dist[w] + 1 == dist[v])
            .map(|w| count[w])
            .sum();
    }
    (dist, count)
}

/// Every shortest path (as a vertex sequence from `u` to `v`), stopping
/// after `limit` paths.
pub fn geodesics(g: &Graph, u: usize, v: usize, limit: usize) -> Vec<Vec<usize>> {
    let to_v = bfs(g, v);
    let mut out = Vec::new();
    if to_v[u] == DistanceMatrix::UNREACHABLE {
        return out;
    }
    let mut stack = vec![u];
    collect_geodesics(g, &to_v, v, &mut stack, &mut out, limit);
    out
}

fn collect_geodesics(
    g: &Graph,
    to_v: &[u32],
    target: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    let last = *stack.last().expect("stack starts non-empty");
    if last == target {
        out.push(stack.clone());
        return;
    }
    for w in g.neighbors(last) {
        if to_v[w] + 1 == to_v[last] {
            stack.push(w);
            collect_geodesics(g, to_v, target, stack, out, limit);
            stack.pop();
        }
    }
}
