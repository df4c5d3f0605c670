//! Standard graph families and seeded random corpora.
//!
//! Path constructors take the *length* of the path (its edge count), so
//! `path(n)` has `n + 1` vertices. Random generators are deterministic in
//! their seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Attempts made by the rejection samplers before giving up.
const MAX_ATTEMPTS: usize = 10_000;

/// Path with `length` edges on vertices `0..=length`.
pub fn path(length: usize) -> Result<Graph> {
    if length == 0 {
        return Err(Error::domain("path length must be at least 1"));
    }
    Ok(Graph::from_sorted_unchecked(
        length + 1,
        (0..length).map(|i| (i, i + 1)).collect(),
    ))
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::domain(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::domain("complete graph needs at least 1 vertex"));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(Graph::from_sorted_unchecked(n, edges))
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::domain("both parts of K_{m,n} must be non-empty"));
    }
    let edges = (0..m)
        .flat_map(|u| (m..m + n).map(move |v| (u, v)))
        .collect();
    Ok(Graph::from_sorted_unchecked(m + n, edges))
}

/// Star `K_{1,leaves}`; the leaves are `0..leaves` and the centre is the
/// last vertex.
pub fn star(leaves: usize) -> Result<Graph> {
    complete_bipartite(leaves, 1)
}

/// Random labelled tree on `n` vertices: random recursive attachment
/// followed by a random relabelling.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::domain("tree needs at least 1 vertex"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let edges: Vec<Edge> = (1..n)
        .map(|v| {
            let parent = rng.gen_range(0..v);
            (perm[v], perm[parent])
        })
        .collect();
    Graph::from_edges(n, edges)
}

/// Erdős–Rényi `G(n, p)` resampled until connected.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    if n == 0 {
        return Err(Error::domain("graph needs at least 1 vertex"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let edges: Vec<Edge> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_sorted_unchecked(n, edges);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::domain(format!(
        "no connected G({n}, {p}) sample after {MAX_ATTEMPTS} attempts"
    )))
}

/// Random bipartite graph with parts `0..m` and `m..m+n`, each cross pair
/// present with probability `p`, resampled until connected.
pub fn random_bipartite(m: usize, n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    if m == 0 || n == 0 {
        return Err(Error::domain("both parts must be non-empty"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let edges: Vec<Edge> = (0..m)
            .flat_map(|u| (m..m + n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_sorted_unchecked(m + n, edges);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::domain(format!(
        "no connected bipartite sample for ({m}, {n}, {p}) after {MAX_ATTEMPTS} attempts"
    )))
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "edge probability {p} outside [0, 1]"
        )))
    }
}
