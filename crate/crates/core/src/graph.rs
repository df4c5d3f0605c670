//! Simple undirected graphs on vertices `0..n`.

use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Unordered edge, always stored with `u < v`.
pub type Edge = (usize, usize);

/// A finite simple undirected graph. Immutable once built.
///
/// The edge list is kept sorted lexicographically with `u < v`, and the
/// per-vertex neighbor sets are derived from it at construction time.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation; self-loops, duplicates and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        if n == 0 {
            return Err(Error::InvalidGraph(
                "graph needs at least one vertex".into(),
            ));
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted_unchecked(n, list))
    }

    /// Internal constructor for edge lists already known to be canonical.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in &edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Graph { n, edges, adj }
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// True when no two members of `set` are adjacent.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// First adjacent pair inside `set`, if any.
    pub fn conflict_in(&self, set: &VertexSet) -> Option<Edge> {
        set.iter().find_map(|u| {
            let mut inside = self.adj[u].clone();
            inside.intersect_with(set);
            inside.first().map(|v| (u.min(v), u.max(v)))
        })
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Subgraph induced by `vertices`, relabeled to `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|(u, v)| index[*u] != usize::MAX && index[*v] != usize::MAX)
            .map(|&(u, v)| (index[u].min(index[v]), index[u].max(index[v])))
            .collect();
        edges.sort_unstable();
        Graph::from_sorted_unchecked(vertices.len().max(1), edges)
    }

    /// Copy of this graph with `extra` edges added (duplicates of existing
    /// edges are ignored).
    pub fn with_edges<I: IntoIterator<Item = Edge>>(&self, extra: I) -> Result<Graph> {
        let mut edges = self.edges.clone();
        for (a, b) in extra {
            if a >= self.n || b >= self.n || a == b {
                return Err(Error::InvalidGraph(format!("cannot add edge ({a}, {b})")));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Graph::from_sorted_unchecked(self.n, edges))
    }

    /// Canonical JSON form `{"n": .., "edges": [[u, v], ..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }

    /// Graphviz rendering; `style` may attach attributes to an edge
    /// (for example `style=dashed`).
    pub fn to_dot_with<F>(
        &self,
        name: &str,
        vertex_label: impl Fn(usize) -> Option<String>,
        style: F,
    ) -> String
    where
        F: Fn(usize, usize) -> Option<String>,
    {
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for v in 0..self.n {
            match vertex_label(v) {
                Some(label) => {
                    let _ = writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for &(u, v) in &self.edges {
            match style(u, v) {
                Some(attrs) => {
                    let _ = writeln!(out, "  {u} -- {v} [{attrs}];");
                }
                None => {
                    let _ = writeln!(out, "  {u} -- {v};");
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_dot(&self) -> String {
        self.to_dot_with("G", |_| None, |_, _| None)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawGraph {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawGraph::deserialize(deserializer)?;
        Graph::from_edges(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_simple_input() {
        assert!(Graph::from_edges(0, []).is_err());
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn canonical_edge_order() {
        let g = Graph::from_edges(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.to_json(), r#"{"n":4,"edges":[[0,1],[0,2],[2,3]]}"#);
        assert!(g.has_edge(3, 2) && !g.has_edge(1, 3));
    }

    #[test]
    fn json_rejects_bad_graphs() {
        assert!(Graph::from_json(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
        assert!(Graph::from_json(r#"{"n":2}"#).is_err());
        let g = Graph::from_json(r#"{"n":3,"edges":[[2,1]]}"#).unwrap();
        assert_eq!(g.edges(), &[(1, 2)]);
        assert_eq!(g.degree(0), 0);
    }

    #[test]
    fn components_and_induced() {
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        let h = g.induced(&[3, 4]);
        assert_eq!(h.n(), 2);
        assert_eq!(h.edges(), &[(0, 1)]);
    }

    #[test]
    fn dot_marks_styled_edges() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let dot = g.to_dot_with(
            "G",
            |_| None,
            |u, _| (u == 1).then(|| "style=dashed".to_string()),
        );
        assert!(dot.contains("1 -- 2 [style=dashed];"));
        assert!(dot.contains("0 -- 1;"));
    }
}
