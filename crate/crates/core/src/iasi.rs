//! Set-labels, sumsets and (weak) integer-additive set-indexers.
//!
//! A labeling assigns each vertex a finite non-empty set of non-negative
//! integers; an edge inherits the sumset of its endpoint labels. The
//! labeling is an IASI when both the vertex and the induced edge labels
//! are pairwise distinct, and a weak IASI when additionally every edge
//! label is exactly as large as the larger endpoint label.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A finite non-empty set of non-negative integers, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetLabel(Vec<u64>);

impl SetLabel {
    pub fn new<I: IntoIterator<Item = u64>>(elements: I) -> Result<Self> {
        let mut v: Vec<u64> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(Error::Format("set-labels must be non-empty".into()));
        }
        Ok(SetLabel(v))
    }

    pub fn singleton(x: u64) -> Self {
        SetLabel(vec![x])
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    /// Set-indexing number.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_singleton(&self) -> bool {
        self.0.len() == 1
    }
}

impl fmt::Debug for SetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl fmt::Display for SetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// `A + B = {a + b : a ∈ A, b ∈ B}`.
pub fn sumset(a: &SetLabel, b: &SetLabel) -> SetLabel {
    let mut out: Vec<u64> =
        a.0.iter()
            .flat_map(|x| b.0.iter().map(move |y| x + y))
            .collect();
    out.sort_unstable();
    out.dedup();
    SetLabel(out)
}

/// Vertex labels of a graph. Edge labels are always derived, never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    vertex_labels: Vec<SetLabel>,
}

impl Labeling {
    pub fn new(vertex_labels: Vec<SetLabel>) -> Self {
        Labeling { vertex_labels }
    }

    pub fn vertex_labels(&self) -> &[SetLabel] {
        &self.vertex_labels
    }

    pub fn label(&self, v: usize) -> Option<&SetLabel> {
        self.vertex_labels.get(v)
    }

    pub fn edge_label(&self, u: usize, v: usize) -> Result<SetLabel> {
        Ok(sumset(self.require(u)?, self.require(v)?))
    }

    /// Induced edge labels in the graph's edge order.
    pub fn edge_labels(&self, g: &Graph) -> Result<Vec<(Edge, SetLabel)>> {
        self.covers(g)?;
        Ok(g.edges()
            .iter()
            .map(|&(u, v)| {
                (
                    (u, v),
                    sumset(&self.vertex_labels[u], &self.vertex_labels[v]),
                )
            })
            .collect())
    }

    /// Vertices whose label is not a singleton.
    pub fn non_singleton_vertices(&self) -> Vec<usize> {
        (0..self.vertex_labels.len())
            .filter(|&v| !self.vertex_labels[v].is_singleton())
            .collect()
    }

    pub fn largest_element(&self) -> u64 {
        self.vertex_labels
            .iter()
            .filter_map(|l| l.0.last().copied())
            .max()
            .unwrap_or(0)
    }

    fn require(&self, v: usize) -> Result<&SetLabel> {
        self.vertex_labels.get(v).ok_or(Error::MissingLabel(v))
    }

    fn covers(&self, g: &Graph) -> Result<()> {
        if self.vertex_labels.len() < g.n() {
            return Err(Error::MissingLabel(self.vertex_labels.len()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("labeling serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}

struct NumericKeys<'a>(&'a [SetLabel]);

impl Serialize for NumericKeys<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (v, label) in self.0.iter().enumerate() {
            map.serialize_entry(&v.to_string(), &label.0)?;
        }
        map.end()
    }
}

impl Serialize for Labeling {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Labeling", 1)?;
        s.serialize_field("vertex_labels", &NumericKeys(&self.vertex_labels))?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Labeling {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;

        #[derive(Deserialize)]
        struct Raw {
            vertex_labels: BTreeMap<String, Vec<u64>>,
        }

        let raw = Raw::deserialize(deserializer)?;
        let mut by_vertex = BTreeMap::new();
        for (key, elements) in raw.vertex_labels {
            let v: usize = key
                .parse()
                .map_err(|_| D::Error::custom(format!("vertex key {key:?} is not an integer")))?;
            by_vertex.insert(v, SetLabel::new(elements).map_err(D::Error::custom)?);
        }
        let n = by_vertex.len();
        let mut labels = Vec::with_capacity(n);
        for (expected, (v, label)) in by_vertex.into_iter().enumerate() {
            if v != expected {
                return Err(D::Error::custom(format!("vertex {expected} has no label")));
            }
            labels.push(label);
        }
        Ok(Labeling::new(labels))
    }
}

/// Vertex labels pairwise distinct and induced edge labels pairwise distinct.
pub fn is_iasi(g: &Graph, lab: &Labeling) -> Result<bool> {
    lab.covers(g)?;
    let mut seen = HashSet::new();
    if !lab.vertex_labels[..g.n()].iter().all(|l| seen.insert(l)) {
        return Ok(false);
    }
    let mut seen = HashSet::new();
    Ok(lab.edge_labels(g)?.into_iter().all(|(_, l)| seen.insert(l)))
}

/// IASI whose every edge label has cardinality `max(|f(u)|, |f(v)|)`.
pub fn is_weak_iasi(g: &Graph, lab: &Labeling) -> Result<bool> {
    if !is_iasi(g, lab)? {
        return Ok(false);
    }
    Ok(lab.edge_labels(g)?.iter().all(|&((u, v), ref l)| {
        l.len() == lab.vertex_labels[u].len().max(lab.vertex_labels[v].len())
    }))
}

/// The endpoint form of weakness: every edge has a singleton end.
pub fn every_edge_has_singleton_end(g: &Graph, lab: &Labeling) -> Result<bool> {
    lab.covers(g)?;
    Ok(g.edges()
        .iter()
        .all(|&(u, v)| lab.vertex_labels[u].is_singleton() || lab.vertex_labels[v].is_singleton()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MonoCount {
    /// Edges whose sumset label is a singleton.
    pub edges: usize,
    /// Whether the labeling is a weak IASI of the graph; the count is only
    /// meaningful for the sparing number when this holds.
    pub weak: bool,
}

pub fn mono_indexed_edge_count(g: &Graph, lab: &Labeling) -> Result<MonoCount> {
    let edges = lab
        .edge_labels(g)?
        .iter()
        .filter(|(_, l)| l.is_singleton())
        .count();
    Ok(MonoCount {
        edges,
        weak: is_weak_iasi(g, lab)?,
    })
}

/// Builds a weak IASI in which exactly the vertices of `non_singleton` get
/// 2-element labels.
///
/// Vertices are visited in index order. Each one takes the smallest label
/// (singleton `{c}`, or pair `{c, c + d}` ordered by largest element) that
/// keeps all vertex labels and all edge labels among visited vertices
/// distinct. The finished labeling is re-validated before it is returned.
pub fn synthesize_labeling(g: &Graph, non_singleton: &VertexSet) -> Result<Labeling> {
    if let Some((u, v)) = g.conflict_in(non_singleton) {
        return Err(Error::NotIndependent(u, v));
    }
    let n = g.n();
    let mut labels: Vec<Option<SetLabel>> = vec![None; n];
    let mut vertex_seen: HashSet<SetLabel> = HashSet::new();
    let mut edge_seen: HashSet<SetLabel> = HashSet::new();

    for v in 0..n {
        let pair = non_singleton.contains(v);
        let placed: Vec<usize> = g.neighbors(v).iter().filter(|&u| u < v).collect();
        let fits =
            |cand: &SetLabel, vertex_seen: &HashSet<SetLabel>, edge_seen: &HashSet<SetLabel>| {
                if vertex_seen.contains(cand) {
                    return None;
                }
                let mut fresh = Vec::with_capacity(placed.len());
                for &u in &placed {
                    let s = sumset(cand, labels[u].as_ref().expect("earlier vertex labelled"));
                    if edge_seen.contains(&s) || fresh.contains(&s) {
                        return None;
                    }
                    fresh.push(s);
                }
                Some(fresh)
            };

        let mut top = 1u64;
        let (label, fresh) = 'search: loop {
            if pair {
                for low in 1..top {
                    let cand = SetLabel(vec![low, top]);
                    if let Some(fresh) = fits(&cand, &vertex_seen, &edge_seen) {
                        break 'search (cand, fresh);
                    }
                }
            } else {
                let cand = SetLabel::singleton(top);
                if let Some(fresh) = fits(&cand, &vertex_seen, &edge_seen) {
                    break 'search (cand, fresh);
                }
            }
            top += 1;
        };
        vertex_seen.insert(label.clone());
        edge_seen.extend(fresh);
        labels[v] = Some(label);
    }

    let lab = Labeling::new(
        labels
            .into_iter()
            .map(|l| l.expect("all labelled"))
            .collect(),
    );
    debug_assert!(is_weak_iasi(g, &lab).unwrap_or(false));
    if !is_weak_iasi(g, &lab)? {
        return Err(Error::InvalidGraph(
            "synthesized labeling failed validation".into(),
        ));
    }
    Ok(lab)
}

/// DOT rendering with set-labels on vertices and mono-indexed edges dashed.
pub fn labeled_dot(g: &Graph, lab: &Labeling) -> Result<String> {
    lab.covers(g)?;
    Ok(g.to_dot_with(
        "G",
        |v| Some(lab.vertex_labels[v].to_string()),
        |u, v| {
            let l = sumset(&lab.vertex_labels[u], &lab.vertex_labels[v]);
            Some(if l.is_singleton() {
                format!("style=dashed, label=\"{l}\"")
            } else {
                format!("label=\"{l}\"")
            })
        },
    ))
}
