//! Exhaustive oracles for the sparing number, independent of the
//! branch-and-bound solver.
//!
//! * [`sparing_number_bruteforce_sets`] enumerates every independent set.
//! * [`sparing_number_bruteforce_labelings`] never mentions independent
//!   sets: it searches concrete set-labelings over a bounded universe and
//!   checks injectivity and the weak cardinality condition with real
//!   sumsets.

use std::collections::HashSet;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iasi::{mono_indexed_edge_count, sumset, Labeling, SetLabel};
use crate::sparing::{SolveStatus, SolverStats, SparingResult};

pub const SET_ORACLE_CAP: usize = 24;
pub const LABELING_ORACLE_CAP: usize = 6;
pub const UNIVERSE_CAP: u64 = 64;

/// Sparing number by enumerating all independent sets. Ties between
/// optimal sets are broken exactly as in [`crate::sparing::sparing_number`].
pub fn sparing_number_bruteforce_sets(g: &Graph) -> Result<SparingResult> {
    let n = g.n();
    if n > SET_ORACLE_CAP {
        return Err(Error::SizeCap {
            operation: "sparing_number_bruteforce_sets",
            cap: SET_ORACLE_CAP,
            actual: n,
        });
    }
    let start = Instant::now();
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | (1 << w)))
        .collect();
    let weight: Vec<usize> = g.degrees();
    let usable: u32 = (0..n)
        .filter(|&v| weight[v] > 0)
        .fold(0, |m, v| m | (1 << v));

    let mut enumeration = Enumeration {
        adj: &adj,
        weight: &weight,
        best: (0, 0),
        visited: 0,
    };
    enumeration.walk(usable, 0, 0);

    let (mask, _) = enumeration.best;
    let set: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
    let stats = SolverStats {
        nodes: enumeration.visited,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        components: g.components().iter().filter(|c| c.len() > 1).count(),
        canonical_set: true,
    };
    SparingResult::from_set(g, set, SolveStatus::Optimal, stats)
}

struct Enumeration<'a> {
    adj: &'a [u32],
    weight: &'a [usize],
    best: (u32, usize),
    visited: u64,
}

impl Enumeration<'_> {
    /// Visits every independent set that extends `mask` with members of
    /// `open` (each subset exactly once).
    fn walk(&mut self, open: u32, mask: u32, weight: usize) {
        self.visited += 1;
        self.offer(mask, weight);
        let mut rest = open;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // Only later vertices may join, so each set arises once.
            self.walk(
                rest & !self.adj[v],
                mask | (1 << v),
                weight + self.weight[v],
            );
        }
    }

    fn offer(&mut self, mask: u32, weight: usize) {
        let (best_mask, best_weight) = self.best;
        let better = weight > best_weight
            || (weight == best_weight && {
                let diff = mask ^ best_mask;
                diff != 0 && mask & (diff & diff.wrapping_neg()) != 0
            });
        if better {
            self.best = (mask, weight);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LabelingOracle {
    /// Minimum mono-indexed edge count over all weak IASIs in the universe,
    /// with a labeling attaining it.
    Found { phi: usize, witness: Labeling },
    /// No weak IASI uses only labels drawn from the universe.
    NoValidLabeling,
}

impl LabelingOracle {
    pub fn phi(&self) -> Option<usize> {
        match self {
            LabelingOracle::Found { phi, .. } => Some(*phi),
            LabelingOracle::NoValidLabeling => None,
        }
    }
}

/// Minimum number of mono-indexed edges over all weak IASIs whose labels
/// are 1- or 2-element subsets of `{0, .., universe - 1}`.
///
/// Labelings are grouped by which vertices get 2-element labels. Whether
/// an edge label is a singleton depends only on that grouping, so it is
/// enough to find one valid labeling per group; groups are searched
/// exhaustively with real sumset checks until one labeling is found or the
/// group is shown empty.
pub fn sparing_number_bruteforce_labelings(g: &Graph, universe: u64) -> Result<LabelingOracle> {
    if g.n() > LABELING_ORACLE_CAP {
        return Err(Error::SizeCap {
            operation: "sparing_number_bruteforce_labelings",
            cap: LABELING_ORACLE_CAP,
            actual: g.n(),
        });
    }
    if universe == 0 || universe > UNIVERSE_CAP {
        return Err(Error::domain(format!(
            "label universe must be in 1..={UNIVERSE_CAP}, got {universe}"
        )));
    }
    let singles: Vec<SetLabel> = (0..universe).map(SetLabel::singleton).collect();
    let pairs: Vec<SetLabel> = (0..universe)
        .flat_map(|a| (a + 1..universe).map(move |b| (a, b)))
        .map(|(a, b)| SetLabel::new([a, b]).expect("two elements"))
        .collect();

    let n = g.n();
    let mut best: Option<(usize, Labeling)> = None;
    for profile in 0u32..(1 << n) {
        let order = search_order(g, profile);
        let mut search = ProfileSearch {
            g,
            profile,
            order: &order,
            singles: &singles,
            pairs: &pairs,
            labels: vec![None; n],
            vertex_seen: HashSet::new(),
            edge_seen: HashSet::new(),
        };
        if !search.fill(0) {
            continue;
        }
        let lab = Labeling::new(
            search
                .labels
                .into_iter()
                .map(|l| l.expect("filled"))
                .collect(),
        );
        let count = mono_indexed_edge_count(g, &lab)?;
        debug_assert!(count.weak);
        if best.as_ref().is_none_or(|(b, _)| count.edges < *b) {
            best = Some((count.edges, lab));
        }
    }
    Ok(match best {
        Some((phi, witness)) => LabelingOracle::Found { phi, witness },
        None => LabelingOracle::NoValidLabeling,
    })
}

/// Two-element vertices first, each next vertex chosen to touch as many
/// already ordered ones as possible, so conflicts surface early.
fn search_order(g: &Graph, profile: u32) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for want_pair in [true, false] {
        loop {
            let next = (0..n)
                .filter(|&v| !placed[v] && (profile & (1 << v) != 0) == want_pair)
                .max_by_key(|&v| {
                    let linked = order.iter().filter(|&&u| g.has_edge(u, v)).count();
                    (linked, std::cmp::Reverse(v))
                });
            let Some(v) = next else { break };
            placed[v] = true;
            order.push(v);
        }
    }
    order
}

struct ProfileSearch<'a> {
    g: &'a Graph,
    profile: u32,
    order: &'a [usize],
    singles: &'a [SetLabel],
    pairs: &'a [SetLabel],
    labels: Vec<Option<SetLabel>>,
    vertex_seen: HashSet<SetLabel>,
    edge_seen: HashSet<SetLabel>,
}

impl ProfileSearch<'_> {
    fn fill(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        let pool = if self.profile & (1 << v) != 0 {
            self.pairs
        } else {
            self.singles
        };
        let placed: Vec<usize> = self.order[..depth]
            .iter()
            .copied()
            .filter(|&u| self.g.has_edge(u, v))
            .collect();
        'candidates: for cand in pool {
            if self.vertex_seen.contains(cand) {
                continue;
            }
            let mut fresh: Vec<SetLabel> = Vec::with_capacity(placed.len());
            for &u in &placed {
                let other = self.labels[u].as_ref().expect("placed vertex");
                let s = sumset(cand, other);
                if s.len() != cand.len().max(other.len())
                    || self.edge_seen.contains(&s)
                    || fresh.contains(&s)
                {
                    continue 'candidates;
                }
                fresh.push(s);
            }
            self.vertex_seen.insert(cand.clone());
            for s in &fresh {
                self.edge_seen.insert(s.clone());
            }
            self.labels[v] = Some(cand.clone());
            if self.fill(depth + 1) {
                return true;
            }
            self.labels[v] = None;
            self.vertex_seen.remove(cand);
            for s in &fresh {
                self.edge_seen.remove(s);
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path};

    #[test]
    fn set_oracle_examples() {
        assert_eq!(
            sparing_number_bruteforce_sets(&path(2).unwrap())
                .unwrap()
                .phi,
            0
        );
        assert_eq!(
            sparing_number_bruteforce_sets(&cycle(3).unwrap())
                .unwrap()
                .phi,
            1
        );
        assert_eq!(
            sparing_number_bruteforce_sets(&Graph::empty(5).unwrap())
                .unwrap()
                .phi,
            0
        );
        assert!(sparing_number_bruteforce_sets(&path(24).unwrap()).is_err());
    }

    #[test]
    fn labeling_oracle_examples() {
        let c4 = sparing_number_bruteforce_labelings(&cycle(4).unwrap(), 12).unwrap();
        assert_eq!(c4.phi(), Some(0));
        assert_eq!(
            sparing_number_bruteforce_labelings(&cycle(5).unwrap(), 12)
                .unwrap()
                .phi(),
            Some(1)
        );
        assert_eq!(
            sparing_number_bruteforce_labelings(&complete(4).unwrap(), 16)
                .unwrap()
                .phi(),
            Some(3)
        );
        if let LabelingOracle::Found { witness, .. } = c4 {
            assert!(crate::iasi::is_weak_iasi(&cycle(4).unwrap(), &witness).unwrap());
        }
    }

    #[test]
    fn labeling_oracle_small_universe() {
        // Three distinct labels are impossible with one element.
        assert_eq!(
            sparing_number_bruteforce_labelings(&complete(3).unwrap(), 1).unwrap(),
            LabelingOracle::NoValidLabeling
        );
        assert!(sparing_number_bruteforce_labelings(&path(6).unwrap(), 8).is_err());
        assert!(sparing_number_bruteforce_labelings(&path(2).unwrap(), 0).is_err());
    }
}
