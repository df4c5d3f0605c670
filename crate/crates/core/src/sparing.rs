//! Exact sparing numbers.
//!
//! A weak IASI must give every edge at least one singleton end, so the
//! vertices carrying non-singleton labels form an independent set `S`.
//! Every edge touching `S` has exactly one end in `S` and is not
//! mono-indexed; every other edge is. Minimising mono-indexed edges is
//! therefore maximising `Σ_{v∈S} deg(v)` over independent sets, and the
//! sparing number is `|E|` minus that maximum. The witness labeling built
//! from the optimal set closes the loop: it is re-validated and its mono
//! count must equal the reported value.
//!
//! The optimum is found by branch and bound per connected component. The
//! reported set is canonical: among all optimal sets it is the one that,
//! scanning vertices in index order, includes each vertex whenever some
//! optimal set agreeing on the earlier decisions does.

use std::time::Instant;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::Graph;
use crate::iasi::{mono_indexed_edge_count, synthesize_labeling, Labeling};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SolveStatus {
    Optimal,
    /// The node budget ran out. `phi_upper` is achieved by the reported
    /// set; the true value is proven to be at least `phi_lower`.
    BudgetExceeded {
        phi_lower: usize,
        phi_upper: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolverStats {
    pub nodes: u64,
    pub elapsed_ms: f64,
    pub components: usize,
    /// False when the budget ran out while selecting the canonical set;
    /// the set is still optimal.
    pub canonical_set: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SparingResult {
    pub phi: usize,
    pub optimal_set: Vec<usize>,
    pub witness: Labeling,
    pub status: SolveStatus,
    pub stats: SolverStats,
}

impl SparingResult {
    pub fn is_optimal(&self) -> bool {
        self.status == SolveStatus::Optimal
    }

    /// Re-validates the witness: it must be a weak IASI whose mono-indexed
    /// edge count equals `phi`.
    pub fn witness_is_consistent(&self, g: &Graph) -> bool {
        mono_indexed_edge_count(g, &self.witness)
            .map(|m| m.weak && m.edges == self.phi)
            .unwrap_or(false)
    }

    /// Assembles a result from an independent set of `g`, building and
    /// checking the witness labeling.
    pub(crate) fn from_set(
        g: &Graph,
        set: Vec<usize>,
        status: SolveStatus,
        stats: SolverStats,
    ) -> Result<Self> {
        let members = VertexSet::from_iter_with_capacity(g.n(), set.iter().copied());
        let witness = synthesize_labeling(g, &members)?;
        let weight: usize = set.iter().map(|&v| g.degree(v)).sum();
        Ok(SparingResult {
            phi: g.edge_count() - weight,
            optimal_set: set,
            witness,
            status,
            stats,
        })
    }
}

/// Sparing number of `g` with at most `budget` search nodes.
pub fn sparing_number(g: &Graph, budget: u64) -> Result<SparingResult> {
    let start = Instant::now();
    let solved = solve_mwis(g, budget);
    let status = if solved.proven {
        SolveStatus::Optimal
    } else {
        SolveStatus::BudgetExceeded {
            phi_lower: g.edge_count().saturating_sub(solved.weight_upper as usize),
            phi_upper: g.edge_count() - solved.weight as usize,
        }
    };
    let stats = SolverStats {
        nodes: solved.nodes,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        components: solved.components,
        canonical_set: solved.canonical,
    };
    SparingResult::from_set(g, solved.set, status, stats)
}

/// Independent set maximising the sum of degrees, with its weight.
/// Isolated vertices are never included.
pub fn max_degree_weight_independent_set(g: &Graph) -> (Vec<usize>, usize) {
    let solved = solve_mwis(g, u64::MAX);
    (solved.set, solved.weight as usize)
}

struct Solved {
    set: Vec<usize>,
    weight: u64,
    weight_upper: u64,
    nodes: u64,
    proven: bool,
    canonical: bool,
    components: usize,
}

fn solve_mwis(g: &Graph, budget: u64) -> Solved {
    let mut out = Solved {
        set: Vec::new(),
        weight: 0,
        weight_upper: 0,
        nodes: 0,
        proven: true,
        canonical: true,
        components: 0,
    };
    for comp in g.components() {
        if comp.len() == 1 {
            continue;
        }
        out.components += 1;
        let local = g.induced(&comp);
        let weights: Vec<u64> = (0..local.n()).map(|v| local.degree(v) as u64).collect();
        let mut search = Search::new(&local, &weights, budget.saturating_sub(out.nodes));
        let part = search.solve_canonical();
        out.nodes += search.nodes;
        out.weight += part.weight;
        out.weight_upper += part.weight_upper;
        out.proven &= part.proven;
        out.canonical &= part.canonical;
        out.set.extend(part.set.iter().map(|v| comp[v]));
    }
    out.set.sort_unstable();
    out
}

struct Part {
    set: VertexSet,
    weight: u64,
    weight_upper: u64,
    proven: bool,
    canonical: bool,
}

/// Branch and bound for maximum-weight independent set on one component.
struct Search<'a> {
    adj: Vec<&'a VertexSet>,
    weight: &'a [u64],
    n: usize,
    nodes: u64,
    budget: u64,
    exhausted: bool,
    best: u64,
    best_set: VertexSet,
    /// Stop as soon as `best` reaches this value.
    stop_at: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, weight: &'a [u64], budget: u64) -> Self {
        Search {
            adj: (0..g.n()).map(|v| g.neighbors(v)).collect(),
            weight,
            n: g.n(),
            nodes: 0,
            budget,
            exhausted: false,
            best: 0,
            best_set: VertexSet::new(g.n()),
            stop_at: u64::MAX,
        }
    }

    fn solve_canonical(&mut self) -> Part {
        let all =
            VertexSet::from_iter_with_capacity(self.n, (0..self.n).filter(|&v| self.weight[v] > 0));
        let root_upper = self.clique_cover_bound(&all).min(self.sum(&all));

        let (greedy_set, greedy_weight) = self.greedy(&all);
        self.best = greedy_weight;
        self.best_set = greedy_set;
        self.run(all.clone(), 0, &mut VertexSet::new(self.n));
        if self.exhausted {
            return Part {
                set: self.best_set.clone(),
                weight: self.best,
                weight_upper: root_upper.max(self.best),
                proven: false,
                canonical: false,
            };
        }
        let optimum = self.best;
        let fallback = self.best_set.clone();

        // Walk vertices in index order, keeping each one if the optimum is
        // still reachable with it.
        let mut chosen = VertexSet::new(self.n);
        let mut fixed = 0u64;
        let mut open = all;
        for v in 0..self.n {
            if fixed == optimum {
                break;
            }
            if !open.contains(v) {
                continue;
            }
            open.remove(v);
            let mut rest = open.clone();
            rest.difference_with(self.adj[v]);
            let need = optimum - fixed - self.weight[v];
            if self.sum(&rest) >= need && self.reaches(&rest, need) {
                chosen.insert(v);
                fixed += self.weight[v];
                open = rest;
            }
            if self.exhausted {
                return Part {
                    set: fallback,
                    weight: optimum,
                    weight_upper: optimum,
                    proven: true,
                    canonical: false,
                };
            }
        }
        debug_assert_eq!(fixed, optimum);
        Part {
            set: chosen,
            weight: optimum,
            weight_upper: optimum,
            proven: true,
            canonical: true,
        }
    }

    /// Whether some independent subset of `cand` weighs at least `need`.
    fn reaches(&mut self, cand: &VertexSet, need: u64) -> bool {
        if need == 0 {
            return true;
        }
        self.best = need - 1;
        self.stop_at = need;
        self.run(cand.clone(), 0, &mut VertexSet::new(self.n));
        self.stop_at = u64::MAX;
        self.best >= need
    }

    fn sum(&self, set: &VertexSet) -> u64 {
        set.iter().map(|v| self.weight[v]).sum()
    }

    fn residual_degree(&self, v: usize, cand: &VertexSet) -> usize {
        self.adj[v].intersection_len(cand)
    }

    fn greedy(&self, cand: &VertexSet) -> (VertexSet, u64) {
        let mut open = cand.clone();
        let mut set = VertexSet::new(self.n);
        let mut total = 0;
        while !open.is_empty() {
            // Highest weight, then fewest open neighbours, then lowest index.
            let v = open
                .iter()
                .max_by_key(|&v| {
                    (
                        self.weight[v],
                        std::cmp::Reverse(self.residual_degree(v, &open)),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("open is non-empty");
            set.insert(v);
            total += self.weight[v];
            open.remove(v);
            open.difference_with(self.adj[v]);
        }
        (set, total)
    }

    /// Sum over a greedy clique partition of each clique's heaviest vertex.
    fn clique_cover_bound(&self, cand: &VertexSet) -> u64 {
        let mut order: Vec<usize> = cand.iter().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.weight[v]), v));
        let mut cliques: Vec<VertexSet> = Vec::new();
        let mut bound = 0;
        for v in order {
            let home = cliques.iter_mut().find(|c| {
                let mut outside = (*c).clone();
                outside.difference_with(self.adj[v]);
                outside.is_empty()
            });
            match home {
                Some(c) => c.insert(v),
                None => {
                    let mut c = VertexSet::new(self.n);
                    c.insert(v);
                    cliques.push(c);
                    bound += self.weight[v];
                }
            }
        }
        bound
    }

    fn run(&mut self, mut cand: VertexSet, mut current: u64, chosen: &mut VertexSet) {
        if self.exhausted || self.best >= self.stop_at {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }

        // Forced choices: vertices with no open neighbour, and pendant
        // vertices at least as heavy as their only open neighbour.
        let mut taken: Vec<usize> = Vec::new();
        loop {
            let forced = cand.iter().find(|&v| {
                let mut nb = self.adj[v].clone();
                nb.intersect_with(&cand);
                match nb.len() {
                    0 => true,
                    1 => self.weight[v] >= self.weight[nb.first().expect("one neighbour")],
                    _ => false,
                }
            });
            let Some(v) = forced else { break };
            cand.remove(v);
            cand.difference_with(self.adj[v]);
            current += self.weight[v];
            chosen.insert(v);
            taken.push(v);
        }

        if cand.is_empty() {
            if current > self.best {
                self.best = current;
                self.best_set = chosen.clone();
            }
        } else if current + self.sum(&cand) > self.best
            && current + self.clique_cover_bound(&cand) > self.best
        {
            let v = cand
                .iter()
                .max_by_key(|&v| (self.residual_degree(v, &cand), std::cmp::Reverse(v)))
                .expect("cand is non-empty");

            let mut with = cand.clone();
            with.remove(v);
            with.difference_with(self.adj[v]);
            chosen.insert(v);
            self.run(with, current + self.weight[v], chosen);
            chosen.remove(v);

            cand.remove(v);
            self.run(cand, current, chosen);
        }

        for v in taken {
            chosen.remove(v);
        }
    }
}
