mod common;

use proptest::prelude::*;

use common::{brute_force_phi, has_odd_cycle};
use sieve_sparing::generate::{cycle, random_connected};
use sieve_sparing::iasi::{
    every_edge_has_singleton_end, is_iasi, is_weak_iasi, mono_indexed_edge_count, sumset,
    synthesize_labeling,
};
use sieve_sparing::iso::are_isomorphic;
use sieve_sparing::metrics::{distances, is_bipartite, longest_path_length};
use sieve_sparing::oracle::sparing_number_bruteforce_sets;
use sieve_sparing::sieve::{graph_power, k_sieve};
use sieve_sparing::sparing::{sparing_number, DEFAULT_BUDGET};
use sieve_sparing::{Graph, Labeling, SetLabel, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(prop::bool::weighted(0.35), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn label_strategy() -> impl Strategy<Value = SetLabel> {
    prop::collection::btree_set(0u64..=50, 1..6).prop_map(|s| SetLabel::new(s).unwrap())
}

/// Reachability in exactly `d` steps via repeated boolean matrix products;
/// the distance is the first `d` at which a pair becomes reachable.
fn matrix_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect();
    let mut reach: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| u == v).collect()).collect();
    let mut dist: Vec<Vec<Option<usize>>> = (0..n)
        .map(|u| (0..n).map(|v| (u == v).then_some(0)).collect())
        .collect();
    for d in 1..n {
        let next: Vec<Vec<bool>> = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| (0..n).any(|w| reach[u][w] && adj[w][v]))
                    .collect()
            })
            .collect();
        for u in 0..n {
            for v in 0..n {
                if next[u][v] && dist[u][v].is_none() {
                    dist[u][v] = Some(d);
                }
            }
        }
        reach = next;
    }
    dist
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn handshake_and_json(g in graph_strategy(12)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        prop_assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn distances_agree_with_matrix_products(g in graph_strategy(8)) {
        let d = distances(&g);
        let m = matrix_distances(&g);
        for (u, row) in m.iter().enumerate() {
            for (v, &want) in row.iter().enumerate() {
                prop_assert_eq!(d.get(u, v), want);
                prop_assert_eq!(d.get(u, v), d.get(v, u));
            }
        }
    }

    #[test]
    fn bipartite_iff_no_odd_cycle(g in graph_strategy(10)) {
        prop_assert_eq!(is_bipartite(&g), !has_odd_cycle(&g));
    }

    #[test]
    fn isomorphism_is_an_equivalence(g in graph_strategy(8), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let relabel = |g: &Graph, rng: &mut rand_chacha::ChaCha8Rng| {
            let mut p: Vec<usize> = (0..g.n()).collect();
            p.shuffle(rng);
            Graph::from_edges(g.n(), g.edges().iter().map(|&(u, v)| (p[u], p[v]))).unwrap()
        };
        let h = relabel(&g, &mut rng);
        let j = relabel(&h, &mut rng);
        prop_assert!(are_isomorphic(&g, &g).unwrap());
        prop_assert!(are_isomorphic(&g, &h).unwrap());
        prop_assert!(are_isomorphic(&h, &g).unwrap());
        prop_assert!(are_isomorphic(&h, &j).unwrap() && are_isomorphic(&g, &j).unwrap());
        if g.edge_count() > 0 {
            let fewer = Graph::from_edges(g.n(), g.edges()[1..].iter().copied()).unwrap();
            prop_assert!(!are_isomorphic(&g, &fewer).unwrap());
        }
    }

    #[test]
    fn sumset_cardinality_bounds(a in label_strategy(), b in label_strategy()) {
        let s = sumset(&a, &b);
        prop_assert!(a.len().max(b.len()) <= s.len());
        prop_assert!(s.len() <= a.len() * b.len());
        prop_assert_eq!(s.len() == a.len(), b.len() == 1);
        prop_assert_eq!(s.len() == b.len(), a.len() == 1);
        prop_assert_eq!(s, sumset(&b, &a));
    }

    #[test]
    fn sieve_edges_are_exactly_distance_k(g in graph_strategy(12), k in 2usize..6) {
        let s = k_sieve(&g, k).unwrap();
        let d = distances(&g);
        for &(u, v) in s.edges() {
            prop_assert!(g.has_edge(u, v) || d.get(u, v) == Some(k));
        }
        for (u, v) in d.pairs_at(k) {
            prop_assert!(s.has_edge(u, v));
        }
        prop_assert_eq!(s.edge_count(), g.edge_count() + d.pairs_at(k).len());
    }

    #[test]
    fn sieve_past_longest_path_is_identity(g in graph_strategy(9)) {
        let l = longest_path_length(&g).unwrap();
        prop_assert_eq!(&k_sieve(&g, (l + 1).max(2)).unwrap(), &g);
    }

    #[test]
    fn solver_matches_brute_force(g in graph_strategy(13)) {
        let solved = sparing_number(&g, DEFAULT_BUDGET).unwrap();
        prop_assert!(solved.is_optimal());
        prop_assert_eq!(solved.phi, brute_force_phi(&g));
        prop_assert!(solved.witness_is_consistent(&g));
        let oracle = sparing_number_bruteforce_sets(&g).unwrap();
        prop_assert_eq!(&solved.optimal_set, &oracle.optimal_set);
        if is_bipartite(&g) {
            prop_assert_eq!(solved.phi, 0);
        }
    }

    #[test]
    fn synthesized_count_is_edges_minus_degree_sum(g in graph_strategy(12), pick in any::<u64>()) {
        // Greedy independent set driven by the random bits.
        let mut set = VertexSet::new(g.n());
        for v in 0..g.n() {
            if pick & (1 << (v % 64)) != 0 && g.neighbors(v).is_disjoint(&set) {
                set.insert(v);
            }
        }
        let lab = synthesize_labeling(&g, &set).unwrap();
        let mono = mono_indexed_edge_count(&g, &lab).unwrap();
        prop_assert!(mono.weak);
        let degree_sum: usize = set.iter().map(|v| g.degree(v)).sum();
        prop_assert_eq!(mono.edges, g.edge_count() - degree_sum);
        prop_assert!(lab.largest_element() < 10 * (g.n() * g.n()) as u64 + 10);
    }
}

#[test]
fn square_equals_two_sieve_on_small_graphs() {
    for seed in 0..40 {
        let g = random_connected(7, 0.35, seed).unwrap();
        assert!(are_isomorphic(&k_sieve(&g, 2).unwrap(), &graph_power(&g, 2).unwrap()).unwrap());
    }
}

#[test]
fn adding_edges_never_lowers_phi() {
    use rand::{Rng, SeedableRng};
    for seed in 0..15 {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(4..=12);
        let mut g = Graph::empty(n).unwrap();
        let mut last = 0;
        loop {
            let missing: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !g.has_edge(u, v))
                .collect();
            if missing.is_empty() {
                break;
            }
            g = g
                .with_edges([missing[rng.gen_range(0..missing.len())]])
                .unwrap();
            let phi = sparing_number(&g, DEFAULT_BUDGET).unwrap().phi;
            assert!(phi >= last, "seed {seed}: phi fell from {last} to {phi}");
            last = phi;
        }
    }
}

/// Every labeling of a small cycle from a pool of labels.
fn for_each_labeling(n: usize, pool: &[SetLabel], f: &mut impl FnMut(&Labeling)) {
    let mut idx = vec![0usize; n];
    loop {
        f(&Labeling::new(
            idx.iter().map(|&i| pool[i].clone()).collect(),
        ));
        let mut pos = 0;
        loop {
            if pos == n {
                return;
            }
            idx[pos] += 1;
            if idx[pos] < pool.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[test]
fn weak_iasi_characterisation_and_cycle_parity_exhaustive() {
    // Singletons and pairs drawn from {0, .., 4}.
    let mut pool: Vec<SetLabel> = (0..5).map(SetLabel::singleton).collect();
    for a in 0..5 {
        for b in a + 1..5 {
            pool.push(SetLabel::new([a, b]).unwrap());
        }
    }
    for n in 3..=5 {
        let c = cycle(n).unwrap();
        let mut valid = 0;
        for_each_labeling(n, &pool, &mut |lab| {
            let weak = is_weak_iasi(&c, lab).unwrap();
            let characterised =
                is_iasi(&c, lab).unwrap() && every_edge_has_singleton_end(&c, lab).unwrap();
            assert_eq!(weak, characterised, "C_{n} {lab:?}");
            if weak {
                valid += 1;
                let mono = mono_indexed_edge_count(&c, lab).unwrap().edges;
                assert_eq!(mono % 2, n % 2, "C_{n} {lab:?}");
            }
        });
        assert!(valid > 0);
    }
}

#[test]
fn cycle_parity_over_all_independent_patterns() {
    for n in 3..=7 {
        let c = cycle(n).unwrap();
        for mask in 0u32..(1 << n) {
            let set =
                VertexSet::from_iter_with_capacity(n, (0..n).filter(|v| mask & (1 << v) != 0));
            if !c.is_independent(&set) {
                continue;
            }
            let lab = synthesize_labeling(&c, &set).unwrap();
            let mono = mono_indexed_edge_count(&c, &lab).unwrap();
            assert!(mono.weak);
            assert_eq!(mono.edges % 2, n % 2);
        }
    }
}
