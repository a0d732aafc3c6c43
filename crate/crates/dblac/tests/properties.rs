//! Corpus-wide properties of the colorers and the graph machinery, checked
//! over seeded random graphs so every run sees the same instances.

use dblac::algo::{run_algorithm, AlgorithmId};
use dblac::dimacs::{parse_dimacs, write_dimacs};
use dblac::fixtures;
use dblac::gen::{gen_erdos_renyi, SplitMix64};
use dblac::graph::Graph;
use dblac::oracle::exact_chromatic;

/// 240 graphs: 60 seeds x 4 densities, n cycling through 8..=64.
fn corpus() -> Vec<Graph> {
    let mut graphs = Vec::new();
    for (i, seed) in (0..60).enumerate() {
        let n = 8 + (i * 7) % 57; // 8..=64
        for (j, &p) in [0.1, 0.3, 0.5, 0.8].iter().enumerate() {
            graphs.push(gen_erdos_renyi(n, p, (seed * 4 + j) as u64).unwrap());
        }
    }
    graphs
}

#[test]
fn all_algorithms_proper_and_bounded_on_corpus() {
    let corpus = corpus();
    assert!(corpus.len() >= 200);
    for g in &corpus {
        for id in AlgorithmId::ALL {
            let c = run_algorithm(id, g);
            assert!(g.is_proper(&c.assignment).unwrap(), "{id} improper");
            assert!(c.k <= g.max_degree() + 1, "{id} exceeded max degree + 1");
            assert_eq!(c.algorithm, id);
            // Every color in 0..k appears.
            let mut seen = vec![false; c.k];
            for &col in &c.assignment {
                seen[col] = true;
            }
            assert!(seen.iter().all(|&s| s));
        }
    }
}

#[test]
fn heuristics_never_beat_the_oracle_on_small_graphs() {
    for seed in 0..30 {
        for p in [0.1, 0.3, 0.5, 0.8] {
            let n = 4 + (seed as usize % 9); // 4..=12
            let g = gen_erdos_renyi(n, p, seed).unwrap();
            let chi = exact_chromatic(&g).unwrap();
            for id in AlgorithmId::ALL {
                assert!(run_algorithm(id, &g).k >= chi, "{id} below chromatic number");
            }
        }
    }
}

#[test]
fn determinism_including_dimacs_round_trip() {
    for seed in [3, 17, 99] {
        let g = gen_erdos_renyi(48, 0.5, seed).unwrap();
        let reparsed = parse_dimacs(&write_dimacs(&g)).unwrap().graph;
        for id in AlgorithmId::ALL {
            let a = run_algorithm(id, &g);
            let b = run_algorithm(id, &g);
            let c = run_algorithm(id, &reparsed);
            assert_eq!(a.assignment, b.assignment);
            assert_eq!(a.assignment, c.assignment);
        }
    }
}

#[test]
fn exact_on_cliques_and_cycles() {
    for id in AlgorithmId::ALL {
        for r in 1..=8 {
            assert_eq!(run_algorithm(id, &fixtures::complete(r)).k, r, "{id} on K_{r}");
        }
        for n in 3..=12 {
            let expected = if n % 2 == 0 { 2 } else { 3 };
            assert_eq!(run_algorithm(id, &fixtures::cycle(n)).k, expected, "{id} on C_{n}");
        }
    }
}

#[test]
fn dsatur_two_colors_connected_bipartite() {
    // Connected bipartite corpus: complete bipartite K_{a,b} and even cycles.
    for (a, b) in [(1, 5), (2, 3), (3, 3), (4, 7)] {
        let edges: Vec<(usize, usize)> = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v))).collect();
        let g = Graph::from_edge_list(a + b, &edges).unwrap();
        assert_eq!(dblac::color_dsatur(&g).k, 2);
    }
    for n in (4..=16).step_by(2) {
        assert_eq!(dblac::color_dsatur(&fixtures::cycle(n)).k, 2);
    }
}

#[test]
fn round_trip_identity_on_generated_graphs() {
    for seed in 0..50 {
        let n = 5 + (seed as usize % 40);
        let g = gen_erdos_renyi(n, 0.4, seed).unwrap();
        let text = write_dimacs(&g);
        let back = parse_dimacs(&text).unwrap();
        assert!(back.warnings.is_empty());
        assert_eq!(write_dimacs(&back.graph), text);
    }
}

#[test]
fn is_proper_matches_naive_double_loop() {
    let mut rng = SplitMix64::new(404);
    for trial in 0..200 {
        let n = 3 + (trial % 20);
        let g = gen_erdos_renyi(n, 0.5, trial as u64).unwrap();
        let palette = 1 + (rng.next_u64() as usize % 4);
        let assignment: Vec<usize> = (0..n).map(|_| rng.next_u64() as usize % palette).collect();
        let naive = (0..n).all(|u| {
            (0..n).all(|v| !g.has_edge(u, v) || assignment[u] != assignment[v])
        });
        assert_eq!(g.is_proper(&assignment).unwrap(), naive);
    }
}

#[test]
fn common_neighbors_matches_list_intersection() {
    for seed in 0..10 {
        let g = gen_erdos_renyi(40, 0.3, seed).unwrap();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let bits: Vec<usize> = g.common_neighbors(u, v).unwrap().iter_ones().collect();
                let lists: Vec<usize> = g
                    .neighbors(u)
                    .iter()
                    .copied()
                    .filter(|w| g.neighbors(v).binary_search(w).is_ok())
                    .collect();
                assert_eq!(bits, lists);
            }
        }
    }
}

#[test]
fn oracle_respects_greedy_upper_bound() {
    // Non-complete, non-odd-cycle structured graphs.
    for seed in 0..20 {
        let g = gen_erdos_renyi(10, 0.4, seed).unwrap();
        let chi = exact_chromatic(&g).unwrap();
        if g.m() < 45 {
            assert!(chi <= g.max_degree() + 1);
        }
    }
    for r in 1..=8 {
        assert_eq!(exact_chromatic(&fixtures::complete(r)).unwrap(), r);
    }
}
