//! DSATUR: repeatedly color the uncolored vertex with the most distinct
//! neighbor colors, preferring higher degree then lower index on ties.
//! Saturation is tracked with per-vertex color bitsets, O(deg) per update.

use super::{smallest_feasible, AlgorithmId, Coloring, UNCOLORED};
use crate::bitset::Bitset;
use crate::graph::Graph;

pub fn color_dsatur(g: &Graph) -> Coloring {
    let n = g.n();
    let mut assignment = vec![UNCOLORED; n];
    // Greedy never needs more than max_degree + 1 colors.
    let color_capacity = g.max_degree() + 1;
    let mut neighbor_colors: Vec<Bitset> = (0..n).map(|_| Bitset::new(color_capacity)).collect();
    let mut saturation = vec![0usize; n];

    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| assignment[v] == UNCOLORED)
            .max_by(|&a, &b| {
                (saturation[a], g.degree(a), std::cmp::Reverse(a))
                    .cmp(&(saturation[b], g.degree(b), std::cmp::Reverse(b)))
            })
            .expect("an uncolored vertex remains");
        let c = smallest_feasible(g, &assignment, v);
        assignment[v] = c;
        for &w in g.neighbors(v) {
            if assignment[w] == UNCOLORED && !neighbor_colors[w].get(c) {
                neighbor_colors[w].set(c);
                saturation[w] += 1;
            }
        }
    }
    Coloring::from_assignment(assignment, AlgorithmId::Dsatur)
}
