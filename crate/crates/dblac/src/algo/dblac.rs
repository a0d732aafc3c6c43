//! Degree-Based Logical Adjacency Checking.
//!
//! Greedy coloring along the degree-descending order, augmented by an eager
//! pass per processed vertex: AND the vertex's adjacency row with that of
//! its highest-degree colored neighbor, and immediately greedy-color the
//! uncolored common neighbors in degree order. One word-wide AND per
//! processed vertex keeps the whole run O(n * max_degree).

use super::{degree_order, smallest_feasible, AlgorithmId, Coloring, UNCOLORED};
use crate::graph::Graph;

pub fn color_dblac(g: &Graph) -> Coloring {
    let mut assignment = vec![UNCOLORED; g.n()];
    for v in degree_order(g) {
        if assignment[v] != UNCOLORED {
            continue;
        }
        assignment[v] = smallest_feasible(g, &assignment, v);

        // Partner: the colored neighbor of v with maximal degree, lowest
        // index on ties.
        let partner = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| assignment[u] != UNCOLORED)
            .max_by_key(|&u| (g.degree(u), std::cmp::Reverse(u)));
        let Some(u) = partner else { continue };

        // Eagerly color the uncolored common neighbors in ascending index
        // order (iter_ones is already ascending).
        let common = g.row(v).and(g.row(u));
        for w in common.iter_ones() {
            if assignment[w] == UNCOLORED {
                assignment[w] = smallest_feasible(g, &assignment, w);
            }
        }
    }
    Coloring::from_assignment(assignment, AlgorithmId::Dblac)
}
