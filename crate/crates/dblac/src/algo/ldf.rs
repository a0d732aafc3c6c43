//! Largest Degree First: greedy smallest-available color along the
//! degree-descending order.

use super::{degree_order, smallest_feasible, AlgorithmId, Coloring, UNCOLORED};
use crate::graph::Graph;

pub fn color_ldf(g: &Graph) -> Coloring {
    let mut assignment = vec![UNCOLORED; g.n()];
    for v in degree_order(g) {
        assignment[v] = smallest_feasible(g, &assignment, v);
    }
    Coloring::from_assignment(assignment, AlgorithmId::Ldf)
}
