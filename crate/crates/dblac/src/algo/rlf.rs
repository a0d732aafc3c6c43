//! Recursive Largest First: build one maximal independent set per color,
//! remove it from the residual graph, repeat.
//!
//! Class construction follows Leighton's rule: seed with the max-residual-
//! degree vertex, then repeatedly take the candidate with the most neighbors
//! among the excluded vertices (ties: fewest neighbors among the remaining
//! candidates, then lowest index). Neighbor counts are recomputed by
//! scanning adjacency lists, the classical O(n^2)-per-class formulation.

use super::{AlgorithmId, Coloring, UNCOLORED};
use crate::graph::Graph;

pub fn color_rlf(g: &Graph) -> Coloring {
    let n = g.n();
    let mut assignment = vec![UNCOLORED; n];
    let mut remaining = n;
    let mut color = 0;

    while remaining > 0 {
        // candidate[v]: uncolored and not adjacent to the class so far.
        // excluded[v]: uncolored but adjacent to the class so far.
        let mut candidate: Vec<bool> = assignment.iter().map(|&c| c == UNCOLORED).collect();
        let mut excluded = vec![false; n];
        let mut class = Vec::new();

        let count = |flags: &[bool], v: usize| g.neighbors(v).iter().filter(|&&w| flags[w]).count();

        // Seed: max degree within the residual graph, lowest index on ties.
        let seed = (0..n)
            .filter(|&v| candidate[v])
            .max_by_key(|&v| (count(&candidate, v), std::cmp::Reverse(v)))
            .expect("residual is non-empty");
        add_to_class(g, seed, &mut class, &mut candidate, &mut excluded);

        loop {
            let next = (0..n)
                .filter(|&v| candidate[v])
                .max_by_key(|&v| {
                    (
                        count(&excluded, v),
                        std::cmp::Reverse(count(&candidate, v)),
                        std::cmp::Reverse(v),
                    )
                });
            match next {
                Some(v) => add_to_class(g, v, &mut class, &mut candidate, &mut excluded),
                None => break,
            }
        }

        for &v in &class {
            assignment[v] = color;
        }
        remaining -= class.len();
        color += 1;
    }
    Coloring::from_assignment(assignment, AlgorithmId::Rlf)
}

fn add_to_class(
    g: &Graph,
    v: usize,
    class: &mut Vec<usize>,
    candidate: &mut [bool],
    excluded: &mut [bool],
) {
    class.push(v);
    candidate[v] = false;
    for &w in g.neighbors(v) {
        if candidate[w] {
            candidate[w] = false;
            excluded[w] = true;
        }
    }
}
