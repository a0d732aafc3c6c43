//! Small named graphs used across the test suite and examples.

use crate::graph::Graph;

/// 5-vertex graph: triangle v1v2v3 plus the path v2-v4-v5-v3 (0-indexed here).
pub fn problem1() -> Graph {
    Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)]).unwrap()
}

/// 6-vertex graph with a 4-clique {a, b, d, f}; vertices a..f are 0..5.
pub fn problem2() -> Graph {
    Graph::from_edge_list(
        6,
        &[
            (0, 1),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 3),
            (1, 5),
            (2, 3),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
    )
    .unwrap()
}

/// 6-vertex wheel-like graph centered on v5 (0-indexed: vertex 4, degree 5).
pub fn problem3() -> Graph {
    Graph::from_edge_list(
        6,
        &[
            (0, 1),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 4),
            (4, 5),
        ],
    )
    .unwrap()
}

/// Complete graph on `r` vertices.
pub fn complete(r: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..r)
        .flat_map(|u| (u + 1..r).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(r, &edges).unwrap()
}

/// Cycle on `n` vertices (n >= 3).
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|u| (u, (u + 1) % n)).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Edgeless graph on `n` vertices.
pub fn edgeless(n: usize) -> Graph {
    Graph::from_edge_list(n, &[]).unwrap()
}
