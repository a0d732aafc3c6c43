//! Exact chromatic number for small graphs, by iterative-deepening
//! k-colorability with symmetry breaking. Intended as a test oracle; the
//! vertex cap guards against accidental exponential runs.

use crate::graph::Graph;
use thiserror::Error;

pub const DEFAULT_VERTEX_LIMIT: usize = 16;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the exact-oracle limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

pub fn exact_chromatic(g: &Graph) -> Result<usize, OracleError> {
    exact_chromatic_with_limit(g, DEFAULT_VERTEX_LIMIT)
}

pub fn exact_chromatic_with_limit(g: &Graph, limit: usize) -> Result<usize, OracleError> {
    if g.n() > limit {
        return Err(OracleError::TooLarge { n: g.n(), limit });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    if g.m() == 0 {
        return Ok(1);
    }
    // Branch on vertices in degree-descending order for early pruning.
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));

    let lower = greedy_clique_size(g);
    for k in lower..=g.n() {
        let mut colors = vec![usize::MAX; g.n()];
        if colorable(g, &order, 0, k, 0, &mut colors) {
            return Ok(k);
        }
    }
    unreachable!("every graph is n-colorable");
}

fn colorable(
    g: &Graph,
    order: &[usize],
    pos: usize,
    k: usize,
    max_used: usize,
    colors: &mut [usize],
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    // Trying at most one fresh color prunes color-permutation symmetry.
    let cap = k.min(max_used + 1);
    for c in 0..cap {
        if g.neighbors(v).iter().any(|&w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if colorable(g, order, pos + 1, k, max_used.max(c + 1), colors) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}

/// Greedy clique through a max-degree seed; a cheap chromatic lower bound.
fn greedy_clique_size(g: &Graph) -> usize {
    let seed = (0..g.n()).max_by_key(|&v| g.degree(v)).unwrap();
    let mut clique = vec![seed];
    for &v in g.neighbors(seed) {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique.len()
}
