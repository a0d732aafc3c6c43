//! The four deterministic coloring heuristics and their shared machinery.
//!
//! All colorers are pure functions of an immutable [`Graph`]: same graph,
//! same coloring, every time. Ties are broken by ascending vertex index
//! throughout. Colors are dense integers from 0; `k = max color + 1`.

mod dblac;
mod dsatur;
mod ldf;
mod rlf;

pub use dblac::color_dblac;
pub use dsatur::color_dsatur;
pub use ldf::color_ldf;
pub use rlf::color_rlf;

use crate::graph::Graph;
use std::fmt;
use std::str::FromStr;

/// Identifies one of the four colorers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgorithmId {
    Dblac,
    Ldf,
    Dsatur,
    Rlf,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 4] = [
        AlgorithmId::Dblac,
        AlgorithmId::Ldf,
        AlgorithmId::Dsatur,
        AlgorithmId::Rlf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmId::Dblac => "dblac",
            AlgorithmId::Ldf => "ldf",
            AlgorithmId::Dsatur => "dsatur",
            AlgorithmId::Rlf => "rlf",
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, thiserror::Error)]
#[error("unknown algorithm `{0}`; valid names: dblac, ldf, dsatur, rlf")]
pub struct UnknownAlgorithm(String);

impl FromStr for AlgorithmId {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dblac" => Ok(AlgorithmId::Dblac),
            "ldf" => Ok(AlgorithmId::Ldf),
            "dsatur" => Ok(AlgorithmId::Dsatur),
            "rlf" => Ok(AlgorithmId::Rlf),
            _ => Err(UnknownAlgorithm(s.to_string())),
        }
    }
}

/// A proper coloring produced by one of the colorers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    /// Color of each vertex, 0-indexed colors.
    pub assignment: Vec<usize>,
    /// Number of distinct colors used; every color in 0..k appears.
    pub k: usize,
    pub algorithm: AlgorithmId,
}

impl Coloring {
    pub(crate) fn from_assignment(assignment: Vec<usize>, algorithm: AlgorithmId) -> Coloring {
        let k = assignment.iter().map(|&c| c + 1).max().unwrap_or(0);
        Coloring {
            assignment,
            k,
            algorithm,
        }
    }
}

pub fn run_algorithm(id: AlgorithmId, g: &Graph) -> Coloring {
    match id {
        AlgorithmId::Dblac => color_dblac(g),
        AlgorithmId::Ldf => color_ldf(g),
        AlgorithmId::Dsatur => color_dsatur(g),
        AlgorithmId::Rlf => color_rlf(g),
    }
}

/// Vertices sorted by degree descending, ties by ascending index.
pub fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    order
}

pub(crate) const UNCOLORED: usize = usize::MAX;

/// Smallest color not used by any colored neighbor of `v`.
/// `partial[w] == UNCOLORED` marks an uncolored vertex.
pub(crate) fn smallest_feasible(g: &Graph, partial: &[usize], v: usize) -> usize {
    let mut used = vec![false; g.degree(v) + 1];
    for &w in g.neighbors(v) {
        let c = partial[w];
        if c < used.len() {
            used[c] = true;
        }
    }
    used.iter().position(|&u| !u).expect("a fresh color always fits")
}

/// Public form of the greedy color choice, on an `Option`-based partial.
pub fn smallest_feasible_color(g: &Graph, partial: &[Option<usize>], v: usize) -> usize {
    let dense: Vec<usize> = partial.iter().map(|c| c.unwrap_or(UNCOLORED)).collect();
    smallest_feasible(g, &dense, v)
}
