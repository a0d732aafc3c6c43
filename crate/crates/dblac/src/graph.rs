//! Immutable simple undirected graph with dual adjacency storage.
//!
//! Each vertex keeps both a bit row (for O(1) adjacency tests and word-wide
//! intersection) and a sorted neighbor list (for degree-ordered iteration).

use crate::bitset::Bitset;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has endpoint out of range for n={n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("common_neighbors requires two distinct vertices, got {0} twice")]
    IdenticalVertices(usize),
    #[error("vertex {v} out of range for n={n}")]
    InvalidVertex { v: usize, n: usize },
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    AssignmentLength { got: usize, expected: usize },
}

/// Simple undirected graph, 0-indexed vertices, immutable after construction.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    m: usize,
    adj_bits: Vec<Bitset>,
    adj_list: Vec<Vec<usize>>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges, reversed duplicates
    /// and self-loops are tolerated: duplicates collapse, self-loops drop.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj_bits: Vec<Bitset> = (0..n).map(|_| Bitset::new(n)).collect();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                continue;
            }
            adj_bits[u].set(v);
            adj_bits[v].set(u);
        }
        Ok(Self::from_rows(adj_bits))
    }

    fn from_rows(adj_bits: Vec<Bitset>) -> Graph {
        let n = adj_bits.len();
        let adj_list: Vec<Vec<usize>> = adj_bits.iter().map(|row| row.iter_ones().collect()).collect();
        let degrees: Vec<usize> = adj_list.iter().map(|l| l.len()).collect();
        let m = degrees.iter().sum::<usize>() / 2;
        Graph {
            n,
            m,
            adj_bits,
            adj_list,
            degrees,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct undirected edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, u: usize) -> usize {
        self.degrees[u]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// Sorted neighbor list of `u`.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj_list[u]
    }

    /// Adjacency bit row of `u`.
    pub fn row(&self, u: usize) -> &Bitset {
        &self.adj_bits[u]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj_bits[u].get(v)
    }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj_list[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Vertices adjacent to both `u` and `v`, as the AND of the two bit rows.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<Bitset, GraphError> {
        if u >= self.n {
            return Err(GraphError::InvalidVertex { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::InvalidVertex { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::IdenticalVertices(u));
        }
        Ok(self.adj_bits[u].and(&self.adj_bits[v]))
    }

    /// Returns `None` if the assignment properly colors the graph, otherwise
    /// one violating edge as witness.
    pub fn violating_edge(&self, assignment: &[usize]) -> Result<Option<(usize, usize)>, GraphError> {
        if assignment.len() != self.n {
            return Err(GraphError::AssignmentLength {
                got: assignment.len(),
                expected: self.n,
            });
        }
        for (u, v) in self.edges() {
            if assignment[u] == assignment[v] {
                return Ok(Some((u, v)));
            }
        }
        Ok(None)
    }

    pub fn is_proper(&self, assignment: &[usize]) -> Result<bool, GraphError> {
        Ok(self.violating_edge(assignment)?.is_none())
    }
}
