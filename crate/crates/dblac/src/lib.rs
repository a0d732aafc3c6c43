//! Vertex-coloring toolkit built around the DBLAC heuristic (degree-ordered
//! greedy coloring with an eager bitwise-AND common-neighbor pass) and the
//! classical baselines LDF, DSATUR and RLF.
//!
//! Also provides DIMACS `.col` I/O, a pinned seeded Erdős–Rényi generator,
//! an exact chromatic-number oracle for small graphs, and a benchmark
//! harness with CSV and SVG output.

pub mod algo;
pub mod bench;
pub mod bitset;
pub mod colorfile;
pub mod dimacs;
pub mod fixtures;
pub mod gen;
pub mod graph;
pub mod oracle;

pub use algo::{
    color_dblac, color_dsatur, color_ldf, color_rlf, degree_order, run_algorithm, AlgorithmId,
    Coloring,
};
pub use dimacs::{parse_dimacs, write_dimacs};
pub use gen::gen_erdos_renyi;
pub use graph::Graph;
pub use oracle::exact_chromatic;
