//! Text form of a coloring: `c` comment lines, one `s <k>` line, then one
//! `v <vertex> <color>` line per vertex. Vertices and colors are 1-indexed
//! on disk, 0-indexed in memory.

use crate::algo::Coloring;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ColorFileError {
    #[error("line {line}: malformed `{kind}` line")]
    Malformed { line: usize, kind: &'static str },
    #[error("line {line}: unrecognized leading token `{token}`")]
    UnknownToken { line: usize, token: String },
    #[error("line {line}: vertex {v} outside 1..={n}")]
    VertexOutOfRange { line: usize, v: usize, n: usize },
    #[error("line {line}: vertex {v} assigned more than once")]
    DuplicateVertex { line: usize, v: usize },
    #[error("vertex {v} has no color assignment")]
    MissingVertex { v: usize },
    #[error("line {line}: color {c} must be >= 1")]
    BadColor { line: usize, c: usize },
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    out.push_str(&format!("c algorithm {}\n", c.algorithm));
    out.push_str(&format!("s {}\n", c.k));
    for (v, &color) in c.assignment.iter().enumerate() {
        out.push_str(&format!("v {} {}\n", v + 1, color + 1));
    }
    out
}

/// Parses a coloring for a graph with `n` vertices. Returns the declared
/// color count and the 0-indexed assignment; every vertex must appear
/// exactly once.
pub fn parse_coloring(input: &str, n: usize) -> Result<(usize, Vec<usize>), ColorFileError> {
    let mut declared_k = None;
    let mut assignment: Vec<Option<usize>> = vec![None; n];

    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match tokens.next().unwrap() {
            "c" => continue,
            "s" => {
                let k = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or(ColorFileError::Malformed { line, kind: "s" })?;
                declared_k = Some(k);
            }
            "v" => {
                let v: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or(ColorFileError::Malformed { line, kind: "v" })?;
                let c: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or(ColorFileError::Malformed { line, kind: "v" })?;
                if v == 0 || v > n {
                    return Err(ColorFileError::VertexOutOfRange { line, v, n });
                }
                if c == 0 {
                    return Err(ColorFileError::BadColor { line, c });
                }
                if assignment[v - 1].is_some() {
                    return Err(ColorFileError::DuplicateVertex { line, v });
                }
                assignment[v - 1] = Some(c - 1);
            }
            other => {
                return Err(ColorFileError::UnknownToken {
                    line,
                    token: other.to_string(),
                })
            }
        }
    }

    let mut dense = Vec::with_capacity(n);
    for (v, c) in assignment.into_iter().enumerate() {
        dense.push(c.ok_or(ColorFileError::MissingVertex { v: v + 1 })?);
    }
    let k = declared_k.unwrap_or_else(|| dense.iter().map(|&c| c + 1).max().unwrap_or(0));
    Ok((k, dense))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algo::{color_dsatur, AlgorithmId};
    use crate::fixtures;

    #[test]
    fn write_then_parse_round_trips() {
        let g = fixtures::problem2();
        let coloring = color_dsatur(&g);
        let text = write_coloring(&coloring);
        let (k, assignment) = parse_coloring(&text, g.n()).unwrap();
        assert_eq!(k, coloring.k);
        assert_eq!(assignment, coloring.assignment);
    }

    #[test]
    fn exact_output_format() {
        let c = Coloring {
            assignment: vec![1, 0],
            k: 2,
            algorithm: AlgorithmId::Ldf,
        };
        assert_eq!(write_coloring(&c), "c algorithm ldf\ns 2\nv 1 2\nv 2 1\n");
    }

    #[test]
    fn missing_and_duplicate_vertices() {
        assert!(matches!(
            parse_coloring("s 1\nv 1 1\n", 2),
            Err(ColorFileError::MissingVertex { v: 2 })
        ));
        assert!(matches!(
            parse_coloring("s 1\nv 1 1\nv 1 1\n", 1),
            Err(ColorFileError::DuplicateVertex { line: 3, v: 1 })
        ));
        assert!(matches!(
            parse_coloring("v 3 1\n", 2),
            Err(ColorFileError::VertexOutOfRange { line: 1, v: 3, n: 2 })
        ));
    }
}
