//! DIMACS `.col` reading and writing.
//!
//! Accepted input: `c` comment lines, one `p edge <n> <m>` (or `p col`)
//! header, and 1-indexed `e <u> <v>` lines. Output is canonical: header,
//! then edges with u < v in lexicographic order.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DimacsError {
    #[error("line {line}: edge line before the `p` header")]
    EdgeBeforeHeader { line: usize },
    #[error("line {line}: duplicate `p` header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: malformed `p` line, expected `p edge <n> <m>`")]
    BadHeader { line: usize },
    #[error("line {line}: malformed `e` line, expected `e <u> <v>`")]
    BadEdge { line: usize },
    #[error("line {line}: endpoint {v} outside 1..={n}")]
    EndpointOutOfRange { line: usize, v: usize, n: usize },
    #[error("line {line}: unrecognized leading token `{token}`")]
    UnknownToken { line: usize, token: String },
    #[error("missing `p edge <n> <m>` header")]
    MissingHeader,
}

/// A parsed `.col` file: the graph plus any non-fatal warnings
/// (currently only a declared-vs-actual edge-count mismatch).
#[derive(Debug)]
pub struct ParsedCol {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

pub fn parse_dimacs(input: &str) -> Result<ParsedCol, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match tokens.next().unwrap() {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(DimacsError::DuplicateHeader { line });
                }
                let format = tokens.next();
                if !matches!(format, Some("edge") | Some("col")) {
                    return Err(DimacsError::BadHeader { line });
                }
                let n = parse_usize(tokens.next()).ok_or(DimacsError::BadHeader { line })?;
                let m = parse_usize(tokens.next()).ok_or(DimacsError::BadHeader { line })?;
                if tokens.next().is_some() {
                    return Err(DimacsError::BadHeader { line });
                }
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or(DimacsError::EdgeBeforeHeader { line })?;
                let u = parse_usize(tokens.next()).ok_or(DimacsError::BadEdge { line })?;
                let v = parse_usize(tokens.next()).ok_or(DimacsError::BadEdge { line })?;
                if tokens.next().is_some() {
                    return Err(DimacsError::BadEdge { line });
                }
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(DimacsError::EndpointOutOfRange { line, v: w, n });
                    }
                }
                edges.push((u - 1, v - 1));
            }
            other => {
                return Err(DimacsError::UnknownToken {
                    line,
                    token: other.to_string(),
                })
            }
        }
    }

    let (n, declared_m) = header.ok_or(DimacsError::MissingHeader)?;
    // Endpoints were range-checked above, so construction cannot fail.
    let graph = Graph::from_edge_list(n, &edges).expect("edges pre-validated");
    let mut warnings = Vec::new();
    if graph.m() != declared_m {
        warnings.push(format!(
            "header declares {} edges but {} distinct edges were read",
            declared_m,
            graph.m()
        ));
    }
    Ok(ParsedCol { graph, warnings })
}

fn parse_usize(tok: Option<&str>) -> Option<usize> {
    tok?.parse().ok()
}

/// Canonical `.col` text for a graph; `parse_dimacs(write_dimacs(g))`
/// reproduces `g` exactly.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("p edge {} {}\n", g.n(), g.m()));
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}
