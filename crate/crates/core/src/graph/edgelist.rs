//! Plain edge-list text: a header line `n m`, then `m` lines `u v` with
//! `0 ≤ u < v < n`. Blank lines and `#` comments are skipped.

use std::fmt::Write;

use thiserror::Error;

use super::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("graph order {0} exceeds the limit of {MAX_ORDER} vertices")]
    TooLarge(usize),
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), EdgeListError> {
    let malformed = |reason: &str| EdgeListError::Malformed {
        line: line_no,
        reason: reason.to_string(),
    };
    let mut it = line.split_whitespace();
    let a = it.next().ok_or_else(|| malformed("expected two integers"))?;
    let b = it.next().ok_or_else(|| malformed("expected two integers"))?;
    if it.next().is_some() {
        return Err(malformed("trailing tokens"));
    }
    let a = a.parse().map_err(|_| malformed("not a non-negative integer"))?;
    let b = b.parse().map_err(|_| malformed("not a non-negative integer"))?;
    Ok((a, b))
}

pub fn from_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = parse_pair(hline, header)?;
    if n > MAX_ORDER {
        return Err(EdgeListError::TooLarge(n));
    }
    let mut g = Graph::empty(n).map_err(|_| EdgeListError::TooLarge(n))?;
    let mut found = 0;
    for (line, text) in lines {
        let (u, v) = parse_pair(line, text)?;
        if !(u < v && v < n) {
            return Err(EdgeListError::Malformed {
                line,
                reason: format!("edge {u} {v} violates 0 <= u < v < {n}"),
            });
        }
        if g.has_edge(u, v) {
            return Err(EdgeListError::Malformed {
                line,
                reason: format!("duplicate edge {u} {v}"),
            });
        }
        g.add_edge(u, v).map_err(|e: GraphError| EdgeListError::Malformed {
            line,
            reason: e.to_string(),
        })?;
        found += 1;
    }
    if found != m {
        return Err(EdgeListError::EdgeCount { expected: m, found });
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
