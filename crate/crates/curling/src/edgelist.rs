//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n 4
//! 0 1
//! 1 2
//! ```
//!
//! The first non-comment line gives the order. Each following line holds two
//! whitespace-separated 0-based vertex ids. Blank lines and lines whose first
//! non-blank character is `#` are skipped.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use curling_core::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("missing `n <order>` header")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn malformed(line: usize, message: impl Into<String>) -> EdgeListError {
    EdgeListError::Malformed {
        line,
        message: message.into(),
    }
}

fn parse_id(token: &str, line: usize) -> Result<usize, EdgeListError> {
    token
        .parse()
        .map_err(|_| malformed(line, format!("`{token}` is not a vertex id")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let order = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", order] => parse_id(order, header_line)?,
        _ => return Err(malformed(header_line, "expected `n <order>`")),
    };

    let mut edges = Vec::new();
    for (line, content) in lines {
        match content.split_whitespace().collect::<Vec<_>>().as_slice() {
            [u, v] => edges.push((parse_id(u, line)?, parse_id(v, line)?)),
            _ => return Err(malformed(line, "expected `<u> <v>`")),
        }
    }
    Ok(Graph::from_edge_list(order, &edges)?)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph, EdgeListError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| EdgeListError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_edge_list(&text)
}

/// Serializes `g` in the format read by [`parse_edge_list`], edges in
/// lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use curling_core::Family;

    #[test]
    fn parses_with_comments_and_blanks() {
        let g = parse_edge_list("# path\n\nn 4\n0 1\n  # mid\n1 2\n2   3\n").unwrap();
        assert_eq!(g, Family::Path(4).generate().unwrap());
    }

    #[test]
    fn isolated_vertices() {
        let g = parse_edge_list("n 3\n").unwrap();
        assert_eq!((g.order(), g.size()), (3, 0));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_edge_list("# only\n"),
            Err(EdgeListError::MissingHeader)
        ));
        assert!(matches!(
            parse_edge_list("4\n0 1\n"),
            Err(EdgeListError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 3\n0 1 2\n"),
            Err(EdgeListError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 3\n0 x\n"),
            Err(EdgeListError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 3\n0 3\n"),
            Err(EdgeListError::Graph(GraphError::IdOutOfRange {
                id: 3,
                order: 3
            }))
        ));
        assert!(matches!(
            parse_edge_list("n 3\n1 1\n"),
            Err(EdgeListError::Graph(GraphError::SelfLoop(1)))
        ));
        assert!(matches!(
            parse_edge_list("n 0\n"),
            Err(EdgeListError::Graph(GraphError::ZeroOrder))
        ));
    }

    #[test]
    fn round_trip() {
        let g = Family::CompleteBipartite(2, 3).generate().unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }
}
