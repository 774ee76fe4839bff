//! Plain-text edge lists.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v      (m lines, 0 <= u < v < n)
//! ```

use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};
use crate::graph::Graph;

fn err(line: usize, token: &str, message: &str) -> ParseError {
    ParseError::EdgeList {
        line,
        token: token.to_string(),
        message: message.to_string(),
    }
}

fn parse_usize(line: usize, token: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| err(line, token, "expected a non-negative integer"))
}

/// Parses an edge list. Blank lines and lines starting with `#` are skipped.
/// Endpoints outside `0..n` are reported as [`GraphError::VertexOutOfRange`].
pub fn read_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(0, "", "missing `n m` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(err(hline, header, "header must be `n m`"));
    }
    let n = parse_usize(hline, fields[0])?;
    let m = parse_usize(hline, fields[1])?;

    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(lineno, line, "edge line must be `u v`"));
        }
        let u = parse_usize(lineno, fields[0])?;
        let v = parse_usize(lineno, fields[1])?;
        if edges.len() == m {
            return Err(err(
                lineno,
                line,
                "more edge lines than the header declares",
            ));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(
            hline,
            header,
            &format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Graph::from_edges(n, &edges).map_err(|e| match e {
        GraphError::VertexOutOfRange { .. } => ParseError::Graph(e),
        GraphError::SelfLoop(v) => err(0, &format!("{v} {v}"), "self-loop"),
        GraphError::DuplicateEdge(u, v) => err(0, &format!("{u} {v}"), "duplicate edge"),
    })
}

/// Writes the canonical form: header, then edges with `u < v` in
/// lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_with_comments_and_blank_lines() {
        let g = read_edge_list("# a path\n4 3\n0 1\n\n1 2\n# tail\n2 3\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn writes_canonical_form() {
        let g = Graph::from_edges(3, &[(2, 1), (0, 1)]).unwrap();
        assert_eq!(write_edge_list(&g), "3 2\n0 1\n1 2\n");
        assert_eq!(write_edge_list(&Graph::empty(0)), "0 0\n");
    }

    #[test]
    fn reports_offending_tokens() {
        let cases = [
            ("", ""),
            ("3\n", "3"),
            ("3 x\n", "x"),
            ("3 1\n0 1 2\n", "0 1 2"),
            ("3 1\n0 -1\n", "-1"),
            ("3 2\n0 1\n", "3 2"),
            ("3 1\n0 1\n1 2\n", "1 2"),
            ("3 1\n1 1\n", "1 1"),
            ("3 2\n0 1\n1 0\n", "0 1"),
        ];
        for (text, token) in cases {
            match read_edge_list(text) {
                Err(ParseError::EdgeList { token: t, .. }) => assert_eq!(t, token, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn out_of_range_is_a_range_error() {
        let e = read_edge_list("3 1\n0 3\n").unwrap_err();
        assert!(e.is_range_error());
        assert!(e.to_string().contains('3'));
    }
}
