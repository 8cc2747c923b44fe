//! Plain-text edge lists.
//!
//! The format is line-oriented: `#` starts a comment line, blank lines are
//! skipped, the first data line is `n m`, and exactly `m` data lines `u v`
//! follow with `0 <= u, v < n`. The declared edge count must match the real
//! one — duplicate or mirrored edges are rejected rather than collapsed.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn two_tokens(lineno: usize, line: &str, what: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize> {
        tok.ok_or_else(|| Error::parse(format!("line {lineno}: expected two {what} fields")))?
            .parse::<usize>()
            .map_err(|_| Error::parse(format!("line {lineno}: not a non-negative integer")))
    };
    let a = parse(it.next())?;
    let b = parse(it.next())?;
    if it.next().is_some() {
        return Err(Error::parse(format!(
            "line {lineno}: trailing tokens after {what}"
        )));
    }
    Ok((a, b))
}

/// Parses the edge-list format described in the module docs.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse("missing `n m` header line"))?;
    let (n, m) = two_tokens(header_no, header, "header")?;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(m);
    for _ in 0..m {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| Error::parse(format!("expected {m} edge lines, found {}", edges.len())))?;
        let (u, v) = two_tokens(lineno, line, "edge")?;
        let into = |x: usize| {
            Vertex::try_from(x)
                .map_err(|_| Error::parse(format!("line {lineno}: vertex id {x} too large")))
        };
        edges.push((into(u)?, into(v)?));
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::parse(format!(
            "line {lineno}: data after the declared {m} edges"
        )));
    }
    let g = Graph::new(n, &edges)?;
    if g.m() != m {
        return Err(Error::parse(format!(
            "declared {m} edges but only {} are distinct",
            g.m()
        )));
    }
    Ok(g)
}

/// Renders a graph in the edge-list format, one optional comment line per
/// entry of `comments` (newlines inside a comment are not allowed).
pub fn write_edge_list(g: &Graph, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        debug_assert!(!c.contains('\n'), "comments must be single lines");
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn parse_accepts_comments_and_blank_lines() {
        let text = "# a triangle\n\n3 3\n0 1\n# middle comment\n1 2\n\n0 2\n# trailing\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn round_trip_preserves_the_graph() {
        for g in [
            generators::path(6).unwrap(),
            generators::cycle(5).unwrap(),
            generators::star_gadget(2).unwrap(),
            generators::random_connected(10, 0.4, 11).unwrap(),
        ] {
            let text = write_edge_list(&g, &["generated for a round-trip test"]);
            let back = parse_edge_list(&text).unwrap();
            assert_eq!(back.n(), g.n());
            assert_eq!(
                back.edges().collect::<Vec<_>>(),
                g.edges().collect::<Vec<_>>()
            );
            // Writing again gives byte-identical output (modulo comments).
            assert_eq!(write_edge_list(&back, &[]), write_edge_list(&g, &[]));
        }
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("# only comments\n").is_err());
        assert!(parse_edge_list("3\n").is_err());
        assert!(parse_edge_list("3 two\n").is_err());
        assert!(parse_edge_list("3 1\n0 1 9\n").is_err());
        // Too few edge lines.
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        // Extra data after the declared edges.
        assert!(parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        // Duplicate and mirrored duplicate edges.
        assert!(parse_edge_list("3 2\n0 1\n0 1\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n1 0\n").is_err());
        // Endpoint out of range and self-loop.
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
        assert!(parse_edge_list("3 1\n1 1\n").is_err());
    }

    #[test]
    fn header_arity_is_strict() {
        assert!(parse_edge_list("3 3 4\n0 1\n1 2\n0 2\n").is_err());
    }
}
