//! Text and JSON formats for graphs.
//!
//! The text format is a header line `n m` followed by `m` lines `u v`.
//! Blank lines and lines starting with `#` are ignored. The JSON format is
//! `{"n": 4, "edges": [[0,1],[1,2]]}`.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_graph_text(s: &str) -> Result<Graph> {
    let mut lines = s
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing header line".into()))?;
    let (n, m) = two_numbers(header)?;
    let mut edges = Vec::with_capacity(m);
    for line in lines.by_ref().take(m) {
        edges.push(two_numbers(line)?);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("trailing content: `{extra}`")));
    }
    Graph::new(n, edges)
}

fn two_numbers(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::Parse(format!("expected two integers, got `{line}`"))),
    }
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses either format, choosing JSON when the input starts with `{`.
pub fn parse_graph(s: &str) -> Result<Graph> {
    if s.trim_start().starts_with('{') {
        Ok(serde_json::from_str(s)?)
    } else {
        parse_graph_text(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let g = Graph::new(4, [(0, 1), (2, 3), (1, 2)]).unwrap();
        let t = graph_to_text(&g);
        assert_eq!(t, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_graph_text(&t).unwrap(), g);
    }

    #[test]
    fn text_errors() {
        assert!(parse_graph_text("").is_err());
        assert!(parse_graph_text("3 2\n0 1\n").is_err());
        assert!(parse_graph_text("3 1\n0 1\n1 2\n").is_err());
        assert!(parse_graph_text("3 1\n0 0\n").is_err());
        assert!(parse_graph_text("3 1\n0 x\n").is_err());
    }

    #[test]
    fn detects_json() {
        let g = parse_graph(r#" {"n":3,"edges":[[0,2]]}"#).unwrap();
        assert!(g.has_edge(2, 0));
        let g = parse_graph("# comment\n2 1\n0 1\n").unwrap();
        assert_eq!(g.size(), 1);
    }
}
