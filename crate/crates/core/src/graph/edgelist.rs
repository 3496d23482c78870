//! Plain edge-list text format: first line `n m`, then `m` lines `u v`.

use super::Graph;
use crate::{Error, Result};
use std::fmt::Write;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("header must be `n m`".into()))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("header must be `n m`".into()))?;
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines.enumerate() {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line {}", idx + 2)))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line {}", idx + 2)))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "expected {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::cycle(6);
        let s = format_edge_list(&g);
        assert_eq!(parse_edge_list(&s).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2 1\n0").is_err());
        assert!(parse_edge_list("2 2\n0 1").is_err());
    }
}
