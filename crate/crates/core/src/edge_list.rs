//! Plain-text edge lists: a line `n m`, then `m` lines `u v` (0-based).

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Input("empty edge list".into()))?;
    let [n, m] = parse_pair(lineno, header)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let [u, v] = parse_pair(lineno, line)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Input(format!(
            "header announces {m} edges but {} were listed",
            edges.len()
        )));
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(lineno: usize, line: &str) -> Result<[usize; 2]> {
    let bad = || Error::Input(format!("line {lineno}: expected two non-negative integers, got {line:?}"));
    let mut it = line.split_whitespace();
    let a = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    let b = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok([a, b])
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let g = parse_edge_list("3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn tolerates_blank_lines_and_tabs() {
        let g = parse_edge_list("\n2 1\n\n0\t1\n").unwrap();
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 5\n").is_err());
        assert!(parse_edge_list("").is_err());
    }
}
