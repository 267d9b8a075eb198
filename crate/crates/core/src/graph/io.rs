//! Graph text format and DOT export.
//!
//! The text format is a header line `n m` followed by `m` lines `u v` with
//! 0-based endpoints. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write;

use super::{Graph, GraphError};

pub fn parse_graph_text(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| GraphError::Parse("missing header".into()))?;
    let (n, m) = parse_pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for line in lines.by_ref().take(m) {
        edges.push(parse_pair(line)?);
    }
    if edges.len() != m {
        return Err(GraphError::Parse(format!("expected {m} edges, found {}", edges.len())));
    }
    if let Some(extra) = lines.next() {
        return Err(GraphError::Parse(format!("unexpected trailing line {extra:?}")));
    }
    Graph::from_edges(n, &edges)
}

fn parse_pair(line: &str) -> Result<(usize, usize), GraphError> {
    let bad = || GraphError::Parse(format!("expected two integers, got {line:?}"));
    let mut it = line.split_whitespace();
    let a = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let b = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn to_graph_text(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// DOT rendering; `labels`, when given, names each vertex.
pub fn to_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        match labels {
            Some(l) => {
                let _ = writeln!(s, "  {v} [label=\"{}\"];", l[v]);
            }
            None => {
                let _ = writeln!(s, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    #[test]
    fn text_round_trip() {
        let g = make_family(Family::Fan(5)).unwrap();
        let text = to_graph_text(&g);
        assert!(text.starts_with("6 9\n"));
        assert_eq!(parse_graph_text(&text).unwrap(), g);
    }

    #[test]
    fn text_errors() {
        assert!(parse_graph_text("").is_err());
        assert!(parse_graph_text("3 2\n0 1\n").is_err());
        assert!(parse_graph_text("3 1\n0 1\n").is_err());
        assert!(parse_graph_text("2 1\n0 x\n").is_err());
        assert!(parse_graph_text("2 1\n0 1\n1 0\n").is_err());
        assert!(parse_graph_text("# comment\n2 1\n\n0 1\n").is_ok());
    }

    #[test]
    fn dot_lists_edges() {
        let g = make_family(Family::Path(3)).unwrap();
        let dot = to_dot(&g, None);
        assert!(dot.contains("0 -- 1;") && dot.contains("1 -- 2;"));
    }
}
