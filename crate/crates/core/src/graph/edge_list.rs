use super::Graph;
use crate::error::{Error, Result};

/// Parses `n` followed by whitespace-separated 0-based `u v` pairs.
///
/// Repeated edges are accepted and stored once. Loops are rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text
        .lines()
        .enumerate()
        .flat_map(|(i, l)| l.split_whitespace().map(move |t| (i + 1, t)));
    let err = |line: usize, reason: String| Error::EdgeList { line, reason };
    let number = |(line, tok): (usize, &str)| {
        tok.parse::<usize>()
            .map_err(|_| err(line, format!("expected a vertex number, found {tok:?}")))
    };

    let first = tokens.next().ok_or_else(|| err(1, "missing vertex count".into()))?;
    let n = number(first)?;
    let mut g = Graph::empty(n);
    while let Some(a) = tokens.next() {
        let line = a.0;
        let u = number(a)?;
        let v = number(tokens.next().ok_or_else(|| err(line, "dangling endpoint".into()))?)?;
        g.add_edge(u, v).map_err(|e| err(line, e.to_string()))?;
    }
    Ok(g)
}
