//! Text formats.
//!
//! Graph: first line `n m`, then `m` lines `a b` with 0-based ids.
//! Orientation: `m` lines `a b D`, `D` is `>` for `a → b` and `<` for
//! `b → a`, line `k` describing edge `k`. `#` starts a comment anywhere.

use std::fmt::Write as _;

use crate::graph::{EdgeId, GraphError, MultiGraph};
use crate::mixed::{MixedOrientation, Stage};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn numbers<const K: usize>(line: usize, s: &str) -> Result<[usize; K], ParseError> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    if parts.len() != K {
        return Err(ParseError::Syntax { line, msg: format!("expected {K} fields, got {}", parts.len()) });
    }
    let mut out = [0; K];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p.parse().map_err(|_| ParseError::Syntax { line, msg: format!("bad integer {p:?}") })?;
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<MultiGraph, ParseError> {
    let mut lines = content_lines(text);
    let Some((l0, header)) = lines.next() else {
        return Err(ParseError::Syntax { line: 1, msg: "missing header".into() });
    };
    let [n, m] = numbers::<2>(l0, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, s) in lines {
        let [a, b] = numbers::<2>(line, s)?;
        edges.push((a, b));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount { expected: m, found: edges.len() });
    }
    Ok(MultiGraph::new(n, &edges)?)
}

pub fn print_graph(g: &MultiGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (a, b) in g.edge_list() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

/// Reads an orientation of `g`. Endpoints must repeat the edge's own, in
/// either order.
pub fn parse_orientation<'g>(g: &'g MultiGraph, text: &str) -> Result<MixedOrientation<'g>, ParseError> {
    let mut o = MixedOrientation::new(g);
    let mut count = 0;
    for (line, s) in content_lines(text) {
        let parts: Vec<&str> = s.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(ParseError::Syntax { line, msg: "expected `a b D`".into() });
        }
        let [a, b] = numbers::<2>(line, &parts[..2].join(" "))?;
        if count >= g.edge_count() {
            count += 1;
            continue;
        }
        let e = EdgeId(count);
        let (x, y) = g.endpoints(e);
        let forward = match parts[2] {
            ">" => true,
            "<" => false,
            d => return Err(ParseError::Syntax { line, msg: format!("bad direction {d:?}") }),
        };
        let (tail, head) = if forward { (a, b) } else { (b, a) };
        if !((a, b) == (x.0, y.0) || (a, b) == (y.0, x.0)) {
            return Err(ParseError::Syntax { line, msg: format!("edge {count} is {x} {y}, not {a} {b}") });
        }
        let tail = if tail == x.0 { x } else { y };
        let head = if head == x.0 { x } else { y };
        o.orient(e, tail, head, Stage::Input).expect("each edge set once");
        count += 1;
    }
    if count != g.edge_count() {
        return Err(ParseError::EdgeCount { expected: g.edge_count(), found: count });
    }
    Ok(o)
}

/// Undirected edges are written as `?`, which [`parse_orientation`] rejects.
pub fn print_orientation(o: &MixedOrientation<'_>) -> String {
    let g = o.graph();
    let mut out = String::new();
    for e in g.edge_ids() {
        let (a, b) = g.endpoints(e);
        let d = match o.arc(e) {
            Some((t, _)) if t == a => ">",
            Some(_) => "<",
            None => "?",
        };
        let _ = writeln!(out, "{} {} {d}", a.0, b.0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    #[test]
    fn graph_round_trip() {
        let text = "# square\n4 5\n0 1\n1 2 # side\n2 3\n3 0\n0 1\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(parse_graph(&print_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors() {
        assert!(matches!(parse_graph("3 2\n0 1\n"), Err(ParseError::EdgeCount { .. })));
        assert!(matches!(parse_graph("3 1\n0 x\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse_graph("3 1\n1 1\n"), Err(ParseError::Graph(_))));
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn orientation_round_trip() {
        let g = parse_graph("3 3\n0 1\n1 2\n2 0\n").unwrap();
        let o = parse_orientation(&g, "0 1 >\n1 2 <\n0 2 >\n").unwrap();
        assert_eq!(o.arc(EdgeId(1)), Some((VertexId(2), VertexId(1))));
        assert_eq!(o.arc(EdgeId(2)), Some((VertexId(0), VertexId(2))));
        let again = parse_orientation(&g, &print_orientation(&o)).unwrap();
        assert_eq!(again.directions(), o.directions());
        assert!(parse_orientation(&g, "0 1 >\n1 2 <\n").is_err());
        assert!(parse_orientation(&g, "0 1 >\n1 2 <\n2 0 >\n0 1 >\n").is_err());
        assert!(parse_orientation(&g, "0 1 >\n0 2 <\n2 0 >\n").is_err());
    }
}
