//! Plain-text graph format.
//!
//! ```text
//! # comment
//! n m directed edge        or   n m directed vertex
//! v weight                 (vertex mode: n lines, any order)
//! tail head [weight]       (m lines; weight only in edge mode)
//! ```
//!
//! Weights are decimals (`2.5`) or rationals (`5/2`).

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{build_graph, VertexWeightedDigraph, WeightedDigraph};
use crate::rational::{common_denominator, format_rational, parse_rational, to_units, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedGraph {
    Edge(WeightedDigraph),
    Vertex(VertexWeightedDigraph),
}

impl ParsedGraph {
    pub fn vertex_count(&self) -> usize {
        match self {
            ParsedGraph::Edge(g) => g.vertex_count(),
            ParsedGraph::Vertex(g) => g.vertex_count(),
        }
    }

    /// Canonical text form.
    pub fn emit(&self) -> String {
        match self {
            ParsedGraph::Edge(g) => emit_edge_graph(g),
            ParsedGraph::Vertex(g) => emit_vertex_graph(g),
        }
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| err(line, format!("bad {what} `{tok}`")))
}

fn weight(tok: Option<&str>, line: usize) -> Result<Rational> {
    let tok = tok.ok_or_else(|| err(line, "missing weight"))?;
    let w = parse_rational(tok).ok_or_else(|| err(line, format!("bad weight `{tok}`")))?;
    if *w.numer() == 0 {
        return Err(err(line, "weight must be positive"));
    }
    Ok(w)
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
    let mut tok = header.split_whitespace();
    let n: usize = field(tok.next(), hl, "vertex count")?;
    let m: usize = field(tok.next(), hl, "edge count")?;
    if tok.next() != Some("directed") {
        return Err(err(hl, "expected `directed`"));
    }
    let vertex_mode = match tok.next() {
        Some("edge") => false,
        Some("vertex") => true,
        _ => return Err(err(hl, "expected `edge` or `vertex`")),
    };
    if tok.next().is_some() {
        return Err(err(hl, "trailing tokens in header"));
    }
    let mut next_line = |what: &str| lines.next().ok_or_else(|| err(text.lines().count() + 1, format!("missing {what}")));

    let mut vertex_weights: Vec<Option<Rational>> = vec![None; if vertex_mode { n } else { 0 }];
    if vertex_mode {
        for _ in 0..n {
            let (ln, l) = next_line("vertex weight line")?;
            let mut tok = l.split_whitespace();
            let v: usize = field(tok.next(), ln, "vertex id")?;
            let w = weight(tok.next(), ln)?;
            if tok.next().is_some() {
                return Err(err(ln, "trailing tokens"));
            }
            if v >= n {
                return Err(err(ln, format!("vertex {v} out of range")));
            }
            if vertex_weights[v].replace(w).is_some() {
                return Err(err(ln, format!("duplicate weight for vertex {v}")));
            }
        }
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, l) = next_line("edge line")?;
        let mut tok = l.split_whitespace();
        let u: usize = field(tok.next(), ln, "tail")?;
        let v: usize = field(tok.next(), ln, "head")?;
        if u >= n || v >= n {
            return Err(err(ln, "endpoint out of range"));
        }
        let w = if vertex_mode { Rational::from_integer(1) } else { weight(tok.next(), ln)? };
        if tok.next().is_some() {
            return Err(err(ln, "trailing tokens"));
        }
        edges.push((u, v, w));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(err(ln, "more lines than the header announces"));
    }
    if vertex_mode {
        let ws: Vec<Rational> = vertex_weights.into_iter().map(|w| w.expect("all n weights read")).collect();
        let den = common_denominator(&ws)?;
        let units = ws.iter().map(|w| to_units(w, den)).collect::<Result<Vec<_>>>()?;
        let g = VertexWeightedDigraph::with_denominator(units, edges.iter().map(|&(u, v, _)| (u, v)), den)?;
        Ok(ParsedGraph::Vertex(g))
    } else {
        Ok(ParsedGraph::Edge(build_graph(n, &edges)?))
    }
}

pub fn emit_edge_graph(g: &WeightedDigraph) -> String {
    let mut out = format!("{} {} directed edge\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.tail, e.head, format_rational(&g.to_rational(e.weight))).unwrap();
    }
    out
}

pub fn emit_vertex_graph(g: &VertexWeightedDigraph) -> String {
    let mut out = format!("{} {} directed vertex\n", g.vertex_count(), g.edge_count());
    for (v, &w) in g.weights().iter().enumerate() {
        writeln!(out, "{v} {}", format_rational(&g.to_rational(w))).unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_vertex_edge_file() {
        let ParsedGraph::Edge(g) = parse_graph("2 1 directed edge\n0 1 5\n").unwrap() else { panic!() };
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges()[0].weight, 5);
    }

    #[test]
    fn vertex_path_with_comments() {
        let text = "# path\n3 2 directed vertex\n2 1\n0 1 # root\n1 3\n0 1\n1 2\n";
        let ParsedGraph::Vertex(g) = parse_graph(text).unwrap() else { panic!() };
        assert_eq!(g.weights(), &[1, 3, 1]);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn rationals_share_a_denominator() {
        let ParsedGraph::Edge(g) = parse_graph("3 2 directed edge\n0 1 1/4\n1 2 0.5\n").unwrap() else { panic!() };
        assert_eq!(g.denominator(), 4);
        assert_eq!(g.edges()[1].weight, 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = [
            ("2 1 directed edge\n0 1\n", 2),
            ("2 1 directed edge\n0 5 1\n", 2),
            ("2 1 directed vertex\n0 1\n0 2\n0 1\n", 3),
            ("2 1 undirected edge\n0 1 1\n", 1),
            ("2 1 directed edge\n\n0 1 0\n", 3),
            ("2 1 directed edge\n0 1 1\n1 0 1\n", 3),
        ];
        for (text, line) in bad {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn emit_is_idempotent() {
        for text in ["3 3 directed edge\n0 1 2/4\n1 2 3\n2 0 0.25\n", "3 2 directed vertex\n1 2.5\n0 1\n2 3\n0 1\n1 2\n"] {
            let once = parse_graph(text).unwrap().emit();
            let twice = parse_graph(&once).unwrap().emit();
            assert_eq!(once, twice);
            assert_eq!(parse_graph(&once).unwrap(), parse_graph(text).unwrap());
        }
    }
}
