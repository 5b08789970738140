//! Text formats, bit-exact on write.
//!
//! Graphs: a `p edge <n> <m>` header followed by `m` lines `e <u> <v>`
//! with 1-indexed endpoints, written in ascending lexicographic edge
//! order. Comment lines start with `c `. Colorings: one line
//! `v <vertex> <color>` per vertex, 1-indexed, ascending. Parsing is
//! strict; a malformed line reports its number.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

fn err(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError { line, reason: reason.into() }
}

fn parse_num(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| err(line, format!("{what} `{token}` is not a number")))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.starts_with("c ") || raw == "c" {
            continue;
        }
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match (header, fields.as_slice()) {
            (None, ["p", "edge", n, m]) => {
                header = Some((parse_num(line, n, "vertex count")?, parse_num(line, m, "edge count")?));
            }
            (None, _) => return Err(err(line, "expected `p edge <n> <m>` header")),
            (Some(_), ["p", ..]) => return Err(err(line, "duplicate header")),
            (Some((n, m)), ["e", u, v]) => {
                if edges.len() == m {
                    return Err(err(line, format!("more than {m} edge lines")));
                }
                let u = parse_num(line, u, "endpoint")?;
                let v = parse_num(line, v, "endpoint")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(line, format!("endpoint out of range 1..={n}")));
                }
                if u == v {
                    return Err(err(line, format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            (Some(_), _) => return Err(err(line, "expected `e <u> <v>`")),
        }
    }
    let last = text.lines().count() + 1;
    match header {
        None => Err(err(last, "missing `p edge` header")),
        Some((n, m)) => {
            if edges.len() != m {
                return Err(err(last, format!("header promised {m} edges, found {}", edges.len())));
            }
            Graph::build(n, edges).map_err(|e| err(last, e.to_string()))
        }
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<Coloring, ParseError> {
    let mut colors = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.as_slice() {
            ["v", vertex, color] => {
                let vertex = parse_num(line, vertex, "vertex")?;
                let color = parse_num(line, color, "color")?;
                if vertex != colors.len() + 1 {
                    return Err(err(
                        line,
                        format!("expected vertex {} in ascending order, got {vertex}", colors.len() + 1),
                    ));
                }
                if color == 0 {
                    return Err(err(line, "colors must be positive"));
                }
                colors.push(color);
            }
            _ => return Err(err(line, "expected `v <vertex> <color>`")),
        }
    }
    Ok(Coloring::new(colors).expect("zero colors rejected above"))
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (v, &color) in c.as_slice().iter().enumerate() {
        writeln!(out, "v {} {}", v + 1, color).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_k2() {
        let g = parse_graph("p edge 2 1\ne 1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn parse_rejects_out_of_range_with_line() {
        let e = parse_graph("p edge 2 1\ne 1 3\n").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn parse_rejects_wrong_edge_count() {
        assert!(parse_graph("p edge 3 2\ne 1 2\n").is_err());
        assert!(parse_graph("p edge 3 1\ne 1 2\ne 2 3\n").is_err());
    }

    #[test]
    fn parse_skips_comments() {
        let g = parse_graph("c a triangle\np edge 3 3\ne 1 2\nc interior\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn graph_round_trip_canonicalizes() {
        // duplicate edge collapses, output is sorted
        let text = "p edge 3 3\ne 2 3\ne 1 2\ne 2 1\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(write_graph(&g), "p edge 3 2\ne 1 2\ne 2 3\n");
        let again = parse_graph(&write_graph(&g)).unwrap();
        assert_eq!(write_graph(&again), write_graph(&g));
    }

    #[test]
    fn coloring_round_trip() {
        let c = Coloring::new(vec![2, 1, 7]).unwrap();
        let text = write_coloring(&c);
        assert_eq!(text, "v 1 2\nv 2 1\nv 3 7\n");
        assert_eq!(parse_coloring(&text).unwrap(), c);
    }

    #[test]
    fn coloring_rejects_gaps_and_zero() {
        assert_eq!(parse_coloring("v 2 1\n").unwrap_err().line, 1);
        assert_eq!(parse_coloring("v 1 1\nv 3 1\n").unwrap_err().line, 2);
        assert_eq!(parse_coloring("v 1 0\n").unwrap_err().line, 1);
    }
}
