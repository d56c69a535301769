//! Text formats: edge lists, DIMACS, and vertex labelings.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based
//! vertices. DIMACS: `c` comments, one `p edge n m` line, and `m` lines
//! `e u v` with 1-based vertices. Labelings: one `v label` line per vertex,
//! sorted by vertex. Lines starting with `#` are comments in the edge-list
//! and labeling formats; blank lines are skipped everywhere.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{ParseError, ParseErrorKind};
use crate::graph::Graph;
use crate::labeling::PartialLabeling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edge-list" => Ok(GraphFormat::EdgeList),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => Err(format!("unknown graph format {other:?} (edgelist|dimacs)")),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edgelist(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => to_edgelist(g),
        GraphFormat::Dimacs => to_dimacs(g),
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines<'a>(
    text: &'a str,
    comment: impl Fn(&str) -> bool + 'a,
) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !comment(l))
}

fn parse_pair(fields: &[&str]) -> Option<(usize, usize)> {
    match fields {
        [a, b] => Some((a.parse().ok()?, b.parse().ok()?)),
        _ => None,
    }
}

fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text, |l| l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, ParseErrorKind::MissingHeader))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = parse_pair(&fields)
        .ok_or_else(|| ParseError::new(hline, ParseErrorKind::MalformedHeader(header.into())))?;
    let mut g = Graph::empty(n).map_err(|e| ParseError::new(hline, e))?;

    let mut found = 0;
    let mut last = hline;
    for (lineno, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let (u, v) = parse_pair(&fields)
            .ok_or_else(|| ParseError::new(lineno, ParseErrorKind::MalformedLine(line.into())))?;
        g.add_edge(u, v).map_err(|e| ParseError::new(lineno, e))?;
        found += 1;
        last = lineno;
    }
    if found != m {
        return Err(ParseError::new(
            last,
            ParseErrorKind::EdgeCountMismatch { expected: m, found },
        ));
    }
    Ok(g)
}

fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut graph: Option<(Graph, usize)> = None;
    let mut found = 0;
    let mut last = 1;
    for (lineno, line) in content_lines(text, |l| l == "c" || l.starts_with("c ") || l.starts_with("c\t")) {
        last = lineno;
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if graph.is_some() {
                    return Err(ParseError::new(
                        lineno,
                        ParseErrorKind::MalformedHeader(line.into()),
                    ));
                }
                let (n, m) = match fields.as_slice() {
                    ["p", "edge" | "col", n, m] => n.parse().ok().zip(m.parse().ok()),
                    _ => None,
                }
                .ok_or_else(|| {
                    ParseError::new(lineno, ParseErrorKind::MalformedHeader(line.into()))
                })?;
                let g = Graph::empty(n).map_err(|e| ParseError::new(lineno, e))?;
                graph = Some((g, m));
            }
            "e" => {
                let (g, _) = graph
                    .as_mut()
                    .ok_or_else(|| ParseError::new(lineno, ParseErrorKind::MissingHeader))?;
                let (u, v) = parse_pair(&fields[1..])
                    .filter(|&(u, v)| u >= 1 && v >= 1)
                    .ok_or_else(|| {
                        ParseError::new(lineno, ParseErrorKind::MalformedLine(line.into()))
                    })?;
                g.add_edge(u - 1, v - 1)
                    .map_err(|e| ParseError::new(lineno, e))?;
                found += 1;
            }
            _ => {
                return Err(ParseError::new(
                    lineno,
                    ParseErrorKind::MalformedLine(line.into()),
                ))
            }
        }
    }
    let (g, m) = graph.ok_or_else(|| ParseError::new(last, ParseErrorKind::MissingHeader))?;
    if found != m {
        return Err(ParseError::new(
            last,
            ParseErrorKind::EdgeCountMismatch { expected: m, found },
        ));
    }
    Ok(g)
}

pub fn to_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_labeling(text: &str) -> Result<PartialLabeling, ParseError> {
    let mut c = PartialLabeling::new();
    for (lineno, line) in content_lines(text, |l| l.starts_with('#')) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parsed = match fields.as_slice() {
            [v, l] => v.parse::<usize>().ok().zip(l.parse::<u32>().ok()),
            _ => None,
        };
        let (v, label) = parsed
            .ok_or_else(|| ParseError::new(lineno, ParseErrorKind::MalformedLine(line.into())))?;
        if c.get(v).is_some() {
            return Err(ParseError::new(lineno, ParseErrorKind::DuplicateVertex(v)));
        }
        c.set(v, label);
    }
    Ok(c)
}

pub fn write_labeling(c: &PartialLabeling) -> String {
    let mut out = String::new();
    for (v, label) in c.iter() {
        let _ = writeln!(out, "{v} {label}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::GraphError;

    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn edgelist_p3() {
        let g = parse_graph("3 2\n0 1\n1 2\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g, p3());
    }

    #[test]
    fn edgelist_comments_and_blank_lines() {
        let g = parse_graph("# a path\n3 2\n\n0 1\n# middle\n1 2\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g, p3());
    }

    #[test]
    fn dimacs_p3() {
        let g = parse_graph("c P3\np edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::Dimacs).unwrap();
        assert_eq!(g, p3());
    }

    #[test]
    fn self_loop_rejected_with_line() {
        let err = parse_graph("2 1\n0 0\n", GraphFormat::EdgeList).unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ParseErrorKind::Graph(GraphError::SelfLoop(0)));
    }

    #[test]
    fn duplicate_edge_rejected() {
        let err = parse_graph("3 2\n0 1\n1 0\n", GraphFormat::EdgeList).unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.kind, ParseErrorKind::Graph(GraphError::DuplicateEdge(0, 1)));
        let err = parse_graph("p edge 2 2\ne 1 2\ne 1 2\n", GraphFormat::Dimacs).unwrap_err();
        assert_eq!(err.line, 3);
    }

    #[test]
    fn out_of_range_rejected() {
        let err = parse_graph("2 1\n0 2\n", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Graph(GraphError::VertexOutOfRange { .. })));
        let err = parse_graph("p edge 2 1\ne 0 1\n", GraphFormat::Dimacs).unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::MalformedLine(_)));
        let err = parse_graph("p edge 2 1\ne 1 3\n", GraphFormat::Dimacs).unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Graph(GraphError::VertexOutOfRange { .. })));
    }

    #[test]
    fn malformed_headers() {
        let err = parse_graph("3\n", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::MalformedHeader(_)));
        let err = parse_graph("", GraphFormat::EdgeList).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MissingHeader);
        let err = parse_graph("e 1 2\n", GraphFormat::Dimacs).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MissingHeader);
        let err = parse_graph("p graph 2 1\n", GraphFormat::Dimacs).unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::MalformedHeader(_)));
    }

    #[test]
    fn edge_count_must_match() {
        let err = parse_graph("3 3\n0 1\n1 2\n", GraphFormat::EdgeList).unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::EdgeCountMismatch { expected: 3, found: 2 }
        );
    }

    #[test]
    fn writers() {
        assert_eq!(to_edgelist(&p3()), "3 2\n0 1\n1 2\n");
        assert_eq!(to_dimacs(&p3()), "p edge 3 2\ne 1 2\ne 2 3\n");
    }

    #[test]
    fn labeling_format() {
        let c = parse_labeling("1 2\n0 0\n").unwrap();
        assert_eq!(write_labeling(&c), "0 0\n1 2\n");
        let err = parse_labeling("0 1\n0 2\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DuplicateVertex(0));
        assert!(parse_labeling("0 -1\n").is_err());
    }
}
