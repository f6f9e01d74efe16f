//! Graph text formats.
//!
//! DIMACS-like: `c` comment lines, one `p sp <n> <m>` header, then `a <u> <v> <w>`
//! lines with 1-based ids, each one undirected edge. Edge list: one
//! `<u> <v> <w>` triple per line with 0-based ids; `#` starts a comment line.
//! Source and target are given separately, in the same id base as the file.

use std::fmt::Write as _;
use std::str::FromStr;

use rsp_core::{Graph, GraphBuilder, GraphError};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Dimacs,
    EdgeList,
}

impl InputFormat {
    /// Offset between file ids and internal 0-based ids.
    pub fn id_base(self) -> usize {
        match self {
            InputFormat::Dimacs => 1,
            InputFormat::EdgeList => 0,
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("weight ≤ 0 at line {line}")]
    NonPositiveWeight { line: usize },
    #[error("line {line}: vertex {vertex} out of range")]
    VertexOutOfRange { line: usize, vertex: usize },
    #[error("line {line}: edge before the `p sp` header")]
    MissingHeader { line: usize },
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("missing {0} vertex")]
    MissingTerminal(&'static str),
    #[error("{which} vertex {vertex} out of range")]
    TerminalOutOfRange { which: &'static str, vertex: usize },
    #[error("source and target are the same vertex")]
    SameTerminals,
}

/// A parsed graph together with what the parser dropped.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub graph: Graph,
    pub dropped_self_loops: usize,
    pub id_base: usize,
}

fn field<T: FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, ParseError> {
    let tok = tok.ok_or_else(|| ParseError::Malformed {
        line,
        reason: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| ParseError::Malformed {
        line,
        reason: format!("invalid {what} `{tok}`"),
    })
}

fn weight(tok: Option<&str>, line: usize) -> Result<f64, ParseError> {
    let w: f64 = field(tok, line, "weight")?;
    if w.is_nan() || w.is_infinite() {
        return Err(ParseError::Malformed {
            line,
            reason: format!("invalid weight `{w}`"),
        });
    }
    if w <= 0.0 {
        return Err(ParseError::NonPositiveWeight { line });
    }
    Ok(w)
}

fn no_trailing<'a>(mut toks: impl Iterator<Item = &'a str>, line: usize) -> Result<(), ParseError> {
    match toks.next() {
        None => Ok(()),
        Some(t) => Err(ParseError::Malformed {
            line,
            reason: format!("unexpected token `{t}`"),
        }),
    }
}

struct RawEdge {
    line: usize,
    u: usize,
    v: usize,
    w: f64,
}

/// Parses `text` and designates `source`/`target` (ids in the file's base).
pub fn parse_graph(
    text: &str,
    format: InputFormat,
    source: Option<usize>,
    target: Option<usize>,
) -> Result<Parsed, ParseError> {
    let base = format.id_base();
    let mut edges = Vec::new();
    let mut header: Option<(usize, usize)> = None;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let mut toks = raw.split_whitespace();
        let Some(first) = toks.next() else { continue };
        match format {
            InputFormat::Dimacs => match first {
                "c" => continue,
                "p" => {
                    if header.is_some() {
                        return Err(ParseError::Malformed {
                            line,
                            reason: "duplicate header".into(),
                        });
                    }
                    let kind: String = field(toks.next(), line, "problem type")?;
                    if kind != "sp" {
                        return Err(ParseError::Malformed {
                            line,
                            reason: format!("expected `p sp`, found `p {kind}`"),
                        });
                    }
                    let n = field(toks.next(), line, "vertex count")?;
                    let m = field(toks.next(), line, "edge count")?;
                    no_trailing(toks, line)?;
                    header = Some((n, m));
                }
                "a" => {
                    if header.is_none() {
                        return Err(ParseError::MissingHeader { line });
                    }
                    let u: usize = field(toks.next(), line, "endpoint")?;
                    let v: usize = field(toks.next(), line, "endpoint")?;
                    let w = weight(toks.next(), line)?;
                    no_trailing(toks, line)?;
                    for vertex in [u, v] {
                        if vertex < 1 {
                            return Err(ParseError::VertexOutOfRange { line, vertex });
                        }
                    }
                    edges.push(RawEdge {
                        line,
                        u: u - 1,
                        v: v - 1,
                        w,
                    });
                }
                other => {
                    return Err(ParseError::Malformed {
                        line,
                        reason: format!("unknown line type `{other}`"),
                    })
                }
            },
            InputFormat::EdgeList => {
                if first.starts_with('#') {
                    continue;
                }
                let u: usize = field(Some(first), line, "endpoint")?;
                let v: usize = field(toks.next(), line, "endpoint")?;
                let w = weight(toks.next(), line)?;
                no_trailing(toks, line)?;
                edges.push(RawEdge { line, u, v, w });
            }
        }
    }

    let n = match (format, header) {
        (InputFormat::Dimacs, Some((n, m))) => {
            if edges.len() != m {
                return Err(ParseError::EdgeCountMismatch {
                    declared: m,
                    found: edges.len(),
                });
            }
            n
        }
        (InputFormat::Dimacs, None) => return Err(ParseError::MissingHeader { line: 0 }),
        (InputFormat::EdgeList, _) => {
            let max_edge = edges.iter().map(|e| e.u.max(e.v) + 1).max().unwrap_or(0);
            let max_terminal = source
                .into_iter()
                .chain(target)
                .map(|x| x + 1)
                .max()
                .unwrap_or(0);
            max_edge.max(max_terminal)
        }
    };

    let terminal = |id: Option<usize>, which: &'static str| -> Result<usize, ParseError> {
        let id = id.ok_or(ParseError::MissingTerminal(which))?;
        match id.checked_sub(base) {
            Some(v) if v < n => Ok(v),
            _ => Err(ParseError::TerminalOutOfRange { which, vertex: id }),
        }
    };
    let s = terminal(source, "source")?;
    let t = terminal(target, "target")?;
    if s == t {
        return Err(ParseError::SameTerminals);
    }

    let mut builder = GraphBuilder::with_capacity(n, edges.len());
    for e in &edges {
        builder.add_edge(e.u, e.v, e.w).map_err(|err| match err {
            GraphError::VertexOutOfRange { vertex, .. } => ParseError::VertexOutOfRange {
                line: e.line,
                vertex: vertex + base,
            },
            _ => ParseError::NonPositiveWeight { line: e.line },
        })?;
    }
    let dropped_self_loops = builder.dropped_self_loops();
    let graph = builder.build(s, t).expect("terminals validated above");
    Ok(Parsed {
        graph,
        dropped_self_loops,
        id_base: base,
    })
}

/// Serializes `graph` so that [`parse_graph`] reads back the same edge list.
pub fn write_graph(graph: &Graph, format: InputFormat) -> String {
    let mut out = String::new();
    match format {
        InputFormat::Dimacs => {
            writeln!(out, "p sp {} {}", graph.vertex_count(), graph.edge_count()).unwrap();
            for e in graph.edges() {
                writeln!(out, "a {} {} {}", e.u + 1, e.v + 1, e.weight).unwrap();
            }
        }
        InputFormat::EdgeList => {
            for e in graph.edges() {
                writeln!(out, "{} {} {}", e.u, e.v, e.weight).unwrap();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "c triangle\np sp 3 3\na 1 2 1\na 2 3 1\na 1 3 10\n";

    #[test]
    fn parses_dimacs_triangle() {
        let p = parse_graph(TRIANGLE, InputFormat::Dimacs, Some(1), Some(3)).unwrap();
        assert_eq!(p.graph.vertex_count(), 3);
        assert_eq!(p.graph.edge_count(), 3);
        assert_eq!((p.graph.source(), p.graph.target()), (0, 2));
        assert_eq!(p.graph.edge(2).weight, 10.0);
        assert_eq!(p.dropped_self_loops, 0);
    }

    #[test]
    fn drops_self_loops() {
        let p = parse_graph(
            "p sp 2 2\na 1 1 5\na 1 2 1\n",
            InputFormat::Dimacs,
            Some(1),
            Some(2),
        )
        .unwrap();
        assert_eq!(p.dropped_self_loops, 1);
        assert_eq!(p.graph.edge_count(), 1);
    }

    #[test]
    fn rejects_negative_weight_with_line() {
        let err = parse_graph(
            "p sp 2 1\na 1 2 -3\n",
            InputFormat::Dimacs,
            Some(1),
            Some(2),
        )
        .unwrap_err();
        assert_eq!(err, ParseError::NonPositiveWeight { line: 2 });
        assert_eq!(err.to_string(), "weight ≤ 0 at line 2");
        let err = parse_graph("0 1 0\n", InputFormat::EdgeList, Some(0), Some(1)).unwrap_err();
        assert_eq!(err, ParseError::NonPositiveWeight { line: 1 });
    }

    #[test]
    fn reports_errors() {
        let dimacs = |text: &str| parse_graph(text, InputFormat::Dimacs, Some(1), Some(2));
        assert!(matches!(
            dimacs("p sp 2 1\na 1 x 3\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            dimacs("p sp 2 1\na 1 2\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            dimacs("p sp 2 1\na 1 2 3 4\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            dimacs("p sp 2 1\nq\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            dimacs("p sp 2 1\na 1 2 nan\n"),
            Err(ParseError::Malformed { .. })
        ));
        assert_eq!(
            dimacs("p sp 2 1\na 1 5 3\n").unwrap_err(),
            ParseError::VertexOutOfRange { line: 2, vertex: 5 }
        );
        assert_eq!(
            dimacs("p sp 2 1\na 0 1 3\n").unwrap_err(),
            ParseError::VertexOutOfRange { line: 2, vertex: 0 }
        );
        assert_eq!(
            dimacs("a 1 2 3\n").unwrap_err(),
            ParseError::MissingHeader { line: 1 }
        );
        assert_eq!(
            dimacs("p sp 2 2\na 1 2 3\n").unwrap_err(),
            ParseError::EdgeCountMismatch {
                declared: 2,
                found: 1
            }
        );
        assert_eq!(
            parse_graph(TRIANGLE, InputFormat::Dimacs, None, Some(3)).unwrap_err(),
            ParseError::MissingTerminal("source")
        );
        assert_eq!(
            parse_graph(TRIANGLE, InputFormat::Dimacs, Some(1), Some(9)).unwrap_err(),
            ParseError::TerminalOutOfRange {
                which: "target",
                vertex: 9
            }
        );
        assert_eq!(
            parse_graph(TRIANGLE, InputFormat::Dimacs, Some(2), Some(2)).unwrap_err(),
            ParseError::SameTerminals
        );
    }

    #[test]
    fn edge_list_is_zero_based() {
        let p = parse_graph(
            "# tri\n0 1 1\n1 2 1\n0 2 10\n",
            InputFormat::EdgeList,
            Some(0),
            Some(2),
        )
        .unwrap();
        assert_eq!(p.graph.vertex_count(), 3);
        assert_eq!(p.id_base, 0);
        // An isolated target beyond the largest edge id still exists.
        let p = parse_graph("0 1 1\n", InputFormat::EdgeList, Some(0), Some(4)).unwrap();
        assert_eq!(p.graph.vertex_count(), 5);
        assert!(!p.graph.is_target_reachable());
    }

    #[test]
    fn parallel_edges_survive() {
        let p = parse_graph(
            "p sp 2 2\na 1 2 1\na 2 1 4\n",
            InputFormat::Dimacs,
            Some(1),
            Some(2),
        )
        .unwrap();
        assert_eq!(p.graph.edge_count(), 2);
    }

    #[test]
    fn writes_triangle() {
        let p = parse_graph(TRIANGLE, InputFormat::Dimacs, Some(1), Some(3)).unwrap();
        assert_eq!(
            write_graph(&p.graph, InputFormat::Dimacs),
            "p sp 3 3\na 1 2 1\na 2 3 1\na 1 3 10\n"
        );
        assert_eq!(
            write_graph(&p.graph, InputFormat::EdgeList),
            "0 1 1\n1 2 1\n0 2 10\n"
        );
    }
}
