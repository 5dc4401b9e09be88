//! Plain-text edge lists.
//!
//! A file is a sequence of lines. Blank lines and lines starting with `#`
//! are ignored. Every other line carries exactly two non-negative integers
//! separated by ASCII whitespace. An optional first data line `n m` declares
//! the vertex count and edge count; each remaining line `u v` is an edge
//! between 0-based vertex ids. Without a header the vertex count is one more
//! than the largest id seen (zero for an empty file).
//!
//! Header detection: the first data line is taken as a header exactly when
//! its second integer equals the number of data lines after it. This makes
//! every headered file parse as written and keeps headerless files working
//! in the common case; the corner case where a headerless file's first edge
//! happens to match the rule is resolved in favor of the header (such files
//! should simply include a header).
//!
//! Serialization always emits the header and lists edges `u v` with `u < v`
//! in lexicographic order, so equal graphs serialize to identical bytes.
//! A graph that has suffered deletions serializes to its live edges over the
//! original slot count; parsing that text back yields a graph whose formerly
//! tombstoned slots are live isolated vertices.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, GraphError, VertexId};

/// Largest vertex count the parser will materialize, as a guard against
/// typo'd or hostile headers exhausting memory.
pub const MAX_PARSED_VERTICES: u64 = 100_000_000;

/// A parse failure, tagged with the 1-based line it occurred on.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// What went wrong on a line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParseErrorKind {
    /// A data line must hold exactly two integers.
    FieldCount { found: usize },
    /// A field did not parse as a non-negative integer.
    InvalidInteger { token: String },
    /// Both endpoints of an edge are the same vertex.
    SelfLoop { v: u64 },
    /// The same edge appeared twice (in either orientation).
    DuplicateEdge { u: u64, v: u64 },
    /// An endpoint is not below the declared vertex count.
    IdOutOfRange { id: u64, n: u64 },
    /// Declared or implied vertex count exceeds [`MAX_PARSED_VERTICES`].
    TooManyVertices { n: u64 },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            ParseErrorKind::FieldCount { found } => {
                write!(f, "expected two integers, found {found} fields")
            }
            ParseErrorKind::InvalidInteger { token } => {
                write!(f, "invalid integer {token:?}")
            }
            ParseErrorKind::SelfLoop { v } => write!(f, "self-loop at vertex {v}"),
            ParseErrorKind::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u}, {v}}}"),
            ParseErrorKind::IdOutOfRange { id, n } => {
                write!(f, "vertex id {id} out of range for declared vertex count {n}")
            }
            ParseErrorKind::TooManyVertices { n } => {
                write!(f, "vertex count {n} exceeds the supported maximum {MAX_PARSED_VERTICES}")
            }
        }
    }
}

impl core::error::Error for ParseError {}

/// One data line: original line number plus its two integers.
struct DataLine {
    line: usize,
    a: u64,
    b: u64,
}

/// Parses edge-list text into a [`Graph`].
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut data: Vec<DataLine> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_ascii_whitespace().collect();
        if fields.len() != 2 {
            return Err(ParseError { line, kind: ParseErrorKind::FieldCount { found: fields.len() } });
        }
        let parse_field = |tok: &str| -> Result<u64, ParseError> {
            tok.parse::<u64>().map_err(|_| ParseError {
                line,
                kind: ParseErrorKind::InvalidInteger { token: tok.to_string() },
            })
        };
        data.push(DataLine { line, a: parse_field(fields[0])?, b: parse_field(fields[1])? });
    }

    let has_header = match data.first() {
        Some(first) => first.b == (data.len() - 1) as u64,
        None => false,
    };

    let (declared, edge_lines) = if has_header {
        let n = data[0].a;
        if n > MAX_PARSED_VERTICES {
            return Err(ParseError { line: data[0].line, kind: ParseErrorKind::TooManyVertices { n } });
        }
        (Some(n), &data[1..])
    } else {
        (None, &data[..])
    };

    let mut n = declared.unwrap_or(0);
    for e in edge_lines {
        for id in [e.a, e.b] {
            match declared {
                Some(limit) if id >= limit => {
                    return Err(ParseError {
                        line: e.line,
                        kind: ParseErrorKind::IdOutOfRange { id, n: limit },
                    });
                }
                Some(_) => {}
                None => {
                    if id + 1 > MAX_PARSED_VERTICES {
                        return Err(ParseError {
                            line: e.line,
                            kind: ParseErrorKind::TooManyVertices { n: id + 1 },
                        });
                    }
                    n = n.max(id + 1);
                }
            }
        }
    }

    let mut g = Graph::new(n as usize);
    for e in edge_lines {
        match g.add_edge(VertexId(e.a as u32), VertexId(e.b as u32)) {
            Ok(()) => {}
            Err(GraphError::SelfLoop { .. }) => {
                return Err(ParseError { line: e.line, kind: ParseErrorKind::SelfLoop { v: e.a } });
            }
            Err(GraphError::DuplicateEdge { .. }) => {
                return Err(ParseError {
                    line: e.line,
                    kind: ParseErrorKind::DuplicateEdge { u: e.a, v: e.b },
                });
            }
            Err(err) => unreachable!("range-checked edge insertion failed: {err}"),
        }
    }
    Ok(g)
}

/// Serializes a graph: `n m` header, then `u v` per edge with `u < v`, in
/// lexicographic order, one per line.
pub fn edge_list_string(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&g.original_len().to_string());
    out.push(' ');
    out.push_str(&g.size().to_string());
    out.push('\n');
    for (u, v) in g.edges() {
        out.push_str(&u.0.to_string());
        out.push(' ');
        out.push_str(&v.0.to_string());
        out.push('\n');
    }
    out
}

/// Convenience: the live vertex ids of a graph, ascending. Used by callers
/// that report surviving vertices.
pub fn live_vertex_ids(g: &Graph) -> Vec<u32> {
    g.vertices().map(|v| v.0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_headered_path() {
        let g = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 2);
        assert!(g.contains_edge(VertexId(0), VertexId(1)));
        assert!(g.contains_edge(VertexId(1), VertexId(2)));
        assert!(!g.contains_edge(VertexId(0), VertexId(2)));
    }

    #[test]
    fn parses_null_graph() {
        let g = parse_edge_list("0 0").unwrap();
        assert!(g.is_null());
        assert_eq!(g.size(), 0);
        // A fully empty file is also the null graph.
        assert!(parse_edge_list("").unwrap().is_null());
        assert!(parse_edge_list("# just a comment\n\n").unwrap().is_null());
    }

    #[test]
    fn self_loop_is_reported_with_its_line() {
        let err = parse_edge_list("2 1\n0 0").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ParseErrorKind::SelfLoop { v: 0 });
    }

    #[test]
    fn duplicate_edge_is_reported_with_its_line() {
        let err = parse_edge_list("2 2\n0 1\n1 0").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.kind, ParseErrorKind::DuplicateEdge { u: 1, v: 0 });
    }

    #[test]
    fn id_out_of_range_is_reported_with_its_line() {
        let err = parse_edge_list("2 1\n0 5").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ParseErrorKind::IdOutOfRange { id: 5, n: 2 });
    }

    #[test]
    fn rejects_malformed_tokens() {
        let err = parse_edge_list("1 x").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(matches!(err.kind, ParseErrorKind::InvalidInteger { .. }));
        let err = parse_edge_list("0 1 2").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::FieldCount { found: 3 });
        let err = parse_edge_list("7").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::FieldCount { found: 1 });
    }

    #[test]
    fn headerless_lines_are_edges() {
        // First line (0,1) would only be a header if exactly one data line
        // followed; two follow, so all three lines are edges.
        let g = parse_edge_list("0 1\n0 2\n1 2").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn headerless_vertex_count_is_max_id_plus_one() {
        let g = parse_edge_list("4 7\n7 9\n2 4").unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn comments_and_blanks_are_ignored_anywhere() {
        let g = parse_edge_list("# graph\n\n3 2\n# edges follow\n0 1\n\n1 2\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn ambiguous_single_line_reads_as_header() {
        // "5 0" could be the edge {5, 0}; the documented rule takes it as a
        // header declaring five isolated vertices.
        let g = parse_edge_list("5 0").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 0);
    }

    #[test]
    fn oversized_counts_are_rejected() {
        let err = parse_edge_list("999999999999 0").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::TooManyVertices { n: 999_999_999_999 });
        let err = parse_edge_list("0 999999999999\n1 999999999998").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(matches!(err.kind, ParseErrorKind::TooManyVertices { .. }));
    }

    #[test]
    fn serialization_is_sorted_and_round_trips() {
        let g = Graph::from_edges(4, [(2, 3), (0, 3), (0, 1)]).unwrap();
        let text = edge_list_string(&g);
        assert_eq!(text, "4 3\n0 1\n0 3\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);

        let null = Graph::new(0);
        assert_eq!(edge_list_string(&null), "0 0\n");
        assert_eq!(parse_edge_list(&edge_list_string(&null)).unwrap(), null);
    }

    #[test]
    fn tombstones_serialize_as_isolated_slots() {
        let mut g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        g.delete_vertex(VertexId(0)).unwrap();
        let text = edge_list_string(&g);
        assert_eq!(text, "3 1\n1 2\n");
        let back = parse_edge_list(&text).unwrap();
        // Slot 0 comes back live (and isolated): the round trip is lossy for
        // deletion state, by design.
        assert_eq!(back.order(), 3);
        assert_ne!(back, g);
    }
}
