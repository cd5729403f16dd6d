//! graph6 and plain edge-list interchange.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) into 6-bit groups, each stored as a
//! byte offset by 63. Orders up to 62 use a single header byte; larger orders
//! use `~` followed by three 6-bit groups.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

const MAX_GRAPH6_ORDER: usize = 258_047;
const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    MalformedByte { byte: u8, offset: usize },
    #[error("graph6 data truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6 length mismatch: expected {expected} bytes, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("order {0} not supported by graph6")]
    OrderTooLarge(usize),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("read error: {0}")]
    Io(String),
}

/// Decodes one graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let s = text.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(FormatError::MalformedByte { byte, offset });
        }
    }
    let (n, body) = match bytes.first() {
        None => return Err(FormatError::Truncated { expected: 1, found: 0 }),
        Some(126) => {
            if bytes.get(1) == Some(&126) {
                // 8-byte header form, only for orders beyond what we write
                return Err(FormatError::OrderTooLarge(MAX_GRAPH6_ORDER + 1));
            }
            if bytes.len() < 4 {
                return Err(FormatError::Truncated { expected: 4, found: bytes.len() });
            }
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &bytes[4..])
        }
        Some(&b) => ((b - 63) as usize, &bytes[1..]),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(FormatError::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(FormatError::LengthMismatch { expected, found: body.len() });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Encodes `graph` as graph6 (no header, no trailing newline).
pub fn to_graph6(graph: &Graph) -> Result<String, FormatError> {
    let n = graph.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(FormatError::OrderTooLarge(n));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut groups = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if graph.has_edge(i, j) {
                groups[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    out.extend(groups.into_iter().map(|g| g + 63));
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses the edge-list format: a line `n m` followed by `m` lines `u v`.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) =
        lines.next().ok_or(FormatError::EdgeList { line: 0, message: "missing `n m` header".into() })?;
    let [n, m] = parse_pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let [u, v] = parse_pair(line, l)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::EdgeList {
            line: 0,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2], FormatError> {
    let err = |message: String| FormatError::EdgeList { line, message };
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(err(format!("expected two integers, got {text:?}")));
    }
    let parse = |s: &str| s.parse::<usize>().map_err(|_| err(format!("invalid integer {s:?}")));
    Ok([parse(fields[0])?, parse(fields[1])?])
}

pub fn to_edge_list(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.order(), graph.size());
    for &(u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Lazily decodes one graph6 string per non-empty line.
pub fn read_graph6_stream<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph, FormatError>> {
    reader.lines().filter_map(|line| match line {
        Err(e) => Some(Err(FormatError::Io(e.to_string()))),
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(parse_graph6(&l)),
    })
}
