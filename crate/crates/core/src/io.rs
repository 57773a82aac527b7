//! Graph file formats: plain edge-list text and the graph6 ASCII format.
//!
//! graph6 follows the published definition exactly: the order N(n) (one byte
//! n+63 for n <= 62, otherwise '~' plus three bytes of 6-bit groups), then
//! the upper triangle in column order packed into 6-bit groups biased by 63,
//! zero-padded to a multiple of six bits.

use crate::graph::{Graph, GraphError};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("edge list: missing header line \"n m\"")]
    MissingHeader,
    #[error("edge list: bad header {0:?}")]
    BadHeader(String),
    #[error("edge list: bad edge line {0:?}")]
    BadEdgeLine(String),
    #[error("edge list: expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("graph6: empty input")]
    Empty,
    #[error("graph6: byte {0:#x} out of range at position {1}")]
    ByteOutOfRange(u8, usize),
    #[error("graph6: truncated order")]
    TruncatedOrder,
    #[error("graph6: order too large ({0})")]
    OrderTooLarge(u64),
    #[error("graph6: body has {found} bytes, expected {expected}")]
    BodyLength { expected: usize, found: usize },
    #[error("graph6: nonzero padding bits")]
    NonzeroPadding,
    #[error("unsupported graph file extension {0:?} (use .el or .g6)")]
    UnknownExtension(String),
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("io: {0}")]
    Io(String),
}

/// Parse "n m" followed by m lines "u v" of 0-based endpoints.
pub fn read_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or(FormatError::MissingHeader)?;
    let mut it = header.split_whitespace();
    let (n, m) = match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => {
            let n = a
                .parse::<usize>()
                .map_err(|_| FormatError::BadHeader(header.to_string()))?;
            let m = b
                .parse::<usize>()
                .map_err(|_| FormatError::BadHeader(header.to_string()))?;
            (n, m)
        }
        _ => return Err(FormatError::BadHeader(header.to_string())),
    };
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => {
                let u = a
                    .parse::<usize>()
                    .map_err(|_| FormatError::BadEdgeLine(line.to_string()))?;
                let v = b
                    .parse::<usize>()
                    .map_err(|_| FormatError::BadEdgeLine(line.to_string()))?;
                edges.push((u, v));
            }
            _ => return Err(FormatError::BadEdgeLine(line.to_string())),
        }
    }
    if edges.len() != m {
        return Err(FormatError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const G6_MAX_ORDER: u64 = 258_047; // three-byte order limit; enough for n <= 512

/// Encode in canonical (shortest) graph6 form. Labels are not serialized.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        assert!((n as u64) <= G6_MAX_ORDER, "graph6 order limit exceeded");
        bytes.push(126);
        bytes.push(((n >> 12) & 0x3f) as u8 + 63);
        bytes.push(((n >> 6) & 0x3f) as u8 + 63);
        bytes.push((n & 0x3f) as u8 + 63);
    }
    // Upper triangle in column order: for v = 1..n, bits x(0,v)..x(v-1,v).
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            nbits += 1;
            if nbits == 6 {
                bytes.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(bytes).unwrap()
}

/// Decode graph6; accepts an optional ">>graph6<<" header and is strict
/// about body length and zero padding.
pub fn read_graph6(text: &str) -> Result<Graph, FormatError> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::ByteOutOfRange(b, i));
        }
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // Six-byte orders exceed the documented ceiling by far.
            return Err(FormatError::OrderTooLarge(u64::MAX));
        }
        if bytes.len() < 4 {
            return Err(FormatError::TruncatedOrder);
        }
        let n = ((bytes[1] - 63) as u64) << 12 | ((bytes[2] - 63) as u64) << 6
            | (bytes[3] - 63) as u64;
        if n > G6_MAX_ORDER {
            return Err(FormatError::OrderTooLarge(n));
        }
        (n as usize, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let nbits = n.saturating_sub(1) * n / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(FormatError::BodyLength {
            expected,
            found: body.len(),
        });
    }
    let mut g = Graph::edgeless(n);
    let mut bit = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let b = body[bit / 6] - 63;
            if b >> (5 - bit % 6) & 1 != 0 {
                g.add_edge(u, v);
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    // Padding bits must be zero.
    if nbits % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(FormatError::NonzeroPadding);
        }
    }
    Ok(g)
}

/// Load a graph from disk, choosing the format by extension (.el or .g6).
pub fn load_graph_file(path: &Path) -> Result<Graph, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|e| FormatError::Io(e.to_string()))?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("el") => read_edge_list(&text),
        Some("g6") => read_graph6(&text),
        other => Err(FormatError::UnknownExtension(
            other.unwrap_or("").to_string(),
        )),
    }
}
