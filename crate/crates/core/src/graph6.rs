//! graph6 encoding for graphs with at most 62 vertices.
//!
//! Format reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>.
//! The order is one byte `n + 63`; the upper triangle follows column by
//! column (`(0,1), (0,2), (1,2), (0,3), ...`) packed into big-endian 6-bit
//! groups, each offset by 63 and zero-padded on the right.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};

pub const HEADER: &str = ">>graph6<<";

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let bits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push((n + 63) as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

/// Parses one graph6 word. A leading `>>graph6<<` header and trailing
/// whitespace are tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = text.strip_prefix(HEADER) {
        bytes = rest.as_bytes();
        base = HEADER.len();
    }
    while let Some((last, rest)) = bytes.split_last() {
        if last.is_ascii_whitespace() {
            bytes = rest;
        } else {
            break;
        }
    }
    let Some(&first) = bytes.first() else {
        return Err(Error::parse(base, "empty graph6 word"));
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                base + i,
                format!("byte {b:#04x} is outside 63..=126"),
            ));
        }
    }
    if first == 126 {
        return Err(Error::parse(
            base,
            format!("multi-byte order prefix (n > {MAX_ORDER}) is not supported"),
        ));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::parse(base, "order 0 is not a graph here"));
    }
    let bits = n * (n - 1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() < expected {
        return Err(Error::parse(
            base + bytes.len(),
            format!(
                "truncated: order {n} needs {expected} bytes, got {}",
                bytes.len()
            ),
        ));
    }
    if bytes.len() > expected {
        return Err(Error::parse(
            base + expected,
            format!("trailing bytes after a complete order-{n} word"),
        ));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = bytes[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Error::parse(base + expected - 1, "non-zero padding bits"));
        }
    }
    Graph::from_adjacency(adj)
}

/// Parses newline-separated graph6 words, skipping blank lines and a header
/// line. Errors carry the byte offset within the offending line; the line
/// number is folded into the message.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed == HEADER {
            continue;
        }
        match parse_graph6(trimmed) {
            Ok(g) => out.push(g),
            Err(Error::Parse { offset, message }) => {
                return Err(Error::Parse {
                    offset,
                    message: format!("line {}: {message}", lineno + 1),
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
