//! graph6 short form (at most 62 vertices).
//!
//! One size byte `N + 63`, then the upper triangle of the adjacency matrix in
//! column order `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, most
//! significant bit first, each byte offset by 63 and the tail zero-padded.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_SHORT_VERTICES: usize = 62;
const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(parse_err(0, "empty graph6 string"));
    };
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(parse_err(
            pos,
            format!("byte {:#04x} outside 63..126", bytes[pos]),
        ));
    }
    let n = (first - 63) as usize;
    if n > MAX_SHORT_VERTICES {
        return Err(parse_err(0, "long-form graph6 is not supported"));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = 1 + bit_count.div_ceil(6);
    if bytes.len() != expected {
        let offset = bytes.len().min(expected);
        return Err(parse_err(
            offset,
            format!(
                "expected {expected} bytes for {n} vertices, got {}",
                bytes.len()
            ),
        ));
    }

    let mut g = Graph::empty(n);
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                g.add_edge_unchecked(i, j);
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 {
        let last = bytes[expected - 1] - 63;
        let pad_mask = (1u8 << (6 - bit % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(parse_err(expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > MAX_SHORT_VERTICES {
        return Err(Error::UnsupportedSize(n));
    }
    let mut out = Vec::with_capacity(1 + (n * n) / 12 + 1);
    out.push(n as u8 + 63);
    let mut cur = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            cur = (cur << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(cur + 63);
                cur = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((cur << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Newline-separated graph6 stream. Blank lines and an optional `>>graph6<<`
/// header are skipped; parse errors carry the 1-based line in the message.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut consumed = 0;
    for (lineno, raw) in text.split('\n').enumerate() {
        let line_start = consumed;
        consumed += raw.len() + 1;
        let mut line = raw.trim_end_matches('\r');
        if let Some(rest) = line.strip_prefix(HEADER) {
            line = rest;
        }
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| match e {
            Error::Parse { offset, message } => Error::Parse {
                offset: line_start + offset,
                message: format!("line {}: {message}", lineno + 1),
            },
            other => other,
        })?;
        out.push(g);
    }
    Ok(out)
}

pub fn emit_graph6_stream<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> Result<String> {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&emit_graph6(g)?);
        out.push('\n');
    }
    Ok(out)
}
