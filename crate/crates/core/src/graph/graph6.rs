//! graph6 encoding: `N(n)` header followed by the upper triangle of the
//! adjacency matrix in column order `(0,1),(0,2),(1,2),(0,3),...`, packed six
//! bits per byte (most significant first), each byte offset by 63.

use std::io::BufRead;

use super::{Graph, MAX_ORDER};
use crate::{Error, Result};

const HEADER: &[u8] = b">>graph6<<";

/// Parses a single graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut base = 0;
    let mut s = text;
    if s.starts_with(HEADER) {
        s = &s[HEADER.len()..];
        base = HEADER.len();
    }
    while let Some((&last, rest)) = s.split_last() {
        if last == b'\n' || last == b'\r' {
            s = rest;
        } else {
            break;
        }
    }
    if let Some(pos) = s.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(
            base + pos,
            format!("byte {:#04x} outside the graph6 range [63, 126]", s[pos]),
        ));
    }
    let (n, header_len) = match s.first() {
        None => return Err(Error::parse(base, "empty input")),
        Some(&126) => {
            if s.get(1) == Some(&126) {
                return Err(Error::parse(
                    base + 1,
                    format!("orders above 258047 are not supported (max {MAX_ORDER})"),
                ));
            }
            if s.len() < 4 {
                return Err(Error::parse(base + s.len(), "truncated length header"));
            }
            let n = s[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n == 0 {
        return Err(Error::parse(base, "graph of order 0"));
    }
    if n > MAX_ORDER {
        return Err(Error::parse(base, format!("order {n} exceeds {MAX_ORDER}")));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &s[header_len..];
    if body.len() != expected {
        return Err(Error::parse(
            base + header_len + body.len().min(expected),
            format!("body has {} bytes, order {n} requires {expected}", body.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.insert(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad_mask = (1u8 << (6 - nbits % 6)) - 1;
        if (body[expected - 1] - 63) & pad_mask != 0 {
            return Err(Error::parse(base + header_len + expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Canonical graph6 text (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Reads newline-delimited graph6, skipping blank lines. Parse errors carry
/// the line number in their message.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim_end();
        if trimmed.is_empty() {
            continue;
        }
        let g = parse_graph6(trimmed.as_bytes()).map_err(|e| match e {
            Error::Parse { offset, message } => Error::Parse {
                offset,
                message: format!("line {}: {message}", lineno + 1),
            },
            other => other,
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}
