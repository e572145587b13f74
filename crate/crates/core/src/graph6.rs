//! graph6 reader and writer for graphs with at most 62 vertices.
//!
//! The encoding is one order byte `n + 63` followed by the upper triangle of
//! the adjacency matrix, column by column (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed six bits per byte, high bit first, each byte offset by 63. Padding
//! bits must be zero.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with a single-byte order prefix.
pub const MAX_ORDER: usize = 62;

fn bits_len(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn format_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::UnsupportedSize {
            n,
            limit: MAX_ORDER,
        });
    }
    let mut out = Vec::with_capacity(1 + bits_len(n).div_ceil(6));
    out.push(n as u8 + 63);
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
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |offset: usize, reason: String| Error::Graph6 { offset, reason };
    let first = *bytes
        .first()
        .ok_or_else(|| err(0, "empty input".into()))?;
    if first == b'~' {
        return Err(err(0, "orders above 62 are not supported".into()));
    }
    if !(63..=126).contains(&first) {
        return Err(err(0, format!("byte {first:#04x} is not a graph6 order byte")));
    }
    let n = (first - 63) as usize;
    let nbits = bits_len(n);
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(err(
            bytes.len().min(expected),
            format!("expected {expected} bytes for order {n}, found {}", bytes.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for (pos, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(err(pos, format!("byte {b:#04x} outside the graph6 range")));
        }
        let v = b - 63;
        for shift in (0..6).rev() {
            let bit = (v >> shift) & 1;
            if k < nbits {
                if bit == 1 {
                    edges.push(triangle_pair(k));
                }
            } else if bit == 1 {
                return Err(err(pos, "nonzero padding bit".into()));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Maps the `k`-th upper-triangle bit to its vertex pair `(i, j)`, `i < j`.
fn triangle_pair(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut base = 0;
    while base + j <= k {
        base += j;
        j += 1;
    }
    (k - base, j)
}
