//! The graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix, column by column, six bits per printable byte.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn malformed(msg: &str) -> Error {
    Error::MalformedGraph6(msg.into())
}

/// Parses one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!("invalid byte {b:#04x}")));
    }
    let (n, body) = decode_size(bytes)?;
    let total = n * n.saturating_sub(1) / 2;
    let want = total.div_ceil(6);
    if body.len() != want {
        return Err(Error::MalformedGraph6(format!(
            "{n} vertices need {want} data bytes, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (total..want * 6).any(bit) {
        return Err(malformed("nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let fold = |chunk: &[u8]| {
        chunk
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
    };
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(malformed("truncated 8-byte size"));
        }
        return Ok((fold(&bytes[2..8]), &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(malformed("truncated 4-byte size"));
    }
    Ok((fold(&bytes[1..4]), &bytes[4..]))
}

/// Encodes `g` as graph6, without header or trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = alloc::vec![0u8; total.div_ceil(6)];
    for &(i, j) in g.edges() {
        let k = j * (j - 1) / 2 + i;
        bits[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(bits.into_iter().map(|b| b + 63));
    String::from_utf8(out).expect("graph6 is printable ASCII")
}
