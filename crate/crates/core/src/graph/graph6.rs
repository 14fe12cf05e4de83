//! graph6 encoding, restricted to the single-byte size header.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order expressible with the one-byte size header.
pub const GRAPH6_MAX_N: usize = 62;

const BIAS: u8 = 63;

/// Parses one graph6 line. A trailing newline (LF or CRLF) is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |offset: usize, reason: String| Error::Graph6 { offset, reason };

    let (&header, body) = bytes
        .split_first()
        .ok_or_else(|| err(0, "empty input".into()))?;
    if header == b'~' {
        return Err(err(0, format!("multi-byte size header not supported (n > {GRAPH6_MAX_N})")));
    }
    if !(BIAS..=BIAS + GRAPH6_MAX_N as u8).contains(&header) {
        return Err(err(0, format!("invalid size byte 0x{header:02x}")));
    }
    let n = (header - BIAS) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        let offset = 1 + body.len().min(expected);
        return Err(err(
            offset,
            format!("expected {expected} body bytes for n={n}, found {}", body.len()),
        ));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for (i, &byte) in body.iter().enumerate() {
        if !(BIAS..=BIAS + 63).contains(&byte) {
            return Err(err(1 + i, format!("invalid character 0x{byte:02x}")));
        }
        let chunk = byte - BIAS;
        for b in 0..6 {
            if chunk >> (5 - b) & 1 == 1 {
                if k + b >= bits {
                    return Err(err(1 + i, "nonzero padding bits".into()));
                }
                let (u, v) = upper_triangle_pair(k + b);
                g.add_edge(u, v)?;
            }
        }
        k += 6;
    }
    Ok(g)
}

/// Bit `k` of the column-wise upper triangle: (0,1), (0,2), (1,2), (0,3), ...
fn upper_triangle_pair(k: usize) -> (usize, usize) {
    let mut v = 1;
    let mut start = 0;
    while start + v <= k {
        start += v;
        v += 1;
    }
    (k - start, v)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_N {
        return Err(Error::TooLarge { n, limit: GRAPH6_MAX_N });
    }
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((BIAS + n as u8) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = chunk << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((BIAS + chunk) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((BIAS + (chunk << (6 - filled))) as char);
    }
    Ok(out)
}
