//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
//! packed six bits per printable character.

use super::{Graph, GraphBuilder};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("malformed graph6 size header")]
    BadHeader,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    NonPrintable { offset: usize, byte: u8 },
    #[error("expected {expected} adjacency bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("padding bits in the last adjacency byte are not zero")]
    TrailingBits,
}

const BIAS: u8 = 63;
const MAX_ORDER: usize = 68_719_476_735;

pub(super) fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(8 + n * n / 12);
    if n <= 62 {
        out.push(BIAS + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(BIAS + ((n >> shift) & 63) as u8);
        }
    } else {
        assert!(n <= MAX_ORDER, "order {n} exceeds graph6 range");
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(BIAS + ((n >> shift) & 63) as u8);
        }
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub(super) fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&byte) {
            return Err(Graph6Error::NonPrintable { offset, byte });
        }
    }

    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        if n <= 62 {
            return Err(Graph6Error::BadHeader);
        }
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(Graph6Error::BadHeader);
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        if n <= 258_047 {
            return Err(Graph6Error::BadHeader);
        }
        (n, &bytes[8..])
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: body.len(),
        });
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (body[expected - 1] - BIAS) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::TrailingBits);
    }

    let mut builder = GraphBuilder::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let chunk = body[k / 6] - BIAS;
            if chunk >> (5 - k % 6) & 1 == 1 {
                builder.add_edge(u, v).expect("indices are in range");
            }
            k += 1;
        }
    }
    Ok(builder.build())
}
