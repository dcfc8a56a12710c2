//! Bit-exact graph6 encoding and decoding.
//!
//! graph6 packs the upper triangle of the adjacency matrix, column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), …`), into 6-bit groups, most significant
//! bit first, zero-padded at the end; every group is printed as its value plus
//! 63. Orders up to 62 are a single leading byte `n + 63`; orders 63..=258047
//! are `'~'` followed by three 6-bit bytes of `n`, high group first.
//!
//! Decoding is strict: non-printable bytes, truncated or overlong payloads,
//! and nonzero padding bits are all rejected, so round-tripping is the
//! identity on canonical strings. The optional `>>graph6<<` stream header is
//! accepted and skipped.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order representable in the 4-byte header form.
const MAX_ORDER: usize = 258_047;

/// Stream header some tools prepend to graph6 files.
const HEADER: &str = ">>graph6<<";

/// Decoding errors; each names the offending position or quantity.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    /// Empty input (after stripping an optional header).
    #[error("empty graph6 string")]
    Empty,
    /// A byte outside the printable graph6 range 63..=126.
    #[error("invalid graph6 byte {byte:#04x} at position {pos}")]
    InvalidByte { byte: u8, pos: usize },
    /// Payload shorter or longer than the order dictates.
    #[error("graph6 payload for order {n} needs {expected} bytes, found {found}")]
    LengthMismatch { n: usize, expected: usize, found: usize },
    /// Padding bits after the last matrix entry must be zero.
    #[error("nonzero padding bits in final graph6 byte")]
    NonzeroPadding,
    /// Order beyond the supported 4-byte header form.
    #[error("order {0} exceeds the supported graph6 range")]
    OrderTooLarge(usize),
}

/// Encodes a graph as a graph6 string.
///
/// # Panics
///
/// Panics if the order exceeds 258047 (outside this crate's domain).
///
/// # Examples
///
/// ```
/// use plandist::{graph6, Graph};
///
/// assert_eq!(graph6::encode(&Graph::complete(3)), "Bw");
/// assert_eq!(graph6::encode(&Graph::complete(4)), "C~");
/// ```
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_ORDER, "order {n} exceeds graph6 range");
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(b'~');
        bytes.push(((n >> 12) & 63) as u8 + 63);
        bytes.push(((n >> 6) & 63) as u8 + 63);
        bytes.push((n & 63) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0usize;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes a single graph6 string (optionally prefixed by `>>graph6<<`).
///
/// # Errors
///
/// Strict: rejects bytes outside 63..=126, payload length mismatches, and
/// nonzero padding bits.
pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { byte: b, pos });
        }
    }
    let (n, body) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(Graph6Error::LengthMismatch {
                n: 0,
                expected: 4,
                found: bytes.len(),
            });
        }
        if bytes[1] == b'~' {
            // 8-byte header (orders above 258047): outside the supported range.
            return Err(Graph6Error::OrderTooLarge(MAX_ORDER + 1));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let bits = n * (n.saturating_sub(1)) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::LengthMismatch {
            n,
            expected,
            found: body.len(),
        });
    }
    let mut edges = Vec::new();
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[idx / 6] - 63;
            if (byte >> (5 - idx % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    // Remaining bits of the final group must be zero padding.
    while idx < expected * 6 {
        let byte = body[idx / 6] - 63;
        if (byte >> (5 - idx % 6)) & 1 == 1 {
            return Err(Graph6Error::NonzeroPadding);
        }
        idx += 1;
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded indices are in range"))
}

/// Decodes a newline-delimited graph6 stream, skipping blank lines.
///
/// # Errors
///
/// Fails on the first malformed line.
pub fn decode_all(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .map(decode)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_small_strings() {
        assert_eq!(encode(&Graph::from_edges(0, &[]).unwrap()), "?");
        assert_eq!(encode(&Graph::from_edges(1, &[]).unwrap()), "@");
        assert_eq!(encode(&Graph::complete(2)), "A_");
        assert_eq!(encode(&Graph::complete(3)), "Bw");
        assert_eq!(encode(&Graph::complete(4)), "C~");
        // Path 0-1-2: bits x01 x02 x12 = 1 0 1, padded to 101000.
        assert_eq!(encode(&Graph::path(3)), "Bg");
    }

    #[test]
    fn decode_inverts_encode_on_small_library() {
        let graphs = [
            Graph::path(1),
            Graph::path(7),
            Graph::cycle(6),
            Graph::complete(5),
            Graph::complete_bipartite(3, 4),
            Graph::from_edges(6, &[(0, 3), (1, 4), (2, 5)]).unwrap(),
        ];
        for g in graphs {
            let s = encode(&g);
            let h = decode(&s).unwrap();
            assert_eq!(g.n(), h.n());
            assert_eq!(g.edges(), h.edges());
        }
    }

    #[test]
    fn decode_named_example() {
        // "DQc": order 5, bit groups 010010 100100 ⇒ edges 02, 13, 04, 34.
        let g = decode("DQc").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
    }

    #[test]
    fn header_is_accepted() {
        let g = decode(">>graph6<<C~").unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn long_form_round_trips() {
        // Order 70 forces the 4-byte header.
        let edges: Vec<_> = (1..70).map(|v| (v - 1, v)).collect();
        let g = Graph::from_edges(70, &edges).unwrap();
        let s = encode(&g);
        assert!(s.starts_with('~'));
        let h = decode(&s).unwrap();
        assert_eq!(h.n(), 70);
        assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn strict_rejections() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert!(matches!(
            decode("B\n"),
            Err(Graph6Error::InvalidByte { byte: b'\n', pos: 1 })
        ));
        assert!(matches!(decode("C"), Err(Graph6Error::LengthMismatch { .. })));
        assert!(matches!(decode("C~~"), Err(Graph6Error::LengthMismatch { .. })));
        // Order 3 uses three bits plus three padding zeros; 'i' = 101010 has a
        // nonzero bit under the pad mask.
        assert_eq!(decode("Bi"), Err(Graph6Error::NonzeroPadding));
    }

    #[test]
    fn stream_decoding_skips_blank_lines() {
        let graphs = decode_all("Bw\n\nC~\n").unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[1].edge_count(), 6);
    }
}
