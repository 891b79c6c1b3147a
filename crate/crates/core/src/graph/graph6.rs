//! graph6 encoding for orders up to 62 (single header byte).
//!
//! Header byte `63 + n`, then the upper triangle `x(i,j)` for `j = 1..n`,
//! `i = 0..j`, packed big-endian into 6-bit groups, zero padded, each group
//! stored as `value + 63`.

use std::io::BufRead;

use super::Graph;
use crate::{Error, Result};

pub const GRAPH6_MAX_ORDER: usize = 62;

/// Optional header on the first line of a graph6 file.
const FILE_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed header byte {0:#04x}")]
    MalformedHeader(u8),
    #[error("graph6 order 0 is not supported")]
    ZeroOrder,
    #[error("multi-byte order encoding is not supported (orders above {GRAPH6_MAX_ORDER})")]
    UnsupportedOrder,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("truncated bit stream: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data: expected {expected} data bytes, found {found}")]
    TrailingData { expected: usize, found: usize },
    #[error("non-zero padding bits")]
    NonZeroPadding,
    #[error("order {0} cannot be written (supported: 1..={GRAPH6_MAX_ORDER})")]
    OrderOutOfRange(usize),
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 string. Surrounding ASCII whitespace (such as a line
/// terminator) is ignored.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let text = text.trim_ascii();
    let (&header, data) = text.split_first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&header) {
        return Err(Graph6Error::MalformedHeader(header));
    }
    if header == 126 {
        return Err(Graph6Error::UnsupportedOrder);
    }
    let n = (header - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    let expected = data_len(n);
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData {
            expected,
            found: data.len(),
        });
    }
    let mut groups = Vec::with_capacity(expected);
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange {
                offset: i + 1,
                byte: b,
            });
        }
        groups.push(b - 63);
    }

    let mut g = Graph::empty(n).expect("1 <= n <= 62");
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            if groups[pos / 6] >> (5 - pos % 6) & 1 == 1 {
                g.insert_edge(i, j);
            }
            pos += 1;
        }
    }
    if !pos.is_multiple_of(6) {
        let pad_mask = (1u8 << (6 - pos % 6)) - 1;
        if groups[pos / 6] & pad_mask != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(g)
}

/// Canonical graph6 encoding, without a line terminator.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n == 0 || n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::OrderOutOfRange(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(63 + n as u8);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Reads a graph6 file: one graph per line, blank lines skipped, an optional
/// `>>graph6<<` prefix on the first line. Each item carries its 1-based line
/// number; parse errors name the line.
pub fn read_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = Result<(usize, Graph)>> {
    reader.lines().enumerate().filter_map(|(idx, line)| {
        let lineno = idx + 1;
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(Error::Io(e))),
        };
        let mut body = line.as_str();
        if lineno == 1 {
            body = body.strip_prefix(FILE_HEADER).unwrap_or(body);
        }
        let body = body.trim();
        if body.is_empty() {
            return None;
        }
        Some(
            parse_graph6(body.as_bytes())
                .map(|g| (lineno, g))
                .map_err(|e| Error::Line {
                    line: lineno,
                    source: Box::new(e.into()),
                }),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::empty(n).unwrap().complement()
    }

    #[test]
    fn known_strings() {
        // Frozen from an independent encoder (networkx.to_graph6_bytes).
        assert_eq!(parse_graph6(b"C~").unwrap(), k(4));
        assert_eq!(parse_graph6(b"Bw").unwrap(), k(3));
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(parse_graph6(b"Bg").unwrap(), p3);
        assert_eq!(write_graph6(&k(4)).unwrap(), "C~");
        assert_eq!(write_graph6(&k(3)).unwrap(), "Bw");
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(write_graph6(&p3).unwrap(), "Bg");
        assert_eq!(write_graph6(&k(12)).unwrap(), "K~~~~~~~~~~~");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6(b"!~"), Err(Graph6Error::MalformedHeader(b'!')));
        assert_eq!(parse_graph6(b"?"), Err(Graph6Error::ZeroOrder));
        assert_eq!(parse_graph6(b"~?@c"), Err(Graph6Error::UnsupportedOrder));
        assert_eq!(
            parse_graph6(b"C"),
            Err(Graph6Error::Truncated {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(
            parse_graph6(b"C~~"),
            Err(Graph6Error::TrailingData {
                expected: 1,
                found: 2
            })
        );
        assert_eq!(
            parse_graph6(b"C\x7f"),
            Err(Graph6Error::ByteOutOfRange {
                offset: 1,
                byte: 0x7f
            })
        );
        // K3 uses 3 of 6 bits; "B~" sets the padding.
        assert_eq!(parse_graph6(b"B~"), Err(Graph6Error::NonZeroPadding));
    }

    #[test]
    fn write_rejects_large_orders() {
        assert_eq!(
            write_graph6(&Graph::empty(63).unwrap()),
            Err(Graph6Error::OrderOutOfRange(63))
        );
        let g = Graph::empty(62).unwrap().complement();
        assert_eq!(
            parse_graph6(write_graph6(&g).unwrap().as_bytes()).unwrap(),
            g
        );
    }

    #[test]
    fn trailing_newline_is_ignored() {
        assert_eq!(parse_graph6(b"C~\n").unwrap(), k(4));
    }

    #[test]
    fn file_reader() {
        let text = ">>graph6<<C~\n\nBw\n";
        let items: Vec<_> = read_graph6(text.as_bytes()).map(|r| r.unwrap()).collect();
        assert_eq!(items, vec![(1, k(4)), (3, k(3))]);

        let bad = "C~\nC\n";
        let results: Vec<_> = read_graph6(bad.as_bytes()).collect();
        assert!(results[0].is_ok());
        match &results[1] {
            Err(Error::Line { line: 2, .. }) => {}
            other => panic!("expected line-2 error, got {other:?}"),
        }
    }
}
