//! graph6 codec (short form, up to 62 nodes).
//!
//! Byte 0 is `63 + n`. The upper triangle follows column by column,
//! `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, most significant bit
//! first, each byte offset by 63. The final byte is zero padded.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest node count the short form can express.
pub const MAX_NODES: usize = 62;

/// Optional header some tools prepend to the first line.
pub const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: &'static str) -> Error {
    Error::Graph6 { offset, reason }
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    parse_graph6_bytes(text.as_bytes())
}

/// Decode one graph6 record (no header, no line terminator).
pub fn parse_graph6_bytes(bytes: &[u8]) -> Result<Graph> {
    let &first = bytes.first().ok_or(err(0, "empty input"))?;
    if first == 126 {
        return Err(err(0, "long-form node count is not supported"));
    }
    if !(63..126).contains(&first) {
        return Err(err(0, "node count byte out of range"));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(err(0, "graph has no nodes"));
    }
    let body = &bytes[1..];
    let expected = body_len(n);
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos + 1, "character out of range"));
    }
    if body.len() < expected {
        return Err(err(bytes.len(), "truncated adjacency data"));
    }
    if body.len() > expected {
        return Err(err(1 + expected, "trailing bytes after adjacency data"));
    }

    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        let pad = 6 - bit % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(expected, "padding bits are not zero"));
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_NODES {
        return Err(Error::NodeCount(n, "n <= 62"));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// Strip an optional `>>graph6<<` header and surrounding whitespace.
/// Returns `None` for lines that carry no graph.
pub fn record_of(line: &str) -> Option<&str> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    if line.is_empty() {
        None
    } else {
        Some(line)
    }
}

/// One non-empty record of a graph6 stream.
#[derive(Debug, Clone)]
pub struct Record {
    /// 1-based line number in the input.
    pub line: usize,
    pub text: String,
}

/// Iterate the records of a graph6 stream, one graph per line. Blank lines
/// are skipped and an optional header is stripped. Only I/O failures are
/// reported here; decoding is left to the caller so that a bad record can
/// be reported with its line number without ending the stream.
pub fn records<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Record>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(idx, line)| match line {
            Err(e) => Some(Err(Error::Io(e))),
            Ok(text) => record_of(&text).map(|rec| {
                Ok(Record {
                    line: idx + 1,
                    text: rec.to_string(),
                })
            }),
        })
}

/// Decode a whole graph6 stream, failing on the first bad line.
pub fn read_graphs<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    records(reader)
        .map(|rec| {
            let rec = rec?;
            parse_graph6(&rec.text).map_err(|e| Error::Line {
                line: rec.line,
                source: Box::new(e),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn offset_of(r: Result<Graph>) -> usize {
        match r {
            Err(Error::Graph6 { offset, .. }) => offset,
            other => panic!("expected a graph6 error, got {other:?}"),
        }
    }

    #[test]
    fn decodes_small_graphs() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3).unwrap());
        // P3 with edges (0,1),(1,2): bits 1,0,1 -> 101000
        assert_eq!(parse_graph6("Bg").unwrap(), Graph::path(3).unwrap());
    }

    #[test]
    fn encodes_small_graphs() {
        assert_eq!(write_graph6(&Graph::complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(write_graph6(&Graph::complete(3).unwrap()).unwrap(), "Bw");
        assert_eq!(write_graph6(&Graph::petersen()).unwrap(), "IheA@GUAo");
    }

    #[test]
    fn reports_offsets() {
        assert_eq!(offset_of(parse_graph6("")), 0);
        assert_eq!(offset_of(parse_graph6("?")), 0);
        assert_eq!(offset_of(parse_graph6("~")), 0);
        assert_eq!(offset_of(parse_graph6(" ")), 0);
        // K3 needs one body byte
        assert_eq!(offset_of(parse_graph6("B")), 1);
        assert_eq!(offset_of(parse_graph6("Bww")), 2);
        assert_eq!(offset_of(parse_graph6("B ")), 1);
        // 'x' = 63 + 57 sets a padding bit
        assert_eq!(offset_of(parse_graph6("Bx")), 1);
    }

    #[test]
    fn rejects_oversized_graphs() {
        let g = Graph::empty(63).unwrap();
        assert!(matches!(write_graph6(&g), Err(Error::NodeCount(63, _))));
        let g = Graph::complete(62).unwrap();
        let text = write_graph6(&g).unwrap();
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn stream_skips_header_and_blanks() {
        let input = ">>graph6<<A_\n\nBw\r\n>>graph6<<\n@\n";
        let graphs = read_graphs(input.as_bytes()).unwrap();
        assert_eq!(graphs.len(), 3);
        assert_eq!(graphs[1], Graph::complete(3).unwrap());
    }

    #[test]
    fn stream_reports_line_numbers() {
        let input = "A_\n\nB!\n";
        match read_graphs(input.as_bytes()) {
            Err(Error::Line { line, source }) => {
                assert_eq!(line, 3);
                assert!(matches!(*source, Error::Graph6 { offset: 1, .. }));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
