//! graph6 text encoding (single-byte order prefix only).
//!
//! A record is the byte `n + 63` followed by the upper triangle of the
//! adjacency matrix in column order `(0,1),(0,2),(1,2),(0,3),...`, packed
//! six bits per byte (first bit most significant), zero padded, each
//! group stored as `value + 63`.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("multi-byte order prefix is not supported (orders above {MAX_ORDER})")]
    MultiByteOrder,
    #[error("payload too short: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("payload too long: expected {expected} bytes, found {found}")]
    TrailingBytes { expected: usize, found: usize },
    #[error("nonzero padding bits in final byte")]
    NonZeroPadding,
    #[error("order {0} cannot be encoded with a single-byte prefix")]
    OrderTooLarge(usize),
}

#[derive(Debug, Error)]
pub enum StreamError {
    #[error("line {line}: {source}")]
    Decode { line: usize, source: Graph6Error },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl StreamError {
    pub fn line(&self) -> Option<usize> {
        match self {
            StreamError::Decode { line, .. } => Some(*line),
            StreamError::Io(_) => None,
        }
    }
}

/// Number of bytes in the record for a graph of order `n`.
pub fn encoded_len(n: usize) -> usize {
    1 + (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    // Graph already caps order at MAX_ORDER; kept for the documented contract.
    if g.order() > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(g.order()));
    }
    Ok(String::from_utf8(encode_bytes(g)).expect("graph6 bytes are ASCII"))
}

pub(crate) fn encode_bytes(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(encoded_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        let row = g.row(j);
        for i in 0..j {
            acc = acc << 1 | (row >> i & 1) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    out
}

pub fn decode_graph6(record: &[u8]) -> Result<Graph, Graph6Error> {
    let record = record.strip_prefix(HEADER.as_bytes()).unwrap_or(record);
    let (&first, payload) = record.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in record.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset, byte });
        }
    }
    if first == 126 {
        return Err(Graph6Error::MultiByteOrder);
    }
    let n = (first - 63) as usize;
    let expected = encoded_len(n) - 1;
    if payload.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            expected,
            found: payload.len(),
        });
    }
    let mut g = Graph::empty(n).map_err(|_| Graph6Error::OrderTooLarge(n))?;
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let pad_mask = (1u8 << (6 - bit % 6)) - 1;
        if (payload[bit / 6] - 63) & pad_mask != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(g)
}

pub fn decode_graph6_str(record: &str) -> Result<Graph, Graph6Error> {
    decode_graph6(record.as_bytes())
}

/// Lazily decodes one graph per nonblank line, reporting 1-based line numbers.
pub struct Graph6Reader<R> {
    inner: R,
    line: usize,
    buf: Vec<u8>,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(inner: R) -> Self {
        Graph6Reader {
            inner,
            line: 0,
            buf: Vec::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    /// The line number travels with each graph.
    type Item = Result<(usize, Graph), StreamError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.inner.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e.into())),
            }
            self.line += 1;
            let mut rec: &[u8] = &self.buf;
            while let [rest @ .., b'\n' | b'\r'] = rec {
                rec = rest;
            }
            if rec.is_empty() || rec == HEADER.as_bytes() {
                continue;
            }
            let line = self.line;
            return Some(
                decode_graph6(rec)
                    .map(|g| (line, g))
                    .map_err(|source| StreamError::Decode { line, source }),
            );
        }
    }
}

pub fn read_graph6_stream<R: BufRead>(source: R) -> Result<Vec<Graph>, StreamError> {
    Graph6Reader::new(source).map(|r| r.map(|(_, g)| g)).collect()
}

/// Writes one LF-terminated record per graph, in the order given.
pub fn write_graph6_stream<'a, W, I>(graphs: I, mut sink: W) -> io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a Graph>,
{
    for g in graphs {
        sink.write_all(&encode_bytes(g))?;
        sink.write_all(b"\n")?;
    }
    sink.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode_graph6(&Graph::complete(3).unwrap()).unwrap(), "Bw");
        assert_eq!(encode_graph6(&Graph::empty(3).unwrap()).unwrap(), "B?");
        assert_eq!(encode_graph6(&cycle(5)).unwrap(), "Dhc");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode_graph6_str("Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(decode_graph6_str("@").unwrap(), Graph::empty(1).unwrap());
        assert_eq!(decode_graph6_str(">>graph6<<Dhc").unwrap(), cycle(5));
        assert_eq!(
            decode_graph6_str("B"),
            Err(Graph6Error::Truncated { expected: 1, found: 0 })
        );
    }

    #[test]
    fn decode_errors() {
        assert_eq!(decode_graph6_str(""), Err(Graph6Error::Empty));
        assert_eq!(
            decode_graph6_str("B w"),
            Err(Graph6Error::InvalidByte { offset: 1, byte: b' ' })
        );
        assert_eq!(decode_graph6_str("~??"), Err(Graph6Error::MultiByteOrder));
        assert!(matches!(
            decode_graph6_str("Bww"),
            Err(Graph6Error::TrailingBytes { .. })
        ));
        // K3 bits are 111000; setting a padding bit is rejected
        assert_eq!(decode_graph6_str("Bx"), Err(Graph6Error::NonZeroPadding));
    }

    #[test]
    fn stream_reads_in_order_and_skips_blank_lines() {
        let text = "Bw\n\r\n@\r\nDhc\n";
        let gs = read_graph6_stream(text.as_bytes()).unwrap();
        assert_eq!(gs.len(), 3);
        assert_eq!(gs[2], cycle(5));
        let mut out = Vec::new();
        write_graph6_stream(&gs, &mut out).unwrap();
        assert_eq!(out, b"Bw\n@\nDhc\n");
    }

    #[test]
    fn stream_error_names_line() {
        let err = read_graph6_stream("Bw\nB \nDhc\n".as_bytes()).unwrap_err();
        assert_eq!(err.line(), Some(2));
        assert!(err.to_string().starts_with("line 2:"));
    }

    #[test]
    fn encoded_length_formula() {
        for n in 0..=MAX_ORDER {
            let g = Graph::complete(n).unwrap();
            assert_eq!(encode_bytes(&g).len(), encoded_len(n));
        }
    }
}
