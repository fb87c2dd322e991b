//! graph6 encoding: a length header followed by the upper triangle of the
//! adjacency matrix in column order, packed six bits per printable byte.

use crate::error::{Graph6Error, GraphError};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";
const OFFSET: u8 = 63;

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((i, &b)) = body.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Graph6Error::InvalidByte { offset: skip + i, byte: b });
    }

    let (order, header_len) = decode_order(body, skip)?;
    if order > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(order).into());
    }
    let bits = order * order.saturating_sub(1) / 2;
    let expected = header_len + bits.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated { offset: skip + body.len(), expected: skip + expected });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData { offset: skip + expected });
    }

    let data = &body[header_len..];
    let bit = |k: usize| (data[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..order {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(order, edges)?)
}

fn decode_order(body: &[u8], skip: usize) -> Result<(usize, usize), Graph6Error> {
    let val = |b: u8| (b - OFFSET) as usize;
    if body[0] != 126 {
        return Ok((val(body[0]), 1));
    }
    let wide = body.len() > 1 && body[1] == 126;
    let (start, len) = if wide { (2, 6) } else { (1, 3) };
    if body.len() < start + len {
        return Err(Graph6Error::MalformedHeader { offset: skip + body.len() });
    }
    let order = body[start..start + len].iter().fold(0usize, |acc, &b| acc << 6 | val(b));
    // The long forms are only valid for orders the short forms cannot express.
    let min = if wide { 258_048 } else { 63 };
    if order < min {
        return Err(Graph6Error::MalformedHeader { offset: skip });
    }
    Ok((order, start + len))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12);
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, petersen};

    #[test]
    fn known_encodings() {
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3));
        assert_eq!(to_graph6(&complete(3)), "Bw");
        assert_eq!(parse_graph6("D??").unwrap(), Graph::empty(5).unwrap());
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(to_graph6(&cycle(5)), "Dhc");
        assert_eq!(to_graph6(&petersen()), "IheA@GUAo");
    }

    #[test]
    fn header_and_newline_tolerated() {
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), complete(3));
        assert_eq!(parse_graph6("Bw\r\n").unwrap(), complete(3));
    }

    #[test]
    fn long_header_round_trip() {
        let g = crate::generators::circulant(100, &[1, 7]).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors_name_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("Bw!"), Err(Graph6Error::InvalidByte { offset: 2, byte: b'!' }));
        assert_eq!(parse_graph6("Bw?"), Err(Graph6Error::TrailingData { offset: 2 }));
        assert_eq!(parse_graph6("D?"), Err(Graph6Error::Truncated { offset: 2, expected: 3 }));
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::MalformedHeader { offset: 2 }));
        // 5 encoded in the 4-byte form is not canonical.
        assert_eq!(parse_graph6("~??D??"), Err(Graph6Error::MalformedHeader { offset: 0 }));
        assert_eq!(
            parse_graph6(">>graph6<<B\u{7}"),
            Err(Graph6Error::InvalidByte { offset: 11, byte: 7 })
        );
        assert!(matches!(
            parse_graph6("~?P?"),
            Err(Graph6Error::Graph(GraphError::TooManyVertices(_)))
        ));
    }
}
