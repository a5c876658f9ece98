//! graph6 encoding for orders up to 62.
//!
//! Layout: one order byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte
//! (most significant first), each byte offset by 63, zero-padded at the end.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const MAX_ORDER: usize = 62;

fn payload_len(order: usize) -> usize {
    (order * order.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(Error::Graph6Byte { byte, offset });
        }
    }
    let (&head, payload) = bytes.split_first().ok_or(Error::Graph6Length {
        order: 0,
        expected: 1,
        found: 0,
    })?;
    if head == 126 {
        return Err(Error::Graph6Order(63));
    }
    let order = (head - OFFSET) as usize;
    let expected = payload_len(order);
    if payload.len() != expected {
        return Err(Error::Graph6Length {
            order,
            expected,
            found: payload.len(),
        });
    }
    let mut bits = payload
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |k| (b - OFFSET) >> k & 1 == 1));
    let mut edges = Vec::new();
    for v in 1..order {
        for u in 0..v {
            if bits.next().unwrap_or(false) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(order, &edges)
}

pub fn to_graph6(graph: &Graph) -> Result<String> {
    let order = graph.order();
    if order > MAX_ORDER {
        return Err(Error::Graph6Order(order));
    }
    let mut out = Vec::with_capacity(1 + payload_len(order));
    out.push(order as u8 + OFFSET);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..order {
        for u in 0..v {
            acc = acc << 1 | graph.is_adjacent(u, v) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, hajos_sun, octahedron, path};

    #[test]
    fn hand_encoded_tokens() {
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3).unwrap());
        assert_eq!(parse_graph6("Bg").unwrap(), path(3).unwrap());
        assert_eq!(to_graph6(&complete(1).unwrap()).unwrap(), "@");
        assert_eq!(to_graph6(&complete(3).unwrap()).unwrap(), "Bw");
        // Zero-vertex graph.
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn round_trips() {
        for g in [
            hajos_sun(),
            octahedron(3).unwrap(),
            octahedron(31).unwrap(),
            path(7).unwrap(),
        ] {
            let token = to_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&token).unwrap(), g);
        }
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(
            parse_graph6("B!"),
            Err(Error::Graph6Byte { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("C"),
            Err(Error::Graph6Length { order: 4, .. })
        ));
        assert!(matches!(
            parse_graph6("Bww"),
            Err(Error::Graph6Length { .. })
        ));
        assert!(matches!(parse_graph6(""), Err(Error::Graph6Length { .. })));
        assert!(matches!(parse_graph6("~?"), Err(Error::Graph6Order(_))));
        assert!(to_graph6(&octahedron(32).unwrap()).is_err());
    }
}
