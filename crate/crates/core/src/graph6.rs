//! The graph6 text format (one-byte size form only).
//!
//! A graph of order `n <= 62` is written as the byte `63 + n` followed by the
//! upper triangle of its adjacency matrix in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits per byte with the
//! most significant bit first, zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            k += 1;
            if k == 6 {
                out.push(63 + acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(63 + (acc << (6 - k)));
    }
    // every byte is in 63..=126, hence ASCII
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&size) = bytes.first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Error::Graph6Byte { byte, offset });
        }
    }
    if size == 126 {
        return Err(Error::OrderTooLarge(MAX_ORDER + 1));
    }
    let n = (size - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() < expected {
        return Err(Error::Graph6Truncated { expected, found: data.len() });
    }
    if data.len() > expected {
        return Err(Error::Graph6(format!(
            "{} trailing bytes after the adjacency data",
            data.len() - expected
        )));
    }
    let mut g = Graph::new(n);
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Serde adapter storing a [`Graph`] as its graph6 string.
pub mod serde_graph6 {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use crate::graph::Graph;

    pub fn serialize<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::encode(g))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Graph, D::Error> {
        let text = String::deserialize(d)?;
        super::decode(&text).map_err(D::Error::custom)
    }
}
