//! Text interchange formats: a plain edge-list format and graph6.
//!
//! Edge list: first line `p q`, then `q` lines `i j` with 0-based endpoints
//! and `i < j`. graph6 is the standard ASCII encoding (order header, then
//! the upper triangle read column by column, six bits per byte, offset 63).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Serialize to the edge-list format.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

/// Parse the edge-list format.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::EdgeList("missing header line".into()))?;
    let mut it = header.split_whitespace();
    let p: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeList("header must start with the vertex count".into()))?;
    let q: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeList("header must contain the edge count".into()))?;
    let mut edges = Vec::with_capacity(q);
    for (no, line) in lines {
        let mut tok = line.split_whitespace();
        let i: usize = tok
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("line {}: bad endpoint", no + 1)))?;
        let j: usize = tok
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("line {}: bad endpoint", no + 1)))?;
        if i >= j {
            return Err(Error::EdgeList(format!(
                "line {}: endpoints must satisfy i < j, got {i} {j}",
                no + 1
            )));
        }
        if j >= p {
            return Err(Error::EdgeList(format!(
                "line {}: endpoint {j} out of range for order {p}",
                no + 1
            )));
        }
        edges.push((i, j));
    }
    if edges.len() != q {
        return Err(Error::EdgeList(format!(
            "header promises {q} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(p, &edges, None)
}

/// Encode as graph6.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else {
        // 3-byte form covers every order this crate can build
        bytes.push(126);
        bytes.push(63 + ((n >> 12) & 63) as u8);
        bytes.push(63 + ((n >> 6) & 63) as u8);
        bytes.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.row(i)[j];
            nbits += 1;
            if nbits == 6 {
                bytes.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push(63 + (acc << (6 - nbits)));
    }
    String::from_utf8(bytes).expect("graph6 bytes are ASCII")
}

/// Decode graph6; a leading `>>graph6<<` marker is tolerated.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let s = text.trim().trim_start_matches(">>graph6<<");
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    let pos;
    let n: usize = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Graph6("orders beyond 2^18 are not supported".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated order header".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(63..=126).contains(&b) {
                return Err(Error::Graph6(format!("byte {b} out of range")));
            }
            n = (n << 6) | (b as usize - 63);
        }
        pos = 4;
        n
    } else {
        if !(63..=126).contains(&bytes[0]) {
            return Err(Error::Graph6(format!("byte {} out of range", bytes[0])));
        }
        pos = 1;
        bytes[0] as usize - 63
    };
    if n == 0 {
        return Err(Error::Graph6("order 0 graphs are rejected".into()));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(Error::Graph6(format!(
            "expected {nbytes} data bytes for order {n}, found {}",
            bytes.len() - pos
        )));
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for &b in &bytes[pos..] {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} out of range")));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push((v >> k) & 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b != 0) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] != 0 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges, None)
}
