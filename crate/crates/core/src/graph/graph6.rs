//! graph6 codec: header byte 63+n for n <= 62 (extended 4-byte header for
//! larger n), then the upper triangle of the adjacency matrix in column-major
//! order, packed 6 bits per printable character with offset 63.

use super::Graph;
use crate::{Error, Result};

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        assert!(n <= 258_047, "graph6 encoding limited to n <= 258047 here");
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(63 + acc);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(63 + (acc << (6 - bits)));
    }
    String::from_utf8(out).unwrap()
}

pub fn graph6_decode(s: &str) -> Result<Graph> {
    let s = s.trim_end();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Graph6("n > 258047 not supported".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated extended header".into()));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() - pos < need {
        return Err(Error::Graph6(format!(
            "truncated bit vector: need {need} payload bytes, got {}",
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut acc = 0u32;
    let mut bits = 0;
    let mut next = || -> bool {
        if bits == 0 {
            acc = (bytes[pos] - 63) as u32;
            pos += 1;
            bits = 6;
        }
        bits -= 1;
        (acc >> bits) & 1 == 1
    };
    for j in 1..n {
        for i in 0..j {
            if next() {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_encodes_to_at_sign() {
        let k1 = Graph::empty(1);
        assert_eq!(graph6_encode(&k1), "@");
    }

    #[test]
    fn c6_round_trip() {
        let c6 = Graph::cycle(6);
        let s = graph6_encode(&c6);
        let back = graph6_decode(&s).unwrap();
        assert_eq!(back, c6);
    }

    #[test]
    fn known_encoding() {
        // 5-vertex graph with edges {0-2, 0-4, 1-3, 3-4} encodes to "DQc"
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(graph6_encode(&g), "DQc");
        assert_eq!(graph6_decode("DQc").unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(graph6_decode("").is_err());
        assert!(graph6_decode("D").is_err()); // truncated payload
        assert!(graph6_decode("@\n").is_ok()); // trailing newline tolerated
        assert!(graph6_decode("\x1f").is_err()); // byte below 63
    }

    #[test]
    fn large_n_round_trip() {
        let g = Graph::path(100);
        let s = graph6_encode(&g);
        assert_eq!(graph6_decode(&s).unwrap(), g);
    }
}
