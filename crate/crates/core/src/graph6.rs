//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per byte and offset
//! by 63.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

/// Encodes the upper triangle (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, …).
pub(crate) fn encode_rows(rows: &[u64]) -> Vec<u8> {
    let n = rows.len();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(rows[i] & bit(j) != 0);
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

/// graph6 string for `g`.
pub fn encode(g: &Graph) -> String {
    String::from_utf8(encode_rows(g.rows())).expect("graph6 output is ASCII")
}

/// Parses one graph6 line. Surrounding whitespace and the optional
/// `>>graph6<<` header are accepted.
pub fn decode(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#x} outside the printable range 63..=126")));
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::Graph6("graphs above 64 vertices are not supported".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    if n > MAX_ORDER {
        return Err(Error::OrderOverflow(n));
    }
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(Error::Graph6(format!(
            "expected {needed} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    Graph::from_rows(rows)
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        decode(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        // Reference strings produced by nauty's geng/showg conventions.
        assert_eq!(Graph::empty(0).unwrap().to_graph6(), "?");
        assert_eq!(Graph::empty(1).unwrap().to_graph6(), "@");
        assert_eq!(Graph::complete(2).unwrap().to_graph6(), "A_");
        assert_eq!(Graph::complete(3).unwrap().to_graph6(), "Bw");
        assert_eq!(Graph::complete(4).unwrap().to_graph6(), "C~");
        assert_eq!(Graph::path(4).unwrap().to_graph6(), "Ch");
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g.to_graph6(), "DQc");
    }

    #[test]
    fn long_header_for_63_and_64() {
        for n in [63, 64] {
            let g = Graph::complete(n).unwrap();
            let s = g.to_graph6();
            assert!(s.starts_with('~'));
            assert_eq!(decode(&s).unwrap(), g);
        }
    }

    #[test]
    fn decode_rejects_bad_input() {
        assert!(decode("").is_err());
        assert!(decode("C").is_err());
        assert!(decode("C~~").is_err());
        assert!(decode("C\u{7f}").is_err());
        assert!(matches!(decode("~?@@"), Err(Error::OrderOverflow(65))));
    }

    #[test]
    fn decode_accepts_header_and_whitespace() {
        assert_eq!(decode(">>graph6<<Bw\n").unwrap(), Graph::complete(3).unwrap());
    }
}
