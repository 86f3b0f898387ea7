//! graph6 reading and writing, restricted to the single-byte size header
//! (at most 62 vertices).

use thiserror::Error;

use super::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_SMALL: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("malformed graph6 at byte {offset}: {reason}")]
pub struct Graph6Error {
    pub offset: usize,
    pub reason: String,
}

fn err(offset: usize, reason: impl Into<String>) -> Graph6Error {
    Graph6Error { offset, reason: reason.into() }
}

/// Parses one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let trimmed = line.trim();
    let (skip, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, trimmed),
    };
    let offset0 = line.len() - line.trim_start().len() + skip;
    let bytes = body.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(err(offset0, "empty line"));
    };
    if first == 126 {
        return Err(err(offset0, format!("graphs above {MAX_SMALL} vertices are not supported")));
    }
    if !(63..=126).contains(&first) {
        return Err(err(offset0, format!("invalid size byte {first:#04x}")));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != nbytes {
        return Err(err(
            offset0 + 1 + data.len().min(nbytes),
            format!("expected {nbytes} data bytes for n={n}, found {}", data.len()),
        ));
    }
    let mut g = Graph::empty(n).expect("n <= 62");
    let mut bit = 0;
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(offset0 + 1 + i, format!("invalid data byte {b:#04x}")));
        }
        let chunk = b - 63;
        for shift in (0..6).rev() {
            let set = chunk >> shift & 1 == 1;
            if bit >= nbits {
                if set {
                    return Err(err(offset0 + 1 + i, "nonzero padding bits"));
                }
            } else if set {
                let (u, v) = pair_of(bit);
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    Ok(g)
}

// Bit index -> (row, column) of the upper triangle, column-major.
fn pair_of(bit: usize) -> (usize, usize) {
    let mut col = 1;
    let mut start = 0;
    while start + col <= bit {
        start += col;
        col += 1;
    }
    (bit - start, col)
}

/// Writes `g` as a graph6 line (without newline).
///
/// # Panics
/// If `g` has more than 62 vertices.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_SMALL, "graph6 writer supports at most {MAX_SMALL} vertices");
    let mut out = Vec::with_capacity(1 + n * n / 12 + 1);
    out.push(63 + n as u8);
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = chunk << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (chunk << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_named;

    #[test]
    fn k1_and_star() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree_sequence(), vec![1, 1, 1, 1, 4]);
        assert_eq!(write_graph6(&g), "D?{");
    }

    #[test]
    fn c5_round_trip_is_labeled_identity() {
        let c5 = make_named("C", &[5]).unwrap();
        let line = write_graph6(&c5);
        assert_eq!(parse_graph6(&line).unwrap(), c5);
    }

    #[test]
    fn header_and_whitespace() {
        let g = parse_graph6("  >>graph6<<D?{\n").unwrap();
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert_eq!(parse_graph6("").unwrap_err().offset, 0);
        assert_eq!(parse_graph6("D?").unwrap_err().offset, 2);
        assert_eq!(parse_graph6("D?{{").unwrap_err().offset, 3);
        // 'D' needs 10 bits; '@' sets a padding bit
        let e = parse_graph6("D?@").unwrap_err();
        assert_eq!(e.offset, 2);
        assert!(e.reason.contains("padding"));
        assert!(parse_graph6("~?@A").is_err());
        assert_eq!(parse_graph6("D? ").unwrap_err().offset, 2);
    }

    #[test]
    fn bit_layout_is_column_major() {
        assert_eq!(pair_of(0), (0, 1));
        assert_eq!(pair_of(1), (0, 2));
        assert_eq!(pair_of(2), (1, 2));
        assert_eq!(pair_of(3), (0, 3));
    }
}
