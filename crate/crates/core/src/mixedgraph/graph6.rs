//! graph6 codec for undirected graphs (McKay's format, `n < 258048`).

use super::text::ParseError;
use super::UnderlyingGraph;

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn to_graph6(g: &UnderlyingGraph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_n(n, &mut out);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - i);
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses a single graph6 string. The optional `>>graph6<<` header is
/// accepted. `line` is only used for error reporting.
pub fn parse_graph6(s: &str, line: usize) -> Result<UnderlyingGraph, ParseError> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::new(line, "empty graph6 string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(ParseError::new(line, format!("invalid graph6 byte {b:#x}")));
    }
    let data = |b: u8| (b - 63) as usize;
    let (n, rest) = if bytes[0] != 126 {
        (data(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(ParseError::new(line, "truncated graph6 size"));
        }
        let n = bytes[1..4].iter().fold(0, |acc, &b| (acc << 6) | data(b));
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(ParseError::new(line, "truncated graph6 size"));
        }
        let n = bytes[2..8].iter().fold(0, |acc, &b| (acc << 6) | data(b));
        (n, &bytes[8..])
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if rest.len() != expected {
        return Err(ParseError::new(
            line,
            format!("graph6 body has {} bytes, expected {expected}", rest.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if (data(rest[k / 6]) >> (5 - k % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    UnderlyingGraph::from_edges(n, edges).map_err(|e| ParseError::new(line, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        // petgraph's reference: A-C, A-E, B-D, D-E on 5 vertices
        let g = UnderlyingGraph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc", 1).unwrap(), g);
        // K_4
        let k4 = parse_graph6("C~", 1).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(parse_graph6("?", 1).unwrap().n(), 0);
        assert_eq!(parse_graph6(">>graph6<<A_", 1).unwrap().edge_count(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_graph6("", 1).is_err());
        assert!(parse_graph6("DQ", 4).is_err());
        assert_eq!(parse_graph6("D\tc", 7).unwrap_err().line, 7);
    }

    #[test]
    fn long_size_prefix() {
        let g = UnderlyingGraph::from_edges(70, [(0, 69), (3, 4)]).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s, 1).unwrap(), g);
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..12, bits in prop::collection::vec(any::<bool>(), 66)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] { edges.push((u, v)); }
                    k += 1;
                }
            }
            let g = UnderlyingGraph::from_edges(n, edges).unwrap();
            prop_assert_eq!(parse_graph6(&to_graph6(&g), 1).unwrap(), g);
        }
    }
}
