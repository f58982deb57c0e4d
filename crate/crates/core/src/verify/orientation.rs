use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::mixedgraph::{Link, MixedGraph, UnderlyingGraph};

/// Largest edge count whose `3^|E|` orientations still index into a `u64`.
pub const MAX_CAP_EDGES: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("invalid orientation digit {0:?} (expected 0, 1 or 2)")]
    BadDigit(char),
    #[error("orientation code has {code} digits but the graph has {edges} edges")]
    LengthMismatch { code: usize, edges: usize },
    #[error("graph has {edges} edges, above the cap of {cap}")]
    CapExceeded { edges: usize, cap: usize },
}

/// One base-3 digit per underlying edge, in sorted edge order: 0 undirected,
/// 1 arc from the smaller to the larger endpoint, 2 the reverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientationCode {
    digits: Vec<u8>,
}

impl OrientationCode {
    pub fn new(digits: Vec<u8>) -> Result<Self, OrientationError> {
        if let Some(&d) = digits.iter().find(|&&d| d > 2) {
            return Err(OrientationError::BadDigit(char::from(b'0' + d.min(9))));
        }
        Ok(OrientationCode { digits })
    }

    /// The `index`-th code of length `len` in enumeration order (first
    /// digit most significant).
    pub fn from_index(mut index: u64, len: usize) -> Self {
        let mut digits = vec![0; len];
        for d in digits.iter_mut().rev() {
            *d = (index % 3) as u8;
            index /= 3;
        }
        OrientationCode { digits }
    }

    pub fn encode(g: &MixedGraph) -> Self {
        let digits = g
            .underlying()
            .edges()
            .map(|(u, v)| match g.link(u, v) {
                Some(Link::Undirected) => 0,
                Some(Link::Out) => 1,
                Some(Link::In) => 2,
                None => unreachable!("underlying edge without a link"),
            })
            .collect();
        OrientationCode { digits }
    }

    pub fn decode(&self, g: &UnderlyingGraph) -> Result<MixedGraph, OrientationError> {
        if self.digits.len() != g.edge_count() {
            return Err(OrientationError::LengthMismatch {
                code: self.digits.len(),
                edges: g.edge_count(),
            });
        }
        let mut undirected = Vec::new();
        let mut arcs = Vec::new();
        for ((u, v), &d) in g.edges().zip(&self.digits) {
            match d {
                0 => undirected.push((u, v)),
                1 => arcs.push((u, v)),
                _ => arcs.push((v, u)),
            }
        }
        Ok(
            MixedGraph::from_parts(g.n(), undirected, arcs)
                .expect("edges come from a simple graph"),
        )
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// No undirected edges remain.
    pub fn is_fully_oriented(&self) -> bool {
        self.digits.iter().all(|&d| d != 0)
    }
}

impl fmt::Display for OrientationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for OrientationCode {
    type Err = OrientationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s
            .chars()
            .map(|c| match c {
                '0'..='2' => Ok(c as u8 - b'0'),
                _ => Err(OrientationError::BadDigit(c)),
            })
            .collect::<Result<_, _>>()?;
        Ok(OrientationCode { digits })
    }
}

/// All `3^|E|` mixed graphs over `g`, in orientation-code order.
pub fn enumerate_orientations(
    g: &UnderlyingGraph,
    cap_edges: usize,
) -> Result<Orientations<'_>, OrientationError> {
    let cap = cap_edges.min(MAX_CAP_EDGES);
    let edges = g.edge_count();
    if edges > cap {
        return Err(OrientationError::CapExceeded { edges, cap });
    }
    Ok(Orientations {
        graph: g,
        next: 0,
        total: 3u64.pow(edges as u32),
    })
}

pub struct Orientations<'a> {
    graph: &'a UnderlyingGraph,
    next: u64,
    total: u64,
}

impl Orientations<'_> {
    pub fn total(&self) -> u64 {
        self.total
    }
}

impl Iterator for Orientations<'_> {
    type Item = MixedGraph;

    fn next(&mut self) -> Option<MixedGraph> {
        if self.next == self.total {
            return None;
        }
        let code = OrientationCode::from_index(self.next, self.graph.edge_count());
        self.next += 1;
        Some(code.decode(self.graph).expect("code length matches"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Orientations<'_> {}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use proptest::prelude::*;

    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> UnderlyingGraph {
        UnderlyingGraph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn counts_and_distinctness() {
        let k2 = graph(2, &[(0, 1)]);
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let c3 = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        for (g, expected) in [(&k2, 3), (&p3, 9), (&c3, 27)] {
            let all: Vec<MixedGraph> = enumerate_orientations(g, 20).unwrap().collect();
            assert_eq!(all.len(), expected);
            let distinct: HashSet<String> = all
                .iter()
                .map(crate::mixedgraph::write_mixed_graph)
                .collect();
            assert_eq!(distinct.len(), expected);
            assert!(all.iter().all(|m| m.underlying() == *g));
        }
    }

    #[test]
    fn order_follows_codes() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let codes: Vec<String> = enumerate_orientations(&p3, 20)
            .unwrap()
            .map(|m| OrientationCode::encode(&m).to_string())
            .collect();
        let mut sorted = codes.clone();
        sorted.sort();
        assert_eq!(codes, sorted);
        assert_eq!(codes[0], "00");
        assert_eq!(codes[5], "12");
    }

    #[test]
    fn cap_is_enforced() {
        let c3 = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(matches!(
            enumerate_orientations(&c3, 2),
            Err(OrientationError::CapExceeded { edges: 3, cap: 2 })
        ));
    }

    #[test]
    fn digits_mean_what_they_say() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let m: MixedGraph = "12"
            .parse::<OrientationCode>()
            .unwrap()
            .decode(&p3)
            .unwrap();
        assert_eq!(m.link(0, 1), Some(Link::Out));
        assert_eq!(m.link(1, 2), Some(Link::In));
        assert!("13".parse::<OrientationCode>().is_err());
        assert!(matches!(
            "0".parse::<OrientationCode>().unwrap().decode(&p3),
            Err(OrientationError::LengthMismatch { code: 1, edges: 2 })
        ));
    }

    proptest! {
        #[test]
        fn decode_inverts_encode(
            pairs in proptest::collection::vec((0usize..7, 0usize..7, 0u8..3), 0..15)
        ) {
            let mut g = MixedGraph::new(7);
            for (u, v, kind) in pairs {
                if u == v || g.link(u, v).is_some() {
                    continue;
                }
                match kind {
                    0 => g.add_edge(u, v).unwrap(),
                    1 => g.add_arc(u, v).unwrap(),
                    _ => g.add_arc(v, u).unwrap(),
                }
            }
            let code = OrientationCode::encode(&g);
            prop_assert_eq!(code.decode(&g.underlying()).unwrap(), g);
            let reparsed: OrientationCode = code.to_string().parse().unwrap();
            prop_assert_eq!(reparsed, code);
        }
    }
}
