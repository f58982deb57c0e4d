//! Brute-force oracles: simple-cycle enumeration, maximum-matching counts,
//! and the subgraph sums that give characteristic-polynomial coefficients.

use std::collections::HashMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::mixedgraph::{Link, MixedGraph, UnderlyingGraph, Vertex};
use crate::structure::Cycle;

/// Largest order accepted by the counting oracles.
pub const ORACLE_N_MAX: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph has {n} vertices, above the oracle limit of {ORACLE_N_MAX}")]
pub struct OracleCapError {
    pub n: usize,
}

fn masks(g: &UnderlyingGraph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbor_mask(v)).collect()
}

/// Visits every simple cycle through `start` whose other vertices lie in
/// `allowed`, once per cycle, as a vertex sequence beginning at `start`.
/// Stops early when `visit` returns false; returns false in that case.
pub(crate) fn cycles_through_mask(
    nbr: &[u64],
    start: Vertex,
    allowed: u64,
    visit: &mut dyn FnMut(&[Vertex]) -> bool,
) -> bool {
    let mut path = vec![start];
    extend(nbr, start, allowed & !(1 << start), &mut path, visit)
}

fn extend(
    nbr: &[u64],
    start: Vertex,
    free: u64,
    path: &mut Vec<Vertex>,
    visit: &mut dyn FnMut(&[Vertex]) -> bool,
) -> bool {
    let last = *path.last().expect("path starts non-empty");
    if path.len() >= 3 && nbr[last] & (1 << start) != 0 && path[1] < last && !visit(path) {
        return false;
    }
    let mut next = nbr[last] & free;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        path.push(w);
        let go_on = extend(nbr, start, free & !(1 << w), path, visit);
        path.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// Every simple cycle of `g`, each once, in canonical form.
///
/// # Panics
///
/// If `g` has more than 64 vertices.
pub fn simple_cycles(g: &UnderlyingGraph) -> Vec<Cycle> {
    assert!(g.n() <= 64, "simple_cycles supports at most 64 vertices");
    let nbr = masks(g);
    let mut out = Vec::new();
    for v in 0..g.n() {
        let above = !((2u128 << v) - 1) as u64;
        cycles_through_mask(&nbr, v, above, &mut |c| {
            out.push(Cycle::canonical(c));
            true
        });
    }
    out.sort_by(|a, b| a.vertices().cmp(b.vertices()));
    out
}

/// Number of simple cycles through `x`, counted up to `limit`.
pub fn cycles_through(g: &UnderlyingGraph, x: Vertex, limit: usize) -> usize {
    assert!(g.n() <= 64, "cycles_through supports at most 64 vertices");
    let nbr = masks(g);
    let mut found = 0;
    if limit > 0 {
        cycles_through_mask(&nbr, x, u64::MAX, &mut |_| {
            found += 1;
            found < limit
        });
    }
    found
}

/// Number of distinct pairs of edges at `x` that lie together on some cycle.
pub fn cycle_edge_pairs_at(g: &UnderlyingGraph, x: Vertex) -> usize {
    let (rest, map) = g.delete_vertices(&[x]);
    let mut label = vec![usize::MAX; g.n()];
    for (i, comp) in rest.components().into_iter().enumerate() {
        for v in comp {
            label[map[v]] = i;
        }
    }
    let nb = g.neighbors(x);
    let mut pairs = 0;
    for (i, &a) in nb.iter().enumerate() {
        pairs += nb[i + 1..]
            .iter()
            .filter(|&&b| label[a] == label[b])
            .count();
    }
    pairs
}

/// `|𝓜|`, the number of maximum matchings.
pub fn count_maximum_matchings(g: &UnderlyingGraph) -> Result<u64, OracleCapError> {
    if g.n() > ORACLE_N_MAX {
        return Err(OracleCapError { n: g.n() });
    }
    let nbr = masks(g);
    let mut memo = HashMap::new();
    Ok(best_count(((1u32 << g.n()) - 1) as u64, &nbr, &mut memo).1)
}

fn best_count(mask: u64, nbr: &[u64], memo: &mut HashMap<u64, (usize, u64)>) -> (usize, u64) {
    if mask == 0 {
        return (0, 1);
    }
    if let Some(&hit) = memo.get(&mask) {
        return hit;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    let mut result = best_count(rest, nbr, memo);
    let mut partners = nbr[v] & rest;
    while partners != 0 {
        let u = partners.trailing_zeros();
        partners &= partners - 1;
        let (size, count) = best_count(rest & !(1 << u), nbr, memo);
        match (size + 1).cmp(&result.0) {
            std::cmp::Ordering::Greater => result = (size + 1, count),
            std::cmp::Ordering::Equal => result.1 += count,
            std::cmp::Ordering::Less => {}
        }
    }
    memo.insert(mask, result);
    result
}

struct SubgraphSums<'a> {
    nbr: Vec<u64>,
    /// `Some` for the Hermitian sum, where odd-signature cycles drop out.
    links: Option<&'a MixedGraph>,
    sums: Vec<i128>,
}

impl SubgraphSums<'_> {
    /// `used` vertices covered so far, `components` of them, `cycles` of
    /// those cycles, and `half_eta` the sum of η/2 over the cycles.
    fn walk(&mut self, avail: u64, used: usize, components: usize, cycles: u32, half_eta: usize) {
        if avail == 0 {
            let sign = if (components + half_eta).is_multiple_of(2) {
                1
            } else {
                -1
            };
            self.sums[used] += sign * (1i128 << cycles);
            return;
        }
        let v = avail.trailing_zeros() as usize;
        let rest = avail & !(1 << v);
        self.walk(rest, used, components, cycles, half_eta);
        let mut partners = self.nbr[v] & rest;
        while partners != 0 {
            let u = partners.trailing_zeros();
            partners &= partners - 1;
            self.walk(rest & !(1 << u), used + 2, components + 1, cycles, half_eta);
        }
        let mut found: Vec<(u64, usize, usize)> = Vec::new();
        let links = self.links;
        cycles_through_mask(&self.nbr, v, rest, &mut |c| {
            let eta = links.map_or(0, |g| cycle_signature(g, c));
            if eta.is_multiple_of(2) {
                let covered = c.iter().fold(0u64, |m, &w| m | 1 << w);
                found.push((covered, c.len(), eta / 2));
            }
            true
        });
        for (covered, len, half) in found {
            self.walk(
                avail & !covered,
                used + len,
                components + 1,
                cycles + 1,
                half_eta + half,
            );
        }
    }
}

fn cycle_signature(g: &MixedGraph, c: &[Vertex]) -> usize {
    let mut balance = 0i64;
    for i in 0..c.len() {
        match g.link(c[i], c[(i + 1) % c.len()]) {
            Some(Link::Out) => balance += 1,
            Some(Link::In) => balance -= 1,
            _ => {}
        }
    }
    balance.unsigned_abs() as usize
}

fn subgraph_sums(nbr: Vec<u64>, links: Option<&MixedGraph>) -> Vec<BigInt> {
    let n = nbr.len();
    assert!(
        n <= ORACLE_N_MAX,
        "subgraph sums support at most {ORACLE_N_MAX} vertices"
    );
    let mut s = SubgraphSums {
        nbr,
        links,
        sums: vec![0; n + 1],
    };
    s.walk(((1u32 << n) - 1) as u64, 0, 0, 0, 0);
    s.sums.into_iter().map(BigInt::from).collect()
}

/// `Σ (-1)^{η(B)/2 + ω(B)} 2^{c(B)}` over basic subgraphs `B` on `j`
/// vertices (components are edges or even-signature cycles), for every
/// `j` in `0..=n`. Entry 0 is 1 (the empty subgraph).
///
/// # Panics
///
/// If `g` has more than [`ORACLE_N_MAX`] vertices.
pub fn basic_subgraph_coefficients(g: &MixedGraph) -> Vec<BigInt> {
    subgraph_sums(masks(&g.underlying()), Some(g))
}

pub fn basic_subgraph_coefficient(g: &MixedGraph, j: usize) -> BigInt {
    basic_subgraph_coefficients(g).swap_remove(j)
}

/// `Σ (-1)^{c₁(H) + c(H)} 2^{c(H)}` over elementary subgraphs `H` on `j`
/// vertices (components are edges or cycles), for every `j` in `0..=n`.
///
/// # Panics
///
/// If `g` has more than [`ORACLE_N_MAX`] vertices.
pub fn elementary_subgraph_coefficients(g: &UnderlyingGraph) -> Vec<BigInt> {
    subgraph_sums(masks(g), None)
}

pub fn elementary_subgraph_coefficient(g: &UnderlyingGraph, j: usize) -> BigInt {
    elementary_subgraph_coefficients(g).swap_remove(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> UnderlyingGraph {
        UnderlyingGraph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn cycle_enumeration() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let cs = simple_cycles(&c4);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].vertices(), &[0, 1, 2, 3]);

        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(simple_cycles(&k4).len(), 7);
        assert_eq!(cycles_through(&k4, 0, usize::MAX), 6);
        assert_eq!(cycles_through(&k4, 0, 2), 2);

        let tree = graph(4, &[(0, 1), (1, 2), (1, 3)]);
        assert!(simple_cycles(&tree).is_empty());
        assert_eq!(cycles_through(&tree, 1, 5), 0);
    }

    #[test]
    fn edge_pairs_on_cycles() {
        // K4 minus the edge 2-3: vertex 2 has degree 2 but lies on two cycles
        let g = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(cycles_through(&g, 2, usize::MAX), 2);
        assert_eq!(cycle_edge_pairs_at(&g, 2), 1);
        assert_eq!(cycle_edge_pairs_at(&g, 0), 3);
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(cycle_edge_pairs_at(&p3, 1), 0);
    }

    #[test]
    fn maximum_matching_counts() {
        assert_eq!(
            count_maximum_matchings(&graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])),
            Ok(2)
        );
        assert_eq!(
            count_maximum_matchings(&graph(3, &[(0, 1), (1, 2), (0, 2)])),
            Ok(3)
        );
        assert_eq!(
            count_maximum_matchings(&graph(4, &[(0, 1), (1, 2), (2, 3)])),
            Ok(1)
        );
        assert_eq!(count_maximum_matchings(&graph(2, &[])), Ok(1));
        assert_eq!(
            count_maximum_matchings(&UnderlyingGraph::new(17)),
            Err(OracleCapError { n: 17 })
        );
    }

    #[test]
    fn basic_sums() {
        let k2 = graph(2, &[(0, 1)]).to_mixed();
        assert_eq!(basic_subgraph_coefficient(&k2, 2), big(-1));
        let c3 = graph(3, &[(0, 1), (1, 2), (0, 2)]).to_mixed();
        assert_eq!(basic_subgraph_coefficient(&c3, 3), big(-2));
        assert_eq!(basic_subgraph_coefficient(&c3, 1), big(0));
        assert_eq!(basic_subgraph_coefficient(&c3, 0), big(1));

        // a single arc on a triangle has odd signature, so the cycle drops out
        let mut t = MixedGraph::new(3);
        t.add_arc(0, 1).unwrap();
        t.add_edge(1, 2).unwrap();
        t.add_edge(0, 2).unwrap();
        assert_eq!(basic_subgraph_coefficient(&t, 3), big(0));
        assert_eq!(basic_subgraph_coefficient(&t, 2), big(-3));
    }

    #[test]
    fn elementary_sums() {
        assert_eq!(
            elementary_subgraph_coefficient(&graph(2, &[(0, 1)]), 2),
            big(-1)
        );
        let c3 = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(elementary_subgraph_coefficient(&c3, 3), big(-2));
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(
            elementary_subgraph_coefficients(&c4),
            vec![big(1), big(0), big(-4), big(0), big(0)]
        );
    }
}
