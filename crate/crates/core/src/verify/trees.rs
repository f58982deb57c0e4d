//! Unlabeled trees, generated by leaf extension and deduplicated by a
//! center-rooted canonical string.

use std::collections::BTreeMap;

use crate::mixedgraph::{UnderlyingGraph, Vertex};

/// One representative of every isomorphism class of trees on `n` vertices.
pub fn nonisomorphic_trees(n: usize) -> Vec<UnderlyingGraph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![UnderlyingGraph::new(1)];
    for size in 1..n {
        let mut next = BTreeMap::new();
        for t in &level {
            for v in 0..size {
                let edges = t.edges().chain([(v, size)]);
                let grown = UnderlyingGraph::from_edges(size + 1, edges).expect("leaf is new");
                next.entry(canonical_form(&grown)).or_insert(grown);
            }
        }
        level = next.into_values().collect();
    }
    level
}

/// Canonical string of a tree, equal for isomorphic trees.
pub fn canonical_form(t: &UnderlyingGraph) -> String {
    centers(t)
        .into_iter()
        .map(|c| encode(t, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn centers(t: &UnderlyingGraph) -> Vec<Vertex> {
    let n = t.n();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

fn encode(t: &UnderlyingGraph, v: Vertex, parent: Vertex) -> String {
    let mut children: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(t, w, v))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (1..=9).map(|n| nonisomorphic_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
    }

    #[test]
    fn relabeling_keeps_the_form() {
        let a = UnderlyingGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = UnderlyingGraph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        let star = UnderlyingGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&star));
    }
}
