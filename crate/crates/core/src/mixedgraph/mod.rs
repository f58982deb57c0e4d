//! Mixed graphs: simple graphs in which every edge is either undirected or
//! an arc, together with their direction-erased underlying graphs.
//!
//! Vertices are the contiguous integers `0..n`. Undirected edges are stored
//! with the smaller endpoint first and arcs as `(tail, head)`, both in sorted
//! sets, so iteration order is canonical.

mod graph6;
mod text;

pub use graph6::{parse_graph6, to_graph6};
pub use text::{parse_mixed_graph, write_mixed_graph, ParseError};

use std::collections::BTreeSet;

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertices {0} and {1} are already joined")]
    DuplicatePair(Vertex, Vertex),
}

/// How a pair of adjacent vertices is joined in a mixed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Link {
    Undirected,
    /// Arc from the first queried vertex to the second.
    Out,
    /// Arc from the second queried vertex to the first.
    In,
}

/// A mixed graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MixedGraph {
    n: usize,
    undirected: BTreeSet<(Vertex, Vertex)>,
    arcs: BTreeSet<(Vertex, Vertex)>,
}

impl MixedGraph {
    /// Edgeless mixed graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        MixedGraph {
            n,
            ..Default::default()
        }
    }

    pub fn from_parts(
        n: usize,
        undirected: impl IntoIterator<Item = (Vertex, Vertex)>,
        arcs: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut g = MixedGraph::new(n);
        for (u, v) in undirected {
            g.add_edge(u, v)?;
        }
        for (u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    fn check_pair(&self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.link(u, v).is_some() {
            return Err(GraphError::DuplicatePair(u, v));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        self.undirected.insert((u.min(v), u.max(v)));
        Ok(())
    }

    /// Adds the arc `u -> v`.
    pub fn add_arc(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        self.arcs.insert((u, v));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn undirected_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.undirected.iter().copied()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn undirected_count(&self) -> usize {
        self.undirected.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn edge_count(&self) -> usize {
        self.undirected.len() + self.arcs.len()
    }

    /// True when there are no undirected edges, i.e. the graph is an oriented
    /// graph. The edgeless graph counts as oriented.
    pub fn is_oriented(&self) -> bool {
        self.undirected.is_empty()
    }

    /// The link between `u` and `v`, read from `u`'s side.
    pub fn link(&self, u: Vertex, v: Vertex) -> Option<Link> {
        if self.undirected.contains(&(u.min(v), u.max(v))) {
            Some(Link::Undirected)
        } else if self.arcs.contains(&(u, v)) {
            Some(Link::Out)
        } else if self.arcs.contains(&(v, u)) {
            Some(Link::In)
        } else {
            None
        }
    }

    /// The direction-erased graph.
    pub fn underlying(&self) -> UnderlyingGraph {
        let edges = self
            .undirected
            .iter()
            .copied()
            .chain(self.arcs.iter().map(|&(u, v)| (u.min(v), u.max(v))));
        UnderlyingGraph::from_normalized(self.n, edges.collect())
    }

    /// Induced mixed subgraph on the vertices not in `removed`. The returned
    /// map sends each new vertex id to its id in `self`.
    pub fn delete_vertices(&self, removed: &[Vertex]) -> (MixedGraph, Vec<Vertex>) {
        let keep = complement(self.n, removed);
        (self.induced(&keep), keep)
    }

    /// Induced mixed subgraph on `keep` (sorted, distinct), relabeled
    /// `keep[i] -> i`.
    pub fn induced(&self, keep: &[Vertex]) -> MixedGraph {
        let index = relabeling(self.n, keep);
        let mut g = MixedGraph::new(keep.len());
        for &(u, v) in &self.undirected {
            if let (Some(a), Some(b)) = (index[u], index[v]) {
                g.undirected.insert((a.min(b), a.max(b)));
            }
        }
        for &(u, v) in &self.arcs {
            if let (Some(a), Some(b)) = (index[u], index[v]) {
                g.arcs.insert((a, b));
            }
        }
        g
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UnderlyingGraph {
    n: usize,
    edges: BTreeSet<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
}

impl UnderlyingGraph {
    pub fn new(n: usize) -> Self {
        UnderlyingGraph::from_normalized(n, BTreeSet::new())
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicatePair(u, v));
            }
        }
        Ok(UnderlyingGraph::from_normalized(n, set))
    }

    fn from_normalized(n: usize, edges: BTreeSet<(Vertex, Vertex)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        UnderlyingGraph {
            n,
            edges,
            adjacency,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    /// Position of each edge in the canonical sorted order.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges
            .contains(&key)
            .then(|| self.edges.range(..key).count())
    }

    /// An undirected mixed graph with the same edges.
    pub fn to_mixed(&self) -> MixedGraph {
        MixedGraph {
            n: self.n,
            undirected: self.edges.clone(),
            arcs: BTreeSet::new(),
        }
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Vertices of degree exactly one.
    pub fn pendant_vertices(&self) -> BTreeSet<Vertex> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices adjacent to a pendant vertex.
    pub fn quasi_pendant_vertices(&self) -> BTreeSet<Vertex> {
        self.pendant_vertices()
            .into_iter()
            .map(|x| self.adjacency[x][0])
            .collect()
    }

    pub fn delete_vertices(&self, removed: &[Vertex]) -> (UnderlyingGraph, Vec<Vertex>) {
        let keep = complement(self.n, removed);
        (self.induced(&keep), keep)
    }

    /// Induced subgraph on `keep` (sorted, distinct), relabeled `keep[i] -> i`.
    pub fn induced(&self, keep: &[Vertex]) -> UnderlyingGraph {
        let index = relabeling(self.n, keep);
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| match (index[u], index[v]) {
                (Some(a), Some(b)) => Some((a.min(b), a.max(b))),
                _ => None,
            })
            .collect();
        UnderlyingGraph::from_normalized(keep.len(), edges)
    }

    /// Neighborhood of `v` as a bitmask. Requires `n <= 64`.
    pub(crate) fn neighbor_mask(&self, v: Vertex) -> u64 {
        self.adjacency[v].iter().fold(0, |m, &w| m | (1 << w))
    }
}

fn complement(n: usize, removed: &[Vertex]) -> Vec<Vertex> {
    let mut gone = vec![false; n];
    for &v in removed {
        if v < n {
            gone[v] = true;
        }
    }
    (0..n).filter(|&v| !gone[v]).collect()
}

fn relabeling(n: usize, keep: &[Vertex]) -> Vec<Option<Vertex>> {
    let mut index = vec![None; n];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = Some(i);
    }
    index
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4_one_arc() -> MixedGraph {
        MixedGraph::from_parts(4, [(0, 1), (1, 2), (2, 3)], [(3, 0)]).unwrap()
    }

    #[test]
    fn underlying_erases_direction() {
        let g = MixedGraph::from_parts(2, [], [(0, 1)]).unwrap();
        let u = g.underlying();
        assert_eq!(u.edges().collect::<Vec<_>>(), vec![(0, 1)]);

        let c4 = c4_one_arc().underlying();
        assert_eq!(
            c4.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 3), (1, 2), (2, 3)]
        );
        assert_eq!(c4.to_mixed().underlying(), c4);

        let empty = MixedGraph::new(3).underlying();
        assert_eq!(empty.n(), 3);
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn rejects_invalid_pairs() {
        let mut g = MixedGraph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::Loop(1)));
        assert!(matches!(
            g.add_arc(0, 3),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        g.add_arc(0, 1).unwrap();
        assert_eq!(g.add_arc(1, 0), Err(GraphError::DuplicatePair(1, 0)));
        assert_eq!(g.add_edge(1, 0), Err(GraphError::DuplicatePair(1, 0)));
        assert!(UnderlyingGraph::from_edges(2, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn link_reads_from_first_vertex() {
        let g = c4_one_arc();
        assert_eq!(g.link(0, 1), Some(Link::Undirected));
        assert_eq!(g.link(3, 0), Some(Link::Out));
        assert_eq!(g.link(0, 3), Some(Link::In));
        assert_eq!(g.link(0, 2), None);
    }

    #[test]
    fn components_partition_vertices() {
        // C_3 plus a disjoint K_2
        let g = UnderlyingGraph::from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(UnderlyingGraph::new(4).component_count(), 4);
        let p5 = UnderlyingGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(p5.component_count(), 1);
        assert_eq!(UnderlyingGraph::new(0).component_count(), 0);
    }

    #[test]
    fn pendant_and_quasi_pendant() {
        let p3 = UnderlyingGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.pendant_vertices(), BTreeSet::from([0, 2]));
        assert_eq!(p3.quasi_pendant_vertices(), BTreeSet::from([1]));

        let c4 = c4_one_arc().underlying();
        assert!(c4.pendant_vertices().is_empty());
        assert!(c4.quasi_pendant_vertices().is_empty());

        let star = UnderlyingGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.pendant_vertices(), BTreeSet::from([1, 2, 3]));
        assert_eq!(star.quasi_pendant_vertices(), BTreeSet::from([0]));
    }

    #[test]
    fn delete_vertices_keeps_orientation() {
        let (p3, map) = c4_one_arc().delete_vertices(&[1]);
        assert_eq!(map, vec![0, 2, 3]);
        // old 2-3 undirected, old 3->0 arc
        assert_eq!(p3.link(1, 2), Some(Link::Undirected));
        assert_eq!(p3.link(2, 0), Some(Link::Out));
        assert_eq!(p3.edge_count(), 2);

        let (same, map) = c4_one_arc().delete_vertices(&[]);
        assert_eq!(same, c4_one_arc());
        assert_eq!(map, vec![0, 1, 2, 3]);

        let (none, map) = c4_one_arc().delete_vertices(&[0, 1, 2, 3]);
        assert_eq!(none.n(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn edge_index_is_sorted_position() {
        let c4 = c4_one_arc().underlying();
        assert_eq!(c4.edge_index(3, 0), Some(1));
        assert_eq!(c4.edge_index(2, 3), Some(3));
        assert_eq!(c4.edge_index(0, 2), None);
    }
}
