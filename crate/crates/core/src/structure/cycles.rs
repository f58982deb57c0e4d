//! Biconnected blocks, cycle detection and cycle signatures.

use std::collections::VecDeque;

use crate::mixedgraph::{Link, MixedGraph, UnderlyingGraph, Vertex};

use super::StructureError;

/// A biconnected block: a bridge, or a 2-connected subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    /// A 2-connected block with as many edges as vertices is a cycle.
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3 && self.edges.len() == self.vertices.len()
    }
}

/// Biconnected blocks of `g` (isolated vertices belong to no block).
pub fn blocks(g: &UnderlyingGraph) -> Vec<Block> {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut clock = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut out = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        // (vertex, parent, next neighbor index)
        let mut frames: Vec<(Vertex, Vertex, usize)> = vec![(root, UNSEEN, 0)];
        while let Some(frame) = frames.last_mut() {
            let (v, parent, idx) = *frame;
            if let Some(&w) = g.neighbors(v).get(idx) {
                frame.2 += 1;
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(p, _, _)) = frames.last() {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut edges = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        edges.push((e.0.min(e.1), e.0.max(e.1)));
                        if e == (p, v) {
                            break;
                        }
                    }
                    edges.sort_unstable();
                    let mut vertices: Vec<Vertex> =
                        edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                    vertices.sort_unstable();
                    vertices.dedup();
                    out.push(Block { vertices, edges });
                }
            }
        }
    }
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out
}

/// Per-vertex flag: does the vertex lie on some cycle? A vertex is on a
/// cycle exactly when it belongs to a block that is not a bridge.
pub fn on_cycle(g: &UnderlyingGraph) -> Vec<bool> {
    let mut flags = vec![false; g.n()];
    for block in blocks(g).iter().filter(|b| !b.is_bridge()) {
        for &v in &block.vertices {
            flags[v] = true;
        }
    }
    flags
}

/// A cycle as a cyclic vertex sequence in canonical traversal order: it
/// starts at its smallest vertex and proceeds toward the smaller of that
/// vertex's two cycle neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<Vertex>,
}

impl Cycle {
    /// Canonicalizes any rotation or reflection of a cyclic sequence.
    /// Panics on fewer than three vertices.
    pub fn canonical(sequence: &[Vertex]) -> Cycle {
        assert!(sequence.len() >= 3, "a cycle has at least three vertices");
        let k = sequence.len();
        let (start, _) = sequence
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| *v)
            .expect("non-empty");
        let next = sequence[(start + 1) % k];
        let prev = sequence[(start + k - 1) % k];
        let vertices = if next < prev {
            (0..k).map(|i| sequence[(start + i) % k]).collect()
        } else {
            (0..k).map(|i| sequence[(start + k - i) % k]).collect()
        };
        Cycle { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// Consecutive pairs along the traversal, closing edge last.
    pub fn steps(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

/// Cycle structure of an underlying graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSet {
    cycles: Vec<Cycle>,
    pairwise_disjoint: bool,
}

impl CycleSet {
    /// When `pairwise_disjoint` holds these are all the cycles of the graph;
    /// otherwise they are the fundamental cycles of a BFS spanning forest.
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn pairwise_disjoint(&self) -> bool {
        self.pairwise_disjoint
    }

    /// Index of the cycle through `v`, when the cycles are disjoint.
    pub fn cycle_of(&self, v: Vertex) -> Option<usize> {
        self.cycles.iter().position(|c| c.contains(v))
    }
}

/// Decides whether all cycles of `g` are pairwise vertex-disjoint.
///
/// That holds iff every block is a bridge or a cycle and no two cycle blocks
/// share a (cut) vertex.
pub fn detect_cycles(g: &UnderlyingGraph) -> CycleSet {
    let all = blocks(g);
    let mut seen = vec![false; g.n()];
    let mut disjoint = true;
    let mut cycles = Vec::new();
    for block in &all {
        if block.is_bridge() {
            continue;
        }
        if !block.is_cycle() {
            disjoint = false;
            break;
        }
        for &v in &block.vertices {
            if std::mem::replace(&mut seen[v], true) {
                disjoint = false;
            }
        }
        cycles.push(cycle_from_block(block));
    }
    if !disjoint {
        return CycleSet {
            cycles: fundamental_cycles(g),
            pairwise_disjoint: false,
        };
    }
    cycles.sort();
    CycleSet {
        cycles,
        pairwise_disjoint: true,
    }
}

fn cycle_from_block(block: &Block) -> Cycle {
    let neighbors = |v: Vertex| {
        block
            .edges
            .iter()
            .filter_map(move |&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
    };
    let start = block.vertices[0];
    let mut sequence = vec![start];
    let mut prev = start;
    let mut cur = neighbors(start).min().expect("cycle vertex has neighbors");
    while cur != start {
        sequence.push(cur);
        let next = neighbors(cur)
            .find(|&w| w != prev)
            .expect("cycle vertex has degree two");
        prev = cur;
        cur = next;
    }
    Cycle::canonical(&sequence)
}

/// One cycle per non-tree edge of a BFS spanning forest.
fn fundamental_cycles(g: &UnderlyingGraph) -> Vec<Cycle> {
    let n = g.n();
    let mut parent = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    let mut tree_edge = std::collections::BTreeSet::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    depth[w] = depth[v] + 1;
                    tree_edge.insert((v.min(w), v.max(w)));
                    queue.push_back(w);
                }
            }
        }
    }
    let mut cycles = Vec::new();
    for (u, v) in g.edges() {
        if tree_edge.contains(&(u, v)) {
            continue;
        }
        let (mut a, mut b) = (u, v);
        let mut left = vec![a];
        let mut right = vec![b];
        while a != b {
            if depth[a] >= depth[b] {
                a = parent[a].expect("non-root has a parent");
                left.push(a);
            } else {
                b = parent[b].expect("non-root has a parent");
                right.push(b);
            }
        }
        right.pop();
        left.extend(right.into_iter().rev());
        cycles.push(Cycle::canonical(&left));
    }
    cycles.sort();
    cycles
}

/// Forward and backward arc counts along a traversal of a mixed cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleOrientation {
    pub forward: usize,
    pub backward: usize,
}

impl CycleOrientation {
    /// `|f - b|`
    pub fn signature(&self) -> usize {
        self.forward.abs_diff(self.backward)
    }
}

/// Counts arcs agreeing (`f`) and opposing (`b`) the traversal `sequence`.
/// Undirected edges count toward neither.
pub fn orientation_counts(
    g: &MixedGraph,
    sequence: &[Vertex],
) -> Result<CycleOrientation, StructureError> {
    let k = sequence.len();
    if k < 3 {
        return Err(StructureError::NotACycle(
            "fewer than three vertices".into(),
        ));
    }
    let mut sorted = sequence.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return Err(StructureError::NotACycle("repeated vertex".into()));
    }
    if let Some(&v) = sorted.last().filter(|&&v| v >= g.n()) {
        return Err(StructureError::NotACycle(format!(
            "vertex {v} out of range"
        )));
    }
    let mut counts = CycleOrientation {
        forward: 0,
        backward: 0,
    };
    for i in 0..k {
        let (u, v) = (sequence[i], sequence[(i + 1) % k]);
        match g.link(u, v) {
            Some(Link::Out) => counts.forward += 1,
            Some(Link::In) => counts.backward += 1,
            Some(Link::Undirected) => {}
            None => {
                return Err(StructureError::NotACycle(format!(
                    "vertices {u} and {v} are not adjacent"
                )))
            }
        }
    }
    Ok(counts)
}

/// Signature `η = |f - b|` of the mixed cycle traversed by `sequence`.
pub fn signature(g: &MixedGraph, sequence: &[Vertex]) -> Result<usize, StructureError> {
    orientation_counts(g, sequence).map(|c| c.signature())
}
