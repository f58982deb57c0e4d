//! δ-transformations (delete a pendant vertex together with its neighbor)
//! and the search for crucial subgraphs.

use std::collections::HashSet;

use crate::mixedgraph::{UnderlyingGraph, Vertex};

use super::StructureError;

/// Deletes pendant vertex `x` and its unique neighbor. Returns the new graph
/// and the map from new to old vertex ids.
pub fn delta_transform(
    g: &UnderlyingGraph,
    x: Vertex,
) -> Result<(UnderlyingGraph, Vec<Vertex>), StructureError> {
    if x >= g.n() || g.degree(x) != 1 {
        return Err(StructureError::NotPendant(x));
    }
    let y = g.neighbors(x)[0];
    Ok(g.delete_vertices(&[x, y]))
}

/// A sequence of δ-transformations and the pendant-free graph it reaches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaTrace {
    /// `(pendant, neighbor)` pairs in the order they were deleted, in the
    /// vertex ids of the starting graph.
    pub steps: Vec<(Vertex, Vertex)>,
    /// Surviving vertices of the crucial subgraph, in starting ids.
    pub terminal: Vec<Vertex>,
}

/// Searches every order of δ-transformations for a crucial (pendant-free)
/// subgraph accepted by `target`. States are memoized on the surviving
/// vertex set, so each induced subgraph is examined once.
///
/// # Panics
///
/// If `g` has more than 64 vertices.
pub fn crucial_subgraph_search<F>(g: &UnderlyingGraph, target: F) -> Option<DeltaTrace>
where
    F: Fn(&UnderlyingGraph) -> bool,
{
    assert!(
        g.n() <= 64,
        "crucial subgraph search supports at most 64 vertices"
    );
    let nbr: Vec<u64> = (0..g.n()).map(|v| g.neighbor_mask(v)).collect();
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    let mut search = Search {
        g,
        nbr: &nbr,
        target: &target,
        dead: HashSet::new(),
        steps: Vec::new(),
    };
    search.run(all).map(|terminal| DeltaTrace {
        steps: search.steps,
        terminal,
    })
}

/// Can some series of δ-transformations reach a crucial subgraph that is the
/// disjoint union of `d(G)` cycles plus isolated vertices?
pub fn crucial_subgraph_exists(g: &UnderlyingGraph) -> Option<DeltaTrace> {
    let d = super::cycle_space_dim(g);
    crucial_subgraph_search(g, |terminal| is_cycle_union(terminal, d))
}

/// Every component is an isolated vertex or a cycle, and there are exactly
/// `cycles` cycle components. Cycle components of an induced subgraph are
/// induced cycles.
pub fn is_cycle_union(g: &UnderlyingGraph, cycles: usize) -> bool {
    let mut found = 0;
    for comp in g.components() {
        if comp.len() == 1 {
            continue;
        }
        if comp.len() < 3 || comp.iter().any(|&v| g.degree(v) != 2) {
            return false;
        }
        found += 1;
    }
    found == cycles
}

struct Search<'a, F> {
    g: &'a UnderlyingGraph,
    nbr: &'a [u64],
    target: &'a F,
    dead: HashSet<u64>,
    steps: Vec<(Vertex, Vertex)>,
}

impl<F: Fn(&UnderlyingGraph) -> bool> Search<'_, F> {
    fn run(&mut self, mask: u64) -> Option<Vec<Vertex>> {
        if self.dead.contains(&mask) {
            return None;
        }
        let mut pendants = Vec::new();
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let live = self.nbr[v] & mask;
            if live.count_ones() == 1 {
                pendants.push((v, live.trailing_zeros() as usize));
            }
        }
        if pendants.is_empty() {
            let keep = vertices(mask);
            if (self.target)(&self.g.induced(&keep)) {
                return Some(keep);
            }
        }
        for (x, y) in pendants {
            self.steps.push((x, y));
            if let Some(found) = self.run(mask & !(1 << x) & !(1 << y)) {
                return Some(found);
            }
            self.steps.pop();
        }
        self.dead.insert(mask);
        None
    }
}

fn vertices(mut mask: u64) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}
