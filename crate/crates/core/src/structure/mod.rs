//! Structural invariants of the underlying graph: cycle-space dimension,
//! matching number, cycle detection and signatures, cycle contraction, and
//! δ-transformations.

mod contraction;
mod cycles;
mod delta;
mod matching;

pub use contraction::{contract_cycles, ContractionPair};
pub use cycles::{
    blocks, detect_cycles, on_cycle, orientation_counts, signature, Block, Cycle, CycleOrientation,
    CycleSet,
};
pub use delta::{
    crucial_subgraph_exists, crucial_subgraph_search, delta_transform, is_cycle_union, DeltaTrace,
};
pub use matching::matching_number;

use thiserror::Error;

use crate::mixedgraph::{UnderlyingGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("cycles are not pairwise vertex-disjoint")]
    CyclesNotDisjoint,
    #[error("vertex {0} is not a pendant vertex")]
    NotPendant(Vertex),
}

/// `d(G) = |E| - |V| + ω(G)`
pub fn cycle_space_dim(g: &UnderlyingGraph) -> usize {
    g.edge_count() + g.component_count() - g.n()
}
