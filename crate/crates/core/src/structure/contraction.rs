use std::collections::BTreeSet;

use crate::mixedgraph::{UnderlyingGraph, Vertex};

use super::{cycle_space_dim, CycleSet, StructureError};

/// `T_G` (each cycle contracted to a marked vertex) and `[T_G]` (`T_G` with
/// the marked vertices deleted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionPair {
    pub t_graph: UnderlyingGraph,
    /// Contracted vertices of `t_graph`, one per cycle in `CycleSet` order.
    pub marked: Vec<Vertex>,
    pub bracket_graph: UnderlyingGraph,
    /// Vertex of `t_graph` that each vertex of `G` maps to.
    pub vertex_map: Vec<Vertex>,
}

/// Contracts every cycle of `g` to a single vertex.
///
/// Ids of `T_G` follow the smallest original vertex they contain.
pub fn contract_cycles(
    g: &UnderlyingGraph,
    cs: &CycleSet,
) -> Result<ContractionPair, StructureError> {
    if !cs.pairwise_disjoint() {
        return Err(StructureError::CyclesNotDisjoint);
    }
    let n = g.n();
    let mut cycle_id = vec![None; n];
    for (i, c) in cs.cycles().iter().enumerate() {
        for &v in c.vertices() {
            cycle_id[v] = Some(i);
        }
    }
    let mut vertex_map = vec![0; n];
    let mut contracted: Vec<Option<Vertex>> = vec![None; cs.cycles().len()];
    let mut next = 0;
    for v in 0..n {
        vertex_map[v] = match cycle_id[v] {
            Some(c) => *contracted[c].get_or_insert_with(|| {
                next += 1;
                next - 1
            }),
            None => {
                next += 1;
                next - 1
            }
        };
    }
    let marked: Vec<Vertex> = contracted
        .into_iter()
        .map(|c| c.expect("every cycle has vertices"))
        .collect();

    let mut edges = BTreeSet::new();
    for (u, v) in g.edges() {
        let (a, b) = (vertex_map[u], vertex_map[v]);
        if a == b {
            continue;
        }
        // A second edge between the same pair would close a cycle through a
        // cycle vertex, contradicting disjointness.
        assert!(
            edges.insert((a.min(b), a.max(b))),
            "contraction produced a parallel edge"
        );
    }
    let t_graph = UnderlyingGraph::from_edges(next, edges).expect("contraction is simple");
    debug_assert_eq!(cycle_space_dim(&t_graph), 0);
    let (bracket_graph, _) = t_graph.delete_vertices(&marked);
    Ok(ContractionPair {
        t_graph,
        marked,
        bracket_graph,
        vertex_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::detect_cycles;

    fn graph(n: usize, edges: &[(usize, usize)]) -> UnderlyingGraph {
        UnderlyingGraph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn contract(g: &UnderlyingGraph) -> ContractionPair {
        contract_cycles(g, &detect_cycles(g)).unwrap()
    }

    #[test]
    fn triangle_with_pendant() {
        let g = graph(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        let pair = contract(&g);
        assert_eq!(pair.t_graph.n(), 2);
        assert_eq!(pair.t_graph.edge_count(), 1);
        assert_eq!(pair.marked, vec![0]);
        assert_eq!(pair.bracket_graph.n(), 1);
        assert_eq!(pair.bracket_graph.edge_count(), 0);
        assert_eq!(pair.vertex_map, vec![0, 0, 0, 1]);
    }

    #[test]
    fn bare_cycle() {
        let pair = contract(&graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]));
        assert_eq!(pair.t_graph.n(), 1);
        assert_eq!(pair.marked, vec![0]);
        assert_eq!(pair.bracket_graph.n(), 0);
    }

    #[test]
    fn two_triangles_joined_by_bridge() {
        let g = graph(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]);
        let pair = contract(&g);
        assert_eq!(pair.t_graph.n(), 2);
        assert!(pair.t_graph.has_edge(0, 1));
        assert_eq!(pair.marked, vec![0, 1]);
        assert_eq!(pair.bracket_graph.n(), 0);
    }

    #[test]
    fn forest_is_its_own_contraction() {
        let g = graph(4, &[(0, 1), (2, 3)]);
        let pair = contract(&g);
        assert_eq!(pair.t_graph, g);
        assert_eq!(pair.bracket_graph, g);
        assert!(pair.marked.is_empty());
    }

    #[test]
    fn rejects_crossing_cycles() {
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(
            contract_cycles(&k4, &detect_cycles(&k4)),
            Err(StructureError::CyclesNotDisjoint)
        );
    }
}
