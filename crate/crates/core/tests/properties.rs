use hrank::classify::{classify, h_rank, underlying_rank};
use hrank::mixedgraph::MixedGraph;
use proptest::prelude::*;

fn mixed_graph(max_n: usize) -> impl Strategy<Value = MixedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u8..4, n * (n - 1) / 2).prop_map(move |states| {
            let mut g = MixedGraph::new(n);
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            for ((u, v), s) in pairs.zip(states) {
                match s {
                    1 => g.add_edge(u, v).unwrap(),
                    2 => g.add_arc(u, v).unwrap(),
                    3 => g.add_arc(v, u).unwrap(),
                    _ => {}
                }
            }
            g
        })
    })
}

fn relabel(g: &MixedGraph, perm: &[usize]) -> MixedGraph {
    let mut h = MixedGraph::new(g.n());
    for (u, v) in g.undirected_edges() {
        h.add_edge(perm[u], perm[v]).unwrap();
    }
    for (u, v) in g.arcs() {
        h.add_arc(perm[u], perm[v]).unwrap();
    }
    h
}

fn reversed(g: &MixedGraph) -> MixedGraph {
    let mut h = MixedGraph::new(g.n());
    for (u, v) in g.undirected_edges() {
        h.add_edge(u, v).unwrap();
    }
    for (u, v) in g.arcs() {
        h.add_arc(v, u).unwrap();
    }
    h
}

fn disjoint_union(a: &MixedGraph, b: &MixedGraph) -> MixedGraph {
    let off = a.n();
    let mut g = MixedGraph::new(off + b.n());
    for (u, v) in a.undirected_edges() {
        g.add_edge(u, v).unwrap();
    }
    for (u, v) in a.arcs() {
        g.add_arc(u, v).unwrap();
    }
    for (u, v) in b.undirected_edges() {
        g.add_edge(u + off, v + off).unwrap();
    }
    for (u, v) in b.arcs() {
        g.add_arc(u + off, v + off).unwrap();
    }
    g
}

proptest! {
    #[test]
    fn bound_and_verdicts_hold(g in mixed_graph(8)) {
        let r = classify(&g);
        prop_assert!(r.bound_ok);
        prop_assert_eq!(r.upper_by_rank, r.upper_by_conditions);
        prop_assert_eq!(r.lower_by_rank, r.lower_by_conditions);
        prop_assert!(r.rk <= g.n() && r.r <= g.n());
    }

    #[test]
    fn relabeling_preserves_ranks(g in mixed_graph(7), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = relabel(&g, &perm);
        prop_assert_eq!(h_rank(&h), h_rank(&g));
        prop_assert_eq!(underlying_rank(&h.underlying()), underlying_rank(&g.underlying()));
    }

    #[test]
    fn reversing_every_arc_keeps_the_rank(g in mixed_graph(8)) {
        prop_assert_eq!(h_rank(&reversed(&g)), h_rank(&g));
    }

    #[test]
    fn rank_is_additive_over_disjoint_unions(a in mixed_graph(5), b in mixed_graph(5)) {
        let u = disjoint_union(&a, &b);
        prop_assert_eq!(h_rank(&u), h_rank(&a) + h_rank(&b));
        let (ra, rb, ru) = (classify(&a), classify(&b), classify(&u));
        prop_assert_eq!(ru.upper_by_rank, ra.upper_by_rank && rb.upper_by_rank);
        prop_assert_eq!(ru.lower_by_rank, ra.lower_by_rank && rb.lower_by_rank);
    }
}
