use hrank::algebra::{char_poly, hermitian_matrix, GaussianMatrix};
use hrank::mixedgraph::{MixedGraph, UnderlyingGraph};
use hrank::structure::{cycle_space_dim, matching_number};
use hrank::verify::{count_maximum_matchings, cycles_through, simple_cycles};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, n: usize, max_edges: usize) -> UnderlyingGraph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let keep = rng.gen_range(0..=max_edges.min(pairs.len()));
    for i in 0..keep {
        let j = rng.gen_range(i..pairs.len());
        pairs.swap(i, j);
    }
    pairs.truncate(keep);
    UnderlyingGraph::from_edges(n, pairs).unwrap()
}

/// Largest matching and number of maximum matchings over all edge subsets.
fn subset_matchings(g: &UnderlyingGraph) -> (usize, u64) {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let (mut best, mut count) = (0, 0);
    for s in 0u32..1 << edges.len() {
        let mut used = 0u32;
        let mut ok = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if s & (1 << i) != 0 {
                if used & (1 << u | 1 << v) != 0 {
                    ok = false;
                    break;
                }
                used |= 1 << u | 1 << v;
            }
        }
        if !ok {
            continue;
        }
        let size = s.count_ones() as usize;
        if size > best {
            (best, count) = (size, 1);
        } else if size == best {
            count += 1;
        }
    }
    (best, count)
}

#[test]
fn matching_agrees_with_subset_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..300 {
        let n = rng.gen_range(1..=12);
        let g = random_graph(&mut rng, n, 16);
        let (best, count) = subset_matchings(&g);
        assert_eq!(matching_number(&g), best, "{:?}", g);
        assert_eq!(count_maximum_matchings(&g).unwrap(), count, "{:?}", g);
    }
}

/// `det(k I - H)` by permutation expansion, real part.
fn char_value(h: &GaussianMatrix, k: i64) -> BigInt {
    let n = h.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let entry = |i: usize, j: usize| {
        let e = &h[(i, j)];
        let diag = if i == j {
            BigInt::from(k)
        } else {
            BigInt::from(0)
        };
        (diag - &e.re, -e.im.clone())
    };
    fn walk(
        perm: &mut Vec<usize>,
        at: usize,
        sign: i64,
        entry: &dyn Fn(usize, usize) -> (BigInt, BigInt),
        acc: &mut (BigInt, BigInt),
    ) {
        if at == perm.len() {
            let mut t = (BigInt::from(sign), BigInt::from(0));
            for (r, &c) in perm.iter().enumerate() {
                let (a, b) = entry(r, c);
                t = (&t.0 * &a - &t.1 * &b, &t.0 * &b + &t.1 * &a);
            }
            acc.0 += t.0;
            acc.1 += t.1;
            return;
        }
        for i in at..perm.len() {
            perm.swap(at, i);
            walk(perm, at + 1, if i == at { sign } else { -sign }, entry, acc);
            perm.swap(at, i);
        }
    }
    let mut acc = (BigInt::from(0), BigInt::from(0));
    walk(&mut perm, 0, 1, &entry, &mut acc);
    assert_eq!(acc.1, BigInt::from(0), "Hermitian determinant is real");
    acc.0
}

#[test]
fn characteristic_polynomial_matches_determinants() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let mut g = MixedGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                match rng.gen_range(0..4) {
                    1 => g.add_edge(u, v).unwrap(),
                    2 => g.add_arc(u, v).unwrap(),
                    3 => g.add_arc(v, u).unwrap(),
                    _ => {}
                }
            }
        }
        let h = hermitian_matrix(&g);
        let p = char_poly(&h).unwrap();
        for k in -2..=(n as i64 + 1) {
            assert_eq!(p.eval(&BigInt::from(k)), char_value(&h, k), "{g:?} at {k}");
        }
    }
}

#[test]
fn complete_graph_cycle_counts() {
    // K_n has C(n, k) (k - 1)! / 2 cycles of length k
    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    for n in 3..=7usize {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let k = UnderlyingGraph::from_edges(n, edges).unwrap();
        let expected: u64 = (3..=n as u64)
            .map(|l| binom(n as u64, l) * (1..l).product::<u64>() / 2)
            .sum();
        assert_eq!(simple_cycles(&k).len() as u64, expected);
    }
}

#[test]
fn degree_two_vertex_on_two_cycles_drops_d_by_one() {
    // K4 minus the edge 2-3; vertex 2 lies on two distinct cycles
    let g = UnderlyingGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
    assert_eq!(cycles_through(&g, 2, usize::MAX), 2);
    let (rest, _) = g.delete_vertices(&[2]);
    assert_eq!(cycle_space_dim(&g), 2);
    assert_eq!(cycle_space_dim(&rest), 1);
}
