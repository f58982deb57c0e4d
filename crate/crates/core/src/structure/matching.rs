use std::collections::HashMap;

use crate::mixedgraph::UnderlyingGraph;

/// Matching number `m(G)`: exact branch-and-bound on the lowest remaining
/// vertex (leave it unmatched, or match it to each remaining neighbor),
/// memoized on the remaining-vertex bitset.
///
/// # Panics
///
/// If `g` has more than 64 vertices.
pub fn matching_number(g: &UnderlyingGraph) -> usize {
    assert!(g.n() <= 64, "matching_number supports at most 64 vertices");
    let nbr: Vec<u64> = (0..g.n()).map(|v| g.neighbor_mask(v)).collect();
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    let mut memo = HashMap::new();
    best(all, &nbr, &mut memo)
}

fn best(mask: u64, nbr: &[u64], memo: &mut HashMap<u64, usize>) -> usize {
    if mask == 0 {
        return 0;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    let mut candidates = nbr[v] & rest;
    if candidates == 0 {
        return best(rest, nbr, memo);
    }
    if let Some(&m) = memo.get(&mask) {
        return m;
    }
    let ceiling = mask.count_ones() as usize / 2;
    let mut result = 0;
    while candidates != 0 {
        let u = candidates.trailing_zeros();
        candidates &= candidates - 1;
        result = result.max(1 + best(rest & !(1 << u), nbr, memo));
        if result == ceiling {
            break;
        }
    }
    if result < ceiling {
        result = result.max(best(rest, nbr, memo));
    }
    memo.insert(mask, result);
    result
}
