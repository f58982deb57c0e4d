//! H-rank versus rank: the bound `-2d <= rk - r <= 2d`, the rank-based
//! optimality verdicts, and the structural conditions that characterize
//! them.

use thiserror::Error;

use crate::algebra::{
    adjacency_entries, exact_rank, hermitian_entries, hermitian_matrix, skew_adjacency_matrix,
    small_rank, AlgebraError, GaussianInt,
};
use crate::mixedgraph::{MixedGraph, UnderlyingGraph, Vertex};
use crate::structure::{
    crucial_subgraph_exists, cycle_space_dim, detect_cycles, matching_number, orientation_counts,
    CycleSet, DeltaTrace,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("cycle length {0} is below 3")]
    ShortCycle(usize),
    #[error("signature {eta} exceeds cycle length {length}")]
    SignatureOutOfRange { length: usize, eta: usize },
}

/// `rk(G̃)`, the rank of the Hermitian adjacency matrix.
pub fn h_rank(g: &MixedGraph) -> usize {
    small_rank(hermitian_entries(g), g.n(), g.n())
}

/// `r(G)`, the rank of the adjacency matrix.
pub fn underlying_rank(g: &UnderlyingGraph) -> usize {
    small_rank(adjacency_entries(g), g.n(), g.n())
}

/// `sr(G^σ)` for an oriented graph.
pub fn skew_rank(g: &MixedGraph) -> Result<usize, AlgebraError> {
    skew_adjacency_matrix(g).map(|s| exact_rank(&s))
}

/// H-rank of a mixed cycle of length `length` and signature `eta`.
pub fn cycle_h_rank_formula(length: usize, eta: usize) -> Result<usize, FormulaError> {
    if length < 3 {
        return Err(FormulaError::ShortCycle(length));
    }
    if eta > length {
        return Err(FormulaError::SignatureOutOfRange { length, eta });
    }
    Ok(match (length % 2, eta % 2) {
        (1, 1) => length - 1,
        (1, 0) => length,
        (0, 1) => length,
        _ if (length + eta) % 4 == 2 => length,
        _ => length - 2,
    })
}

/// `r(C_n)`: `n - 2` when `4 | n`, otherwise `n`.
pub fn cycle_rank_formula(length: usize) -> Result<usize, FormulaError> {
    if length < 3 {
        return Err(FormulaError::ShortCycle(length));
    }
    Ok(if length.is_multiple_of(4) {
        length - 2
    } else {
        length
    })
}

/// Everything about the underlying graph that classification needs. It does
/// not depend on the orientation, so sweeps compute it once per graph.
#[derive(Debug, Clone)]
pub struct UnderlyingProfile {
    pub graph: UnderlyingGraph,
    pub r: usize,
    pub d: usize,
    pub m: usize,
    pub omega: usize,
    pub cycles: CycleSet,
    /// Witness that δ-transformations reach `d` disjoint cycles plus
    /// isolated vertices.
    pub crucial: Option<DeltaTrace>,
}

impl UnderlyingProfile {
    pub fn new(g: &UnderlyingGraph) -> Self {
        UnderlyingProfile {
            graph: g.clone(),
            r: underlying_rank(g),
            d: cycle_space_dim(g),
            m: matching_number(g),
            omega: g.component_count(),
            cycles: detect_cycles(g),
            crucial: crucial_subgraph_exists(g),
        }
    }
}

/// One cycle's length and signature classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleClass {
    pub vertices: Vec<Vertex>,
    pub length: usize,
    pub forward: usize,
    pub backward: usize,
    pub eta: usize,
    /// `l ≡ 0 (mod 4)` and η odd or `η ≡ 2 (mod 4)`.
    pub upper_class: bool,
    /// `l ≡ 2 (mod 4)` and `η ≡ 2 (mod 4)`.
    pub lower_class: bool,
}

impl CycleClass {
    fn new(vertices: Vec<Vertex>, forward: usize, backward: usize) -> Self {
        let length = vertices.len();
        let eta = forward.abs_diff(backward);
        CycleClass {
            vertices,
            length,
            forward,
            backward,
            eta,
            upper_class: length.is_multiple_of(4) && (eta % 2 == 1 || eta % 4 == 2),
            lower_class: length % 4 == 2 && eta % 4 == 2,
        }
    }
}

/// Clause-by-clause evaluation of the structural characterizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionDetail {
    /// (i) the cycles are pairwise vertex-disjoint.
    pub cycles_disjoint: bool,
    /// Per-cycle classes. When (i) fails these are the fundamental cycles of
    /// a spanning forest and only diagnostic.
    pub cycles: Vec<CycleClass>,
    /// (ii) for the upper bound.
    pub upper_cycle_classes: bool,
    /// (ii) for the lower bound.
    pub lower_cycle_classes: bool,
    /// (iii) some δ-transformation series reaches `d(G)` disjoint (induced)
    /// cycles plus isolated vertices.
    pub crucial_reachable: bool,
    pub crucial_trace: Option<DeltaTrace>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub n: usize,
    pub rk: usize,
    pub r: usize,
    pub d: usize,
    pub m: usize,
    pub omega: usize,
    /// `rk - r`
    pub diff: i64,
    pub bound_ok: bool,
    pub upper_by_rank: bool,
    pub lower_by_rank: bool,
    pub upper_by_conditions: bool,
    pub lower_by_conditions: bool,
    pub conditions: ConditionDetail,
}

pub fn classify(g: &MixedGraph) -> ClassificationReport {
    classify_with(&UnderlyingProfile::new(&g.underlying()), g)
}

/// Classifies `g` against a precomputed profile of its underlying graph.
pub fn classify_with(profile: &UnderlyingProfile, g: &MixedGraph) -> ClassificationReport {
    debug_assert_eq!(profile.graph, g.underlying());
    let rk = h_rank(g);
    classify_with_rank(profile, g, rk)
}

pub(crate) fn classify_with_rank(
    profile: &UnderlyingProfile,
    g: &MixedGraph,
    rk: usize,
) -> ClassificationReport {
    let d = profile.d as i64;
    let diff = rk as i64 - profile.r as i64;
    let cycles: Vec<CycleClass> = profile
        .cycles
        .cycles()
        .iter()
        .map(|c| {
            let counts =
                orientation_counts(g, c.vertices()).expect("detected cycles are cycles of g");
            CycleClass::new(c.vertices().to_vec(), counts.forward, counts.backward)
        })
        .collect();
    let cycles_disjoint = profile.cycles.pairwise_disjoint();
    let upper_cycle_classes = cycles.iter().all(|c| c.upper_class);
    let lower_cycle_classes = cycles.iter().all(|c| c.lower_class);
    let crucial_reachable = profile.crucial.is_some();
    ClassificationReport {
        n: g.n(),
        rk,
        r: profile.r,
        d: profile.d,
        m: profile.m,
        omega: profile.omega,
        diff,
        bound_ok: -2 * d <= diff && diff <= 2 * d,
        upper_by_rank: diff == 2 * d,
        lower_by_rank: diff == -2 * d,
        upper_by_conditions: cycles_disjoint && upper_cycle_classes && crucial_reachable,
        lower_by_conditions: cycles_disjoint && lower_cycle_classes && crucial_reachable,
        conditions: ConditionDetail {
            cycles_disjoint,
            cycles,
            upper_cycle_classes,
            lower_cycle_classes,
            crucial_reachable,
            crucial_trace: profile.crucial.clone(),
        },
    }
}

/// Sign of an oriented cycle: the sign of the product of skew-adjacency
/// entries along its traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleSign {
    /// Evenly-oriented.
    Positive,
    /// Oddly-oriented.
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedReport {
    pub report: ClassificationReport,
    pub skew_rank: usize,
    /// `H(G̃) = i·S(G^σ)` entrywise.
    pub hermitian_is_i_skew: bool,
    /// One sign per entry of `report.conditions.cycles`.
    pub signs: Vec<CycleSign>,
    /// Disjoint cycles, each oddly-oriented of length `≡ 0 (mod 4)`, and a
    /// δ-reachable crucial subgraph.
    pub corollary_upper: bool,
    /// Disjoint cycles, each evenly-oriented of length `≡ 2 (mod 4)`, and a
    /// δ-reachable crucial subgraph.
    pub corollary_lower: bool,
}

/// Classification of an oriented graph through the skew-adjacency matrix.
pub fn classify_oriented(g: &MixedGraph) -> Result<OrientedReport, AlgebraError> {
    classify_oriented_with(&UnderlyingProfile::new(&g.underlying()), g)
}

pub fn classify_oriented_with(
    profile: &UnderlyingProfile,
    g: &MixedGraph,
) -> Result<OrientedReport, AlgebraError> {
    let s = skew_adjacency_matrix(g)?;
    let hermitian_is_i_skew = hermitian_matrix(g) == s.scale(&GaussianInt::new(0, 1));
    let skew_rank = exact_rank(&s);
    let report = classify_with(profile, g);
    let signs: Vec<CycleSign> = report
        .conditions
        .cycles
        .iter()
        .map(|c| {
            let k = c.vertices.len();
            let negatives = (0..k)
                .filter(|&i| s[(c.vertices[i], c.vertices[(i + 1) % k])].re < 0.into())
                .count();
            if negatives % 2 == 0 {
                CycleSign::Positive
            } else {
                CycleSign::Negative
            }
        })
        .collect();
    let crucial = report.conditions.crucial_reachable;
    let disjoint = report.conditions.cycles_disjoint;
    let lengths = || {
        report
            .conditions
            .cycles
            .iter()
            .map(|c| c.length)
            .zip(&signs)
    };
    let corollary_upper =
        disjoint && crucial && lengths().all(|(l, &s)| l % 4 == 0 && s == CycleSign::Negative);
    let corollary_lower =
        disjoint && crucial && lengths().all(|(l, &s)| l % 4 == 2 && s == CycleSign::Positive);
    Ok(OrientedReport {
        report,
        skew_rank,
        hermitian_is_i_skew,
        signs,
        corollary_upper,
        corollary_lower,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(l: usize, arcs: &[(usize, usize)]) -> MixedGraph {
        let mut g = MixedGraph::new(l);
        for &(u, v) in arcs {
            g.add_arc(u, v).unwrap();
        }
        for i in 0..l {
            let j = (i + 1) % l;
            if g.link(i, j).is_none() {
                g.add_edge(i, j).unwrap();
            }
        }
        g
    }

    #[test]
    fn h_rank_examples() {
        for arcs in [
            vec![],
            vec![(0, 1)],
            vec![(1, 0), (2, 1)],
            vec![(0, 1), (2, 1)],
        ] {
            let mut p3 = MixedGraph::new(3);
            for &(u, v) in &arcs {
                p3.add_arc(u, v).unwrap();
            }
            for (u, v) in [(0, 1), (1, 2)] {
                if p3.link(u, v).is_none() {
                    p3.add_edge(u, v).unwrap();
                }
            }
            assert_eq!(h_rank(&p3), 2);
        }
        assert_eq!(h_rank(&cycle(4, &[(3, 0)])), 4);
        assert_eq!(h_rank(&MixedGraph::new(0)), 0);
        assert_eq!(h_rank(&MixedGraph::new(3)), 0);
    }

    #[test]
    fn cycle_formulas() {
        assert_eq!(cycle_h_rank_formula(3, 1), Ok(2));
        assert_eq!(cycle_h_rank_formula(4, 0), Ok(2));
        assert_eq!(cycle_h_rank_formula(6, 2), Ok(4));
        assert_eq!(cycle_h_rank_formula(4, 1), Ok(4));
        assert_eq!(cycle_h_rank_formula(6, 0), Ok(6));
        assert_eq!(cycle_h_rank_formula(5, 2), Ok(5));
        assert_eq!(cycle_h_rank_formula(2, 0), Err(FormulaError::ShortCycle(2)));
        assert!(cycle_h_rank_formula(4, 5).is_err());

        assert_eq!(cycle_rank_formula(4), Ok(2));
        assert_eq!(cycle_rank_formula(5), Ok(5));
        assert_eq!(cycle_rank_formula(8), Ok(6));
        assert!(cycle_rank_formula(1).is_err());
    }

    #[test]
    fn c4_with_one_arc_is_upper_optimal() {
        let r = classify(&cycle(4, &[(3, 0)]));
        assert_eq!((r.rk, r.r, r.d, r.diff), (4, 2, 1, 2));
        assert!(r.bound_ok && r.upper_by_rank && r.upper_by_conditions);
        assert!(!r.lower_by_rank && !r.lower_by_conditions);
        assert_eq!(r.conditions.cycles[0].eta, 1);
    }

    #[test]
    fn c6_with_signature_two_is_lower_optimal() {
        let r = classify(&cycle(6, &[(0, 1), (1, 2)]));
        assert_eq!((r.rk, r.r, r.d, r.diff), (4, 6, 1, -2));
        assert!(r.lower_by_rank && r.lower_by_conditions);
        assert!(!r.upper_by_rank && !r.upper_by_conditions);
    }

    #[test]
    fn undirected_c4_is_neither() {
        let r = classify(&cycle(4, &[]));
        assert_eq!((r.rk, r.r, r.diff), (2, 2, 0));
        assert!(r.bound_ok);
        assert!(!r.upper_by_rank && !r.lower_by_rank);
        assert!(!r.upper_by_conditions && !r.lower_by_conditions);
    }

    #[test]
    fn forests_are_both_optimal() {
        let r = classify(&MixedGraph::new(1));
        assert_eq!((r.rk, r.r, r.d, r.m), (0, 0, 0, 0));
        assert!(r.upper_by_rank && r.lower_by_rank);
        assert!(r.upper_by_conditions && r.lower_by_conditions);
    }

    #[test]
    fn oriented_corollaries() {
        // C_4 with exactly one backward arc
        let c4 = MixedGraph::from_parts(4, [], [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let o = classify_oriented(&c4).unwrap();
        assert_eq!(o.signs, vec![CycleSign::Negative]);
        assert!(o.corollary_upper && !o.corollary_lower);
        assert!(o.hermitian_is_i_skew);
        assert_eq!(o.skew_rank, o.report.rk);
        assert!(o.report.upper_by_rank);

        let c6 = MixedGraph::from_parts(6, [], (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let o = classify_oriented(&c6).unwrap();
        assert_eq!(o.signs, vec![CycleSign::Positive]);
        assert!(o.corollary_lower && !o.corollary_upper);
        assert!(o.report.lower_by_rank);

        let c3 = MixedGraph::from_parts(3, [], [(0, 1), (1, 2), (2, 0)]).unwrap();
        let o = classify_oriented(&c3).unwrap();
        assert!(!o.corollary_upper && !o.corollary_lower);

        assert_eq!(
            classify_oriented(&cycle(3, &[])),
            Err(AlgebraError::NotOriented(3))
        );
    }
}
