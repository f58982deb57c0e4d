//! Per-graph and per-orientation checks run by the sweeps.

use crate::algebra::{
    adjacency_matrix, char_poly, hermitian_entries, hermitian_matrix, small_rank, SmallGaussian,
};
use crate::classify::{
    classify_oriented_with, classify_with_rank, underlying_rank, ClassificationReport, CycleSign,
    UnderlyingProfile,
};
use crate::mixedgraph::{to_graph6, MixedGraph, UnderlyingGraph, Vertex};
use crate::structure::{contract_cycles, cycle_space_dim, matching_number, on_cycle};

use super::oracles::{
    basic_subgraph_coefficients, cycle_edge_pairs_at, cycles_through,
    elementary_subgraph_coefficients,
};
use super::{OrientationCode, SweepReport};

#[derive(Debug, Clone, Copy)]
struct Reduced {
    r: usize,
    d: usize,
    m: usize,
}

impl Reduced {
    fn of(g: &UnderlyingGraph) -> Self {
        Reduced {
            r: underlying_rank(g),
            d: cycle_space_dim(g),
            m: matching_number(g),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Contracted {
    m_t: usize,
    m_bracket: usize,
    r_t: usize,
    r_bracket: usize,
}

#[derive(Debug, Clone)]
struct Pendant {
    x: Vertex,
    y: Vertex,
    /// `G - x - y`
    rest: Reduced,
    m_without_y: usize,
}

/// Orientation-independent data for one underlying graph.
pub(crate) struct GraphContext {
    pub profile: UnderlyingProfile,
    pub graph6: String,
    on_cycle: Vec<bool>,
    /// Simple cycles through each vertex, counted up to 2.
    cycles_through: Vec<usize>,
    edge_pairs: Vec<usize>,
    quasi: Vec<bool>,
    pendants: Vec<Pendant>,
    minus_vertex: Vec<Reduced>,
    /// Vertex mask, rank and cycle-space dimension of each component.
    components: Vec<(u64, usize, usize)>,
    contracted: Option<Contracted>,
}

impl GraphContext {
    pub fn new(g: &UnderlyingGraph) -> Self {
        let n = g.n();
        let profile = UnderlyingProfile::new(g);
        let quasi_set = g.quasi_pendant_vertices();
        let pendants = g
            .pendant_vertices()
            .into_iter()
            .map(|x| {
                let y = g.neighbors(x)[0];
                Pendant {
                    x,
                    y,
                    rest: Reduced::of(&g.delete_vertices(&[x, y]).0),
                    m_without_y: matching_number(&g.delete_vertices(&[y]).0),
                }
            })
            .collect();
        let components = g
            .components()
            .into_iter()
            .map(|comp| {
                let sub = g.induced(&comp);
                let mask = comp.iter().fold(0u64, |m, &v| m | 1 << v);
                (mask, underlying_rank(&sub), cycle_space_dim(&sub))
            })
            .collect();
        let contracted = if profile.cycles.pairwise_disjoint() {
            let pair = contract_cycles(g, &profile.cycles).expect("cycles are disjoint");
            Some(Contracted {
                m_t: matching_number(&pair.t_graph),
                m_bracket: matching_number(&pair.bracket_graph),
                r_t: underlying_rank(&pair.t_graph),
                r_bracket: underlying_rank(&pair.bracket_graph),
            })
        } else {
            None
        };
        GraphContext {
            graph6: to_graph6(g),
            on_cycle: on_cycle(g),
            cycles_through: (0..n).map(|x| cycles_through(g, x, 2)).collect(),
            edge_pairs: (0..n).map(|x| cycle_edge_pairs_at(g, x)).collect(),
            quasi: (0..n).map(|v| quasi_set.contains(&v)).collect(),
            pendants,
            minus_vertex: (0..n)
                .map(|x| Reduced::of(&g.delete_vertices(&[x]).0))
                .collect(),
            components,
            contracted,
            profile,
        }
    }

    fn n(&self) -> usize {
        self.profile.graph.n()
    }

    fn all(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    /// `m(T_G) = m([T_G])`; false when `T_G` is undefined.
    fn matching_split(&self) -> bool {
        self.contracted.is_some_and(|c| c.m_t == c.m_bracket)
    }

    fn rank_split(&self) -> bool {
        self.contracted.is_some_and(|c| c.r_t == c.r_bracket)
    }

    fn cycle_vertices_avoid_quasi(&self) -> bool {
        (0..self.n()).all(|v| !(self.on_cycle[v] && self.quasi[v]))
    }

    fn cycle_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.profile.cycles.cycles().iter().map(|c| c.len())
    }
}

fn rank_on(h: &[SmallGaussian], n: usize, keep: u64) -> usize {
    let idx: Vec<usize> = (0..n).filter(|&v| keep & (1 << v) != 0).collect();
    let k = idx.len();
    let mut sub = Vec::with_capacity(k * k);
    for &i in &idx {
        for &j in &idx {
            sub.push(h[i * n + j]);
        }
    }
    small_rank(sub, k, k)
}

/// Checks that only involve the underlying graph.
pub(crate) fn check_underlying(
    ctx: &GraphContext,
    coefficient_max_n: usize,
    out: &mut SweepReport,
) {
    let p = &ctx.profile;
    let g = &p.graph;
    let (r, m, d) = (p.r as i64, p.m as i64, p.d as i64);
    let mut rec = |name: &'static str, ok: bool| out.record(name, ok, &ctx.graph6, None);

    let gap = r - 2 * m;
    rec("matching_r_bound", -2 * d <= gap && gap <= d);
    let disjoint = p.cycles.pairwise_disjoint();
    let all_odd = ctx.cycle_lengths().all(|l| l % 2 == 1);
    let all_mult4 = ctx.cycle_lengths().all(|l| l % 4 == 0);
    rec(
        "matching_r_odd_cycle_extreme",
        (gap == d) == (disjoint && all_odd && ctx.matching_split()),
    );
    rec(
        "matching_r_mult4_extreme",
        (gap == -2 * d) == (disjoint && all_mult4 && ctx.matching_split()),
    );
    if let (true, true, Some(c)) = (disjoint && d >= 1, all_odd, ctx.contracted) {
        let halves: usize = ctx.cycle_lengths().map(|l| l / 2).sum();
        rec(
            "contraction_matching_split",
            (c.m_t == c.m_bracket) == (p.m == halves + c.m_bracket),
        );
    }
    if ctx.matching_split() {
        rec("quasi_pendant_exclusion", ctx.cycle_vertices_avoid_quasi());
    }

    for pd in &ctx.pendants {
        rec("pendant_rank_reduction_underlying", p.r == pd.rest.r + 2);
        rec(
            "pendant_matching_reduction",
            p.m == pd.m_without_y + 1 && p.m == pd.rest.m + 1,
        );
    }
    for x in 0..g.n() {
        let red = ctx.minus_vertex[x];
        rec(
            "vertex_deletion_underlying_rank",
            red.r <= p.r && p.r <= red.r + 2,
        );
        rec("vertex_deletion_matching", red.m <= p.m && p.m <= red.m + 1);
        let drop = p.d as i64 - red.d as i64;
        let ok = match ctx.cycles_through[x] {
            0 => drop == 0,
            _ if ctx.edge_pairs[x] >= 2 => drop >= 2,
            _ => drop >= 1,
        };
        rec("vertex_deletion_cycle_space", ok);
    }

    if p.omega == 1 && g.n() >= 3 && (0..g.n()).all(|v| g.degree(v) == 2) {
        let formula = crate::classify::cycle_rank_formula(g.n()).expect("length at least 3");
        rec("cycle_rank_formula", p.r == formula);
    }
    if g.n() <= coefficient_max_n {
        let poly = char_poly(&adjacency_matrix(g)).expect("adjacency matrices are integral");
        rec(
            "elementary_coefficients",
            poly.coefficients() == elementary_subgraph_coefficients(g).as_slice(),
        );
    }
}

/// Checks for one orientation of the context's graph. Returns the report
/// so callers can tally optimal instances.
pub(crate) fn check_instance(
    ctx: &GraphContext,
    g: &MixedGraph,
    code: &OrientationCode,
    coefficient_max_n: usize,
    out: &mut SweepReport,
) -> ClassificationReport {
    let p = &ctx.profile;
    let n = g.n();
    let all = ctx.all();
    let h = hermitian_entries(g);
    let rk = rank_on(&h, n, all);
    let rep = classify_with_rank(p, g, rk);
    let mut rec = |name: &'static str, ok: bool| out.record(name, ok, &ctx.graph6, Some(code));

    let (rk_i, r, d, m) = (rk as i64, p.r as i64, p.d as i64, p.m as i64);
    rec("bound", rep.bound_ok);
    rec(
        "upper_equivalence",
        rep.upper_by_rank == rep.upper_by_conditions,
    );
    rec(
        "lower_equivalence",
        rep.lower_by_rank == rep.lower_by_conditions,
    );

    let mut rank_sum = 0;
    let (mut comps_upper, mut comps_lower) = (true, true);
    for &(mask, r_c, d_c) in &ctx.components {
        let rk_c = if ctx.components.len() == 1 {
            rk
        } else {
            rank_on(&h, n, mask)
        };
        rank_sum += rk_c;
        let diff_c = rk_c as i64 - r_c as i64;
        comps_upper &= diff_c == 2 * d_c as i64;
        comps_lower &= diff_c == -2 * d_c as i64;
    }
    rec("component_rank_additivity", rank_sum == rk);
    rec(
        "component_optimality",
        comps_upper == rep.upper_by_rank && comps_lower == rep.lower_by_rank,
    );

    let gap = rk_i - 2 * m;
    rec("matching_rk_bound", -2 * d <= gap && gap <= d);
    if gap == d || gap == -2 * d {
        rec(
            "matching_rk_extreme_quasi_pendant",
            ctx.cycle_vertices_avoid_quasi(),
        );
    }
    if p.d == 0 {
        rec("forest_rank_identity", rk == 2 * p.m);
    }
    if p.d == 1 {
        let c = &rep.conditions.cycles[0];
        let (l, eta) = (c.length, c.eta);
        rec(
            "unicyclic_rk_2m_plus_1",
            (gap == 1) == (l % 2 == 1 && eta % 2 == 0 && ctx.matching_split()),
        );
        rec(
            "unicyclic_rk_2m_minus_2",
            (gap == -2) == (l % 2 == 0 && eta % 4 == l % 4 && ctx.matching_split()),
        );
        rec(
            "unicyclic_upper_optimal",
            rep.upper_by_rank == (c.upper_class && ctx.rank_split()),
        );
        rec(
            "unicyclic_lower_optimal",
            rep.lower_by_rank == (c.lower_class && ctx.rank_split()),
        );
    }

    for pd in &ctx.pendants {
        let rest_mask = all & !(1 << pd.x) & !(1 << pd.y);
        let rk_rest = rank_on(&h, n, rest_mask) as i64;
        rec("pendant_rank_reduction", rk_i == rk_rest + 2);
        let diff_rest = rk_rest - pd.rest.r as i64;
        let rest_d = pd.rest.d as i64;
        let y_free = !ctx.on_cycle[pd.y];
        rec(
            "pendant_optimality",
            rep.upper_by_rank == (y_free && diff_rest == 2 * rest_d)
                && rep.lower_by_rank == (y_free && diff_rest == -2 * rest_d),
        );
    }

    for x in 0..n {
        let rk_x = rank_on(&h, n, all & !(1 << x)) as i64;
        rec("vertex_deletion_rank", rk_i - 2 <= rk_x && rk_x <= rk_i);
        if !ctx.on_cycle[x] || p.d == 0 {
            continue;
        }
        let red = ctx.minus_vertex[x];
        let (r_x, d_x) = (red.r as i64, red.d as i64);
        let single = ctx.cycles_through[x] == 1 && !ctx.quasi[x];
        if rep.upper_by_rank {
            rec(
                "upper_vertex_properties",
                rk_i == rk_x + 2 && rk_x - r_x == 2 * d_x && d == d_x + 1 && r == r_x && single,
            );
        }
        if rep.lower_by_rank {
            rec(
                "lower_vertex_properties",
                rk_i == rk_x && rk_x - r_x == -2 * d_x && d == d_x + 1 && r == r_x + 2 && single,
            );
        }
    }

    if rep.upper_by_rank {
        let ok = match ctx.contracted {
            Some(c) => {
                let excess: usize = ctx.cycle_lengths().map(|l| l - 2).sum();
                rep.conditions.upper_cycle_classes && p.r == c.r_t + excess && c.r_t == c.r_bracket
            }
            None => false,
        };
        rec("upper_structure", ok);
    }

    if code.is_fully_oriented() {
        let o = classify_oriented_with(p, g).expect("code is fully oriented");
        rec("oriented_hermitian_is_i_skew", o.hermitian_is_i_skew);
        rec("oriented_skew_rank", o.skew_rank == rk);
        rec(
            "oriented_corollaries",
            o.corollary_upper == rep.upper_by_rank && o.corollary_lower == rep.lower_by_rank,
        );
        for (c, &sign) in rep.conditions.cycles.iter().zip(&o.signs) {
            let negative = sign == CycleSign::Negative;
            let mut ok = negative == (c.backward % 2 == 1);
            if c.length % 4 == 0 {
                ok &= negative == (c.eta % 4 == 2);
            }
            rec("oriented_cycle_sign", ok);
        }
    }

    if n <= coefficient_max_n {
        let poly = char_poly(&hermitian_matrix(g)).expect("Hermitian char poly is real");
        rec(
            "hermitian_coefficients",
            poly.coefficients() == basic_subgraph_coefficients(g).as_slice(),
        );
    }
    rep
}
