use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::classify::{
    classify_oriented, cycle_h_rank_formula, cycle_rank_formula, h_rank, underlying_rank, CycleSign,
};
use crate::mixedgraph::{to_graph6, MixedGraph, UnderlyingGraph};
use crate::structure::{matching_number, orientation_counts};

use super::checks::{check_instance, check_underlying, GraphContext};
use super::oracles::ORACLE_N_MAX;
use super::trees::nonisomorphic_trees;
use super::{OrientationCode, OrientationError, MAX_CAP_EDGES};

/// Largest order for exhaustive sweeps.
pub const EXHAUSTIVE_N_MAX: usize = 5;
/// Largest order for sampled sweeps and single-graph verification.
pub const SAMPLED_N_MAX: usize = 12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SweepError {
    #[error("exhaustive sweeps support n <= {EXHAUSTIVE_N_MAX}, got {0}")]
    ExhaustiveTooLarge(usize),
    #[error("sampled sweeps support 1 <= n <= {SAMPLED_N_MAX}, got {0}")]
    SampledOutOfRange(usize),
    #[error("graph has {0} vertices; verification supports at most {SAMPLED_N_MAX}")]
    GraphTooLarge(usize),
    #[error("edge probability {0} is outside [0, 1]")]
    BadProbability(f64),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Every labeled graph on `1..=n_max` vertices with every orientation.
    Exhaustive,
    /// `samples` uniform mixed graphs on exactly `n_max` labeled vertices.
    Sampled { samples: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub n_max: usize,
    pub mode: SweepMode,
    pub seed: u64,
    pub cap_edges: usize,
    /// Characteristic-polynomial coefficients are checked on graphs up to
    /// this order.
    pub coefficient_max_n: usize,
    pub threads: usize,
    pub max_failures: usize,
    /// Probability that a vertex pair is joined in sampled mode; present
    /// edges are undirected or an arc either way with equal odds. The
    /// default 0.75 makes every labeled mixed graph equally likely.
    pub edge_probability: f64,
}

impl SweepConfig {
    pub fn exhaustive(n_max: usize) -> Self {
        SweepConfig {
            n_max,
            mode: SweepMode::Exhaustive,
            seed: 0,
            cap_edges: 20,
            coefficient_max_n: 4,
            threads: 1,
            max_failures: 50,
            edge_probability: 0.75,
        }
    }

    pub fn sampled(n: usize, samples: u64, seed: u64) -> Self {
        SweepConfig {
            mode: SweepMode::Sampled { samples },
            seed,
            ..SweepConfig::exhaustive(n)
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub passed: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailingInstance {
    pub check: &'static str,
    /// Underlying graph in graph6.
    pub graph6: String,
    /// `None` for checks on the underlying graph alone.
    pub orientation: Option<OrientationCode>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub seed: Option<u64>,
    pub underlying_graphs: u64,
    pub instances: u64,
    pub fully_oriented: u64,
    pub unicyclic: u64,
    /// Upper-optimal instances with `d >= 1`.
    pub upper_optimal: u64,
    /// Lower-optimal instances with `d >= 1`.
    pub lower_optimal: u64,
    pub checks: BTreeMap<&'static str, CheckTally>,
    /// The first `max_failures` failures in enumeration order.
    pub failures: Vec<FailingInstance>,
    pub max_failures: usize,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn new(max_failures: usize) -> Self {
        SweepReport {
            seed: None,
            underlying_graphs: 0,
            instances: 0,
            fully_oriented: 0,
            unicyclic: 0,
            upper_optimal: 0,
            lower_optimal: 0,
            checks: BTreeMap::new(),
            failures: Vec::new(),
            max_failures,
            elapsed: Duration::ZERO,
        }
    }

    pub fn record(
        &mut self,
        check: &'static str,
        ok: bool,
        graph6: &str,
        orientation: Option<&OrientationCode>,
    ) {
        let tally = self.checks.entry(check).or_default();
        if ok {
            tally.passed += 1;
        } else {
            tally.failed += 1;
            if self.failures.len() < self.max_failures.max(1) {
                self.failures.push(FailingInstance {
                    check,
                    graph6: graph6.to_string(),
                    orientation: orientation.cloned(),
                });
            }
        }
    }

    /// Appends `other`; failures keep enumeration order when `other`
    /// covers later instances.
    pub fn merge(&mut self, other: SweepReport) {
        self.underlying_graphs += other.underlying_graphs;
        self.instances += other.instances;
        self.fully_oriented += other.fully_oriented;
        self.unicyclic += other.unicyclic;
        self.upper_optimal += other.upper_optimal;
        self.lower_optimal += other.lower_optimal;
        for (name, t) in other.checks {
            let mine = self.checks.entry(name).or_default();
            mine.passed += t.passed;
            mine.failed += t.failed;
        }
        let room = self.max_failures.max(1).saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self.elapsed += other.elapsed;
    }

    pub fn total_failed(&self) -> u64 {
        self.checks.values().map(|t| t.failed).sum()
    }

    pub fn all_passed(&self) -> bool {
        self.total_failed() == 0
    }

    pub fn tally(&self, check: &str) -> CheckTally {
        self.checks.get(check).copied().unwrap_or_default()
    }

    /// Line-oriented summary. Wall time is left out so the text is
    /// reproducible.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        if let Some(seed) = self.seed {
            writeln!(s, "seed {seed}").unwrap();
        }
        writeln!(s, "underlying_graphs {}", self.underlying_graphs).unwrap();
        writeln!(s, "instances {}", self.instances).unwrap();
        writeln!(s, "fully_oriented {}", self.fully_oriented).unwrap();
        writeln!(s, "unicyclic {}", self.unicyclic).unwrap();
        writeln!(s, "upper_optimal {}", self.upper_optimal).unwrap();
        writeln!(s, "lower_optimal {}", self.lower_optimal).unwrap();
        for (name, t) in &self.checks {
            writeln!(s, "check {name} passed {} failed {}", t.passed, t.failed).unwrap();
        }
        for f in &self.failures {
            let code = f
                .orientation
                .as_ref()
                .map_or("-".to_string(), |c| c.to_string());
            writeln!(
                s,
                "failure {} {} {}",
                f.check,
                f.graph6,
                if code.is_empty() { "-" } else { &code }
            )
            .unwrap();
        }
        writeln!(
            s,
            "result {}",
            if self.all_passed() { "PASS" } else { "FAIL" }
        )
        .unwrap();
        s
    }
}

/// One underlying graph with the orientations to check on it.
struct Job {
    graph: UnderlyingGraph,
    codes: Codes,
}

enum Codes {
    All,
    Listed(Vec<OrientationCode>),
}

fn run_job(job: &Job, config: &SweepConfig) -> SweepReport {
    let mut out = SweepReport::new(config.max_failures);
    let ctx = GraphContext::new(&job.graph);
    out.underlying_graphs += 1;
    check_underlying(&ctx, config.coefficient_max_n, &mut out);
    let edges = job.graph.edge_count();
    let visit = |code: &OrientationCode, out: &mut SweepReport| {
        let g = code.decode(&job.graph).expect("code length matches");
        let rep = check_instance(&ctx, &g, code, config.coefficient_max_n, out);
        out.instances += 1;
        out.fully_oriented += u64::from(code.is_fully_oriented());
        out.unicyclic += u64::from(rep.d == 1);
        out.upper_optimal += u64::from(rep.d >= 1 && rep.upper_by_rank);
        out.lower_optimal += u64::from(rep.d >= 1 && rep.lower_by_rank);
    };
    match &job.codes {
        Codes::All => {
            for i in 0..3u64.pow(edges as u32) {
                visit(&OrientationCode::from_index(i, edges), &mut out);
            }
        }
        Codes::Listed(codes) => {
            for code in codes {
                visit(code, &mut out);
            }
        }
    }
    out
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn exhaustive_jobs(n_max: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in 1..=n_max {
        let pairs = pairs(n);
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e);
            jobs.push(Job {
                graph: UnderlyingGraph::from_edges(n, edges).expect("pairs are simple"),
                codes: Codes::All,
            });
        }
    }
    jobs
}

/// Draws random mixed graphs and groups them by underlying graph.
fn sampled_jobs(n: usize, samples: u64, seed: u64, edge_probability: f64) -> Vec<Job> {
    let pairs = pairs(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut groups: BTreeMap<u128, Vec<OrientationCode>> = BTreeMap::new();
    for _ in 0..samples {
        let mut mask = 0u128;
        let mut digits = Vec::new();
        for i in 0..pairs.len() {
            if rng.gen_bool(edge_probability) {
                mask |= 1 << i;
                digits.push(rng.gen_range(0..3));
            }
        }
        let code = OrientationCode::new(digits).expect("digits are below 3");
        groups.entry(mask).or_default().push(code);
    }
    groups
        .into_iter()
        .map(|(mask, codes)| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e);
            Job {
                graph: UnderlyingGraph::from_edges(n, edges).expect("pairs are simple"),
                codes: Codes::Listed(codes),
            }
        })
        .collect()
}

fn run_jobs(jobs: &[Job], config: &SweepConfig) -> SweepReport {
    let threads = config.threads.max(1).min(jobs.len().max(1));
    let chunk = jobs.len().div_ceil(threads).max(1);
    let run_chunk = |part: &[Job]| {
        let mut out = SweepReport::new(config.max_failures);
        for job in part {
            out.merge(run_job(job, config));
        }
        out
    };
    let parts: Vec<SweepReport> = if threads == 1 {
        vec![run_chunk(jobs)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = jobs
                .chunks(chunk)
                .map(|part| s.spawn(move || run_chunk(part)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        })
    };
    let mut report = SweepReport::new(config.max_failures);
    for part in parts {
        report.merge(part);
    }
    report
}

/// Runs every orientation-level and graph-level check over the configured
/// instance set.
pub fn sweep(config: &SweepConfig) -> Result<SweepReport, SweepError> {
    let start = Instant::now();
    let n = config.n_max;
    let jobs = match config.mode {
        SweepMode::Exhaustive => {
            if n > EXHAUSTIVE_N_MAX {
                return Err(SweepError::ExhaustiveTooLarge(n));
            }
            let edges = n * n.saturating_sub(1) / 2;
            let cap = config.cap_edges.min(MAX_CAP_EDGES);
            if edges > cap {
                return Err(OrientationError::CapExceeded { edges, cap }.into());
            }
            exhaustive_jobs(n)
        }
        SweepMode::Sampled { samples } => {
            if n == 0 || n > SAMPLED_N_MAX {
                return Err(SweepError::SampledOutOfRange(n));
            }
            if !(0.0..=1.0).contains(&config.edge_probability) {
                return Err(SweepError::BadProbability(config.edge_probability));
            }
            sampled_jobs(n, samples, config.seed, config.edge_probability)
        }
    };
    let mut report = run_jobs(&jobs, config);
    if matches!(config.mode, SweepMode::Sampled { .. }) {
        report.seed = Some(config.seed);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Runs the graph-level and orientation-level checks on a single graph.
/// Coefficient oracles run when `g` has at most `coefficient_max_n`
/// vertices.
pub fn verify_graph(g: &MixedGraph, coefficient_max_n: usize) -> Result<SweepReport, SweepError> {
    if g.n() > SAMPLED_N_MAX {
        return Err(SweepError::GraphTooLarge(g.n()));
    }
    let start = Instant::now();
    let config = SweepConfig {
        coefficient_max_n: coefficient_max_n.min(ORACLE_N_MAX),
        ..SweepConfig::exhaustive(g.n())
    };
    let job = Job {
        graph: g.underlying(),
        codes: Codes::Listed(vec![OrientationCode::encode(g)]),
    };
    let mut report = run_job(&job, &config);
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Tree lemmas: `rk(T̃) = 2m(T)` for every orientation of every tree on up
/// to `identity_n_max` vertices (also the subset-deletion lemma there), and
/// `r(T₁) < r(T)` for trees on `2..=strictness_n_max` vertices, `T₁` being
/// `T` without its pendant vertices. Trees are taken up to isomorphism.
pub fn tree_sweep(identity_n_max: usize, strictness_n_max: usize) -> SweepReport {
    let start = Instant::now();
    let mut out = SweepReport::new(50);
    for n in 1..=identity_n_max.max(strictness_n_max) {
        for t in nonisomorphic_trees(n) {
            out.underlying_graphs += 1;
            let g6 = to_graph6(&t);
            let r = underlying_rank(&t);
            if n <= identity_n_max {
                let m = matching_number(&t);
                let edges = t.edge_count();
                for i in 0..3u64.pow(edges as u32) {
                    let code = OrientationCode::from_index(i, edges);
                    let g = code.decode(&t).expect("code length matches");
                    out.instances += 1;
                    out.record("tree_rank_identity", h_rank(&g) == 2 * m, &g6, Some(&code));
                }
                if n >= 2 {
                    let pendants = t.pendant_vertices();
                    for w in 0u32..1 << n {
                        let removed: Vec<usize> = (0..n).filter(|&v| w & (1 << v) != 0).collect();
                        if underlying_rank(&t.delete_vertices(&removed).0) == r {
                            let spared = pendants.iter().any(|&v| w & (1 << v) == 0);
                            out.record(
                                "tree_rank_preserving_deletion_spares_a_pendant",
                                spared,
                                &g6,
                                None,
                            );
                        }
                    }
                }
            }
            if (2..=strictness_n_max).contains(&n) {
                let pendants: Vec<usize> = t.pendant_vertices().into_iter().collect();
                let inner = t.delete_vertices(&pendants).0;
                out.record(
                    "tree_pendant_deletion_drops_rank",
                    underlying_rank(&inner) < r,
                    &g6,
                    None,
                );
            }
        }
    }
    out.elapsed = start.elapsed();
    out
}

/// The mixed-cycle rank table over every orientation of `C_l` for
/// `l = 3..=l_max`, the cycle rank formula, and the sign of fully oriented
/// cycles.
pub fn cycle_table(l_max: usize) -> SweepReport {
    let start = Instant::now();
    let mut out = SweepReport::new(50);
    for l in 3..=l_max {
        let c = UnderlyingGraph::from_edges(l, (0..l).map(|i| (i, (i + 1) % l)))
            .expect("a cycle is simple");
        let g6 = to_graph6(&c);
        let traversal: Vec<usize> = (0..l).collect();
        out.underlying_graphs += 1;
        let formula = cycle_rank_formula(l).expect("l >= 3");
        out.record(
            "cycle_rank_formula",
            underlying_rank(&c) == formula,
            &g6,
            None,
        );
        for i in 0..3u64.pow(l as u32) {
            let code = OrientationCode::from_index(i, l);
            let g = code.decode(&c).expect("code length matches");
            out.instances += 1;
            let counts = orientation_counts(&g, &traversal).expect("traversal follows the cycle");
            let eta = counts.signature();
            let expected = cycle_h_rank_formula(l, eta).expect("eta <= l");
            out.record(
                "cycle_h_rank_formula",
                h_rank(&g) == expected,
                &g6,
                Some(&code),
            );
            if code.is_fully_oriented() {
                out.fully_oriented += 1;
                let o = classify_oriented(&g).expect("fully oriented");
                let negative = o.signs[0] == CycleSign::Negative;
                let mut ok = negative == (counts.backward % 2 == 1);
                if l % 4 == 0 {
                    ok &= negative == (eta % 4 == 2);
                }
                out.record("oriented_cycle_sign", ok, &g6, Some(&code));
            }
        }
    }
    out.elapsed = start.elapsed();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_sweep() {
        let r = sweep(&SweepConfig::exhaustive(1)).unwrap();
        assert_eq!((r.underlying_graphs, r.instances), (1, 1));
        assert!(r.all_passed());
        assert!(r.summary().ends_with("result PASS\n"));
    }

    #[test]
    fn guards() {
        assert_eq!(
            sweep(&SweepConfig::exhaustive(6)),
            Err(SweepError::ExhaustiveTooLarge(6))
        );
        let mut tight = SweepConfig::exhaustive(4);
        tight.cap_edges = 5;
        assert!(matches!(
            sweep(&tight),
            Err(SweepError::Orientation(OrientationError::CapExceeded {
                edges: 6,
                cap: 5
            }))
        ));
        assert_eq!(
            sweep(&SweepConfig::sampled(0, 10, 0)),
            Err(SweepError::SampledOutOfRange(0))
        );
    }

    #[test]
    fn sampling_is_deterministic_and_counts_every_draw() {
        let a = sweep(&SweepConfig::sampled(5, 300, 7)).unwrap();
        let b = sweep(&SweepConfig::sampled(5, 300, 7)).unwrap();
        assert_eq!(a.instances, 300);
        assert_eq!(a.summary(), b.summary());
        assert_eq!(a.seed, Some(7));
        assert!(a.all_passed(), "{}", a.summary());
    }

    #[test]
    fn threads_do_not_change_the_report() {
        let one = sweep(&SweepConfig::exhaustive(4)).unwrap();
        let three = sweep(&SweepConfig {
            threads: 3,
            ..SweepConfig::exhaustive(4)
        })
        .unwrap();
        assert_eq!(one.summary(), three.summary());
    }

    #[test]
    fn failures_are_capped_and_listed() {
        let mut r = SweepReport::new(2);
        for _ in 0..5 {
            r.record("x", false, "A_", None);
        }
        r.record("y", true, "A_", None);
        assert_eq!(r.failures.len(), 2);
        assert_eq!(
            r.tally("x"),
            CheckTally {
                passed: 0,
                failed: 5
            }
        );
        assert!(!r.all_passed());
        assert!(r.summary().contains("failure x A_ -"));
    }

    #[test]
    fn verify_one_graph() {
        let mut g = MixedGraph::new(4);
        for (u, v) in [(0, 1), (1, 2), (2, 3)] {
            g.add_edge(u, v).unwrap();
        }
        g.add_arc(3, 0).unwrap();
        let r = verify_graph(&g, 8).unwrap();
        assert!(r.all_passed(), "{}", r.summary());
        assert_eq!(r.upper_optimal, 1);
        assert_eq!(r.tally("hermitian_coefficients").passed, 1);
    }
}
