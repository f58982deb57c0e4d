//! Brute-force oracles and sweeps that check the rank results over
//! enumerated or sampled mixed graphs.

mod checks;
mod oracles;
mod orientation;
mod sweep;
mod trees;

pub use oracles::{
    basic_subgraph_coefficient, basic_subgraph_coefficients, count_maximum_matchings,
    cycle_edge_pairs_at, cycles_through, elementary_subgraph_coefficient,
    elementary_subgraph_coefficients, simple_cycles, OracleCapError, ORACLE_N_MAX,
};
pub use orientation::{
    enumerate_orientations, OrientationCode, OrientationError, Orientations, MAX_CAP_EDGES,
};
pub use sweep::{
    cycle_table, sweep, tree_sweep, verify_graph, CheckTally, FailingInstance, SweepConfig,
    SweepError, SweepMode, SweepReport, EXHAUSTIVE_N_MAX, SAMPLED_N_MAX,
};
pub use trees::{canonical_form, nonisomorphic_trees};
