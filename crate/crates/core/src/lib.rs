//! Exact H-rank computations for mixed graphs.
//!
//! A mixed graph is a simple graph in which some edges are oriented. Its
//! Hermitian adjacency matrix has entry 1 for an undirected edge and `±i` for
//! an arc. This crate computes the rank of that matrix and the rank of the
//! underlying graph's adjacency matrix exactly, classifies graphs against the
//! bound `-2d(G) <= rk(G̃) - r(G) <= 2d(G)` (with `d` the cycle-space
//! dimension), and ships brute-force oracles and exhaustive sweeps that check
//! the surrounding structural results.

pub mod algebra;
pub mod classify;
pub mod mixedgraph;
pub mod structure;
pub mod verify;
