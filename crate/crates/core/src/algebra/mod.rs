//! Exact linear algebra over the Gaussian integers: the Hermitian, adjacency
//! and skew-adjacency matrices of a graph, exact rank, and exact
//! characteristic polynomials.

mod charpoly;
mod gaussian;
mod matrix;
mod rank;

pub use charpoly::{char_poly, IntPolynomial};
pub use gaussian::GaussianInt;
pub use matrix::GaussianMatrix;
pub use rank::exact_rank;

pub(crate) use rank::{small_rank, SmallGaussian};

use num_traits::One;
use thiserror::Error;

use crate::mixedgraph::{MixedGraph, UnderlyingGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("not an oriented graph: {0} undirected edge(s) present")]
    NotOriented(usize),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("characteristic polynomial coefficient a_{index} has a nonzero imaginary part")]
    NonReal { index: usize },
    #[error("characteristic polynomial coefficient a_{index} is not integral")]
    NonIntegral { index: usize },
}

/// `H(G)`: 1 for an undirected edge, `i` at `(u, v)` and `-i` at `(v, u)`
/// for an arc `u -> v`.
pub fn hermitian_matrix(g: &MixedGraph) -> GaussianMatrix {
    let mut h = GaussianMatrix::zeros(g.n(), g.n());
    for (u, v) in g.undirected_edges() {
        h[(u, v)] = GaussianInt::one();
        h[(v, u)] = GaussianInt::one();
    }
    for (u, v) in g.arcs() {
        h[(u, v)] = GaussianInt::new(0, 1);
        h[(v, u)] = GaussianInt::new(0, -1);
    }
    h
}

pub fn adjacency_matrix(g: &UnderlyingGraph) -> GaussianMatrix {
    let mut a = GaussianMatrix::zeros(g.n(), g.n());
    for (u, v) in g.edges() {
        a[(u, v)] = GaussianInt::one();
        a[(v, u)] = GaussianInt::one();
    }
    a
}

/// `S(G^σ)`: 1 at `(u, v)` and -1 at `(v, u)` for each arc `u -> v`.
pub fn skew_adjacency_matrix(g: &MixedGraph) -> Result<GaussianMatrix, AlgebraError> {
    if !g.is_oriented() {
        return Err(AlgebraError::NotOriented(g.undirected_count()));
    }
    let mut s = GaussianMatrix::zeros(g.n(), g.n());
    for (u, v) in g.arcs() {
        s[(u, v)] = GaussianInt::one();
        s[(v, u)] = GaussianInt::from_int(-1);
    }
    Ok(s)
}

/// `H(G)` as machine-width entries, for the hot rank path.
pub(crate) fn hermitian_entries(g: &MixedGraph) -> Vec<SmallGaussian> {
    let n = g.n();
    let mut h = vec![SmallGaussian::ZERO; n * n];
    for (u, v) in g.undirected_edges() {
        h[u * n + v] = SmallGaussian::ONE;
        h[v * n + u] = SmallGaussian::ONE;
    }
    for (u, v) in g.arcs() {
        h[u * n + v] = SmallGaussian::I;
        h[v * n + u] = SmallGaussian::MINUS_I;
    }
    h
}

pub(crate) fn adjacency_entries(g: &UnderlyingGraph) -> Vec<SmallGaussian> {
    let n = g.n();
    let mut a = vec![SmallGaussian::ZERO; n * n];
    for (u, v) in g.edges() {
        a[u * n + v] = SmallGaussian::ONE;
        a[v * n + u] = SmallGaussian::ONE;
    }
    a
}
