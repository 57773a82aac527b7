//! Mutual-visibility parameters of finite graphs.
//!
//! Computes, verifies, and constructs the four mutual-visibility parameters
//! (mu, outer, dual, total) of small graphs by exact search, together with
//! the independent Turán-type and Zarankiewicz oracles they coincide with on
//! products of cliques, line graphs of complete (bipartite) graphs, cographs,
//! and the minimum-size diameter-two families.

pub mod cli;
pub mod cographs;
pub mod constructions;
pub mod extremal;
pub mod generators;
pub mod genlang;
pub mod graph;
pub mod io;
pub mod products;
pub mod report;
pub mod solver;
pub mod visibility;
pub mod vset;

pub use graph::{DistanceMatrix, Graph, INFINITY};
pub use solver::{SolveOptions, SolveResult, Strategy};
pub use visibility::{Variant, VisibilityReport};
pub use vset::VertexSet;
