//! Diametral paths in Fibonacci, Lucas and Alternate Lucas cubes.
//!
//! The cubes are induced subgraphs of the hypercube `Q_n` whose vertices are
//! binary strings avoiding certain pairs of 1s. This crate builds them as
//! bitmask vertex sets, finds their diametrically opposite vertex pairs,
//! counts shortest paths between those pairs exactly, and maps the paths
//! bijectively onto (constrained) alternating permutations, whose counts are
//! Euler numbers.
//!
//! Modules:
//!
//! - [`bitcubes`]: vertices, family predicates, adjacency, fundamental decompositions.
//! - [`metrics`]: BFS distances, diameter, diametral pairs (searched and closed form).
//! - [`pathcount`]: shortest-path counting and enumeration.
//! - [`euler`]: Euler numbers and alternating permutation classes.
//! - [`bijection`]: step tables and the path/permutation bijections.
//! - [`cli`]: the `cubepaths` command-line front end.

pub mod bijection;
pub mod bitcubes;
pub mod cli;
mod error;
pub mod euler;
pub mod metrics;
pub mod pathcount;

pub use bitcubes::{CubeFamily, Vertex};
pub use error::{Error, Result};
pub use euler::Permutation;
pub use pathcount::{BigCount, Path};
