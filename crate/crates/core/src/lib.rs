//! Vertex-coloring edge-weightings with weights `{1, 2, 3}`.
//!
//! Given a simple graph with no connected component equal to a single edge,
//! [`solver::solve`] weights every edge with 1, 2 or 3 so that adjacent
//! vertices receive different weighted degrees. The construction is
//! deterministic and every step is checkable on its own:
//!
//! - [`graph`] holds the graph type, paths, trees and the search helpers.
//! - [`partition`] builds red/blue splits of the vertex set.
//! - [`cutflow`] provides cuts, the auxiliary unit-capacity network and
//!   integral maximum flow.
//! - [`inner`] weights the blue side so that each vertex lands one away
//!   from an odd designated color.
//! - [`parity`] weights the edges between red and blue with prescribed
//!   parities and exact blue targets.
//! - [`solver`] dispatches on local structure and records which branch
//!   each component took.
//! - [`verify`] checks weightings and computes the minimum `k` by brute
//!   force on small graphs.
//! - [`generate`] produces reproducible graph families.
//!
//! ```
//! use onetwothree::graph::Graph;
//! use onetwothree::solver::solve;
//! use onetwothree::verify::verify;
//!
//! let petersen = onetwothree::generate::petersen();
//! let report = solve(&petersen).unwrap();
//! assert!(verify(&petersen, &report.weighting).unwrap().is_empty());
//!
//! let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
//! assert!(solve(&k2).is_err());
//! ```

pub mod cutflow;
pub mod error;
pub mod generate;
pub mod graph;
pub mod inner;
pub mod parity;
pub mod partition;
pub mod solver;
pub mod verify;
pub mod weighting;

pub use error::{Error, Result};
