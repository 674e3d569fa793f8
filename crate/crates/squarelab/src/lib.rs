//! squarelab: an exact graph-coloring laboratory around squares of graphs.
//!
//! The crate builds the graph families whose squares separate the chromatic
//! number from the list chromatic number (cubic bipartite rings, line
//! graphs of subdivided complete graphs, line graphs of generalized
//! Petersen graphs, the sharpness construction), decides every claim with
//! exact solvers, and packages the results as machine-checkable
//! certificates that rebuild and re-solve from scratch.
//!
//! Module map:
//! - [`graph`]: labeled (multi)graphs and structural predicates;
//! - [`transforms`]: powers, line graph, subdivision, total graph;
//! - [`families`]: family constructors, Latin squares, list builders;
//! - [`solver`]: chromatic number, list coloring, choosability,
//!   avoiding chromatic numbers;
//! - [`orient`]: balanced orientations and Eulerian sub-digraph counts;
//! - [`certify`]: the theorem registry, certificates, and the bounded
//!   search harness;
//! - [`io`]: JSON schemas, DIMACS, DOT.

pub mod certify;
mod clique;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod label;
pub mod orient;
pub mod solver;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, StructureReport};
pub use label::{Role, VertexLabel};
pub use solver::{Coloring, ListAssignment, ListMode, SolveOptions, Verdict};
