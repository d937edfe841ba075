//! Edge-colored graphs, rainbow triangles and anti-Ramsey numbers of disjoint triangles.
//!
//! * [`graph`]: the edge-colored graph type and color-degree primitives.
//! * [`constructions`]: the four extremal families and their color counts.
//! * [`packing`]: exact search for vertex-disjoint rainbow triangles.
//! * [`analysis`]: rainbow-triangle statistics and counting inequalities.
//! * [`oracle`]: brute-force anti-Ramsey numbers for tiny complete graphs.
//! * [`io`]: JSON formats.

pub mod analysis;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod packing;

pub use error::{Error, Result};
pub use graph::{Color, EdgeColoredGraph, GraphBuilder, RainbowTriple};
