//! Independent feedback vertex sets and near-bipartite decompositions.
//!
//! * [`graph`] and [`vertex_set`]: dense simple graphs and vertex sets.
//! * [`decomposition`]: validation with witnesses, 3-colouring extraction.
//! * [`oracle`]: exhaustive ground truth for small graphs.
//! * [`diam2`]: polynomial-time minimum sets on diameter-2 graphs.
//! * [`reduction`]: the 3-SAT to diameter-3 near-bipartiteness construction.
//! * [`io`], [`generate`], [`cli`]: file formats, random instances, command line.

pub mod cli;
pub mod decomposition;
pub mod diam2;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod reduction;
pub mod vertex_set;

pub use decomposition::{validate_decomposition, NbDecomposition, Verdict};
pub use graph::{Diameter, Graph, GraphError};
pub use vertex_set::VertexSet;
