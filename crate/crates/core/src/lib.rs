//! Strong orientations of diameter-4 bridgeless multigraphs.
//!
//! The entry point is [`pipeline::orient_diameter4`]: pick a base edge,
//! split the vertices into cells around it, run the orientation stages and
//! verify the result. [`oracle`] gives exact answers on small graphs and
//! [`corpus`] generates test inputs.

pub mod bounds;
pub mod constructions;
pub mod corpus;
pub mod graph;
pub mod io;
pub mod mixed;
pub mod oracle;
pub mod partition;
pub mod pipeline;
pub mod vset;

pub use graph::{Distance, EdgeId, MultiGraph, VertexId};
pub use mixed::{EdgeDirection, MixedOrientation, Stage};
pub use vset::VertexSet;
