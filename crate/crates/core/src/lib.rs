//! Structural checks for candidate R(3,10)-critical graphs and regeneration of
//! their admissible degree-sequence tables.

pub mod constraints;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod invariants;

pub use error::{EnumerateError, Graph6Error, GraphError};
pub use graph::{Diameter, Graph, Induced, LayerProfile, VertexSet};
pub use graph6::{parse_graph6, to_graph6};
