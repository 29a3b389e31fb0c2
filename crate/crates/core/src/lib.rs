//! Injective hulls, Helly recognition and related graph algorithms on small
//! connected graphs.

pub mod classes;
pub mod cli;
pub mod dh;
pub mod error;
pub mod generators;
pub mod graph;
pub mod helly;
pub mod hyperbolicity;
pub mod iso;
pub mod tight_span;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
