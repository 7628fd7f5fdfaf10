//! Stability, matchings and König-Egerváry structure of small graphs.
//!
//! Vertex ids are `0..n`. Exponential oracles (maximum stable sets, all
//! maximum matchings, alternating-structure searches) refuse graphs above
//! the caps in [`Limits`].

pub mod constructions;
pub mod error;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod io;
pub mod ke;
pub mod limits;
pub mod matching;
pub mod report;
pub mod stable;
pub mod structures;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, Graph, Relabeling, VertexSet};
pub use limits::Limits;
pub use matching::{maximum_matching, Matching};
pub use report::{full_report, AnalysisReport};
