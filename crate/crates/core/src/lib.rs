//! Decycling sets for even graphs through cycle intersection graphs.
//!
//! Pipeline: decompose an even multigraph into edge-disjoint simple cycles
//! ([`decomp`]), build the labelled intersection graph of those cycles
//! ([`ci`]), and turn its structure into certified decycling sets
//! ([`decycle`]). [`optimize`] searches the decomposition space for a CI
//! graph of small cycle rank.

pub mod bench;
pub mod ci;
pub mod decomp;
pub mod decycle;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod optimize;

pub use ci::{build_ci, CIGraph, ForestCover, Link};
pub use decomp::{Cycle, CycleDecomposition};
pub use decycle::{analyze, analyze_components, AnalyzeOptions, BoundReport, DecyclingSet};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, Multigraph, VertexId};
pub use optimize::{optimize_decomposition, Method, OptimizationResult};
