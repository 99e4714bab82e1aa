//! Dynamic colorings of graphs.
//!
//! A dynamic coloring is a proper coloring in which every vertex of degree at
//! least two sees at least two colors among its neighbors. This crate has
//! exact oracles for the chromatic and dynamic chromatic numbers, the
//! constructive repair pipelines that bound `χ₂ - χ` for regular graphs, a
//! randomized sink-family construction for the `6 ln k + 2` bound, and
//! generators for graphs where `χ₂ > χ`.

pub mod config;
pub mod constructions;
pub mod error;
pub mod exact;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod lll;
pub mod recolor;
pub mod rng;

pub use config::Budgets;
pub use error::{Error, Result};
pub use exact::Coloring;
pub use graph::{Distance, Graph, VertexSet};
pub use hypergraph::Hypergraph;
