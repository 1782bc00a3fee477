//! Certified Hamilton-path extraction.
//!
//! For a graph `G`, a parameter `k` and endpoints `u != v`, [`engine::extract`]
//! returns either a Hamilton `(u, v)`-path or a certificate that `G` is not
//! `2k`-connected, contains an induced `P2 ∪ kP1`, or has toughness at most
//! one. Every outcome can be re-checked with [`certificates::validate_outcome`],
//! which shares no code with the engine.

pub mod certificates;
pub mod engine;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod invariants;
pub mod outcome;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
