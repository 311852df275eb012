//! Exact analysis of well-hued graphs.
//!
//! A graph is well-hued when, for every `k ≥ 1`, all maximal induced
//! `k`-colorable subgraphs have the same order `a_k`. This crate computes
//! hue sequences by exhaustive enumeration, recognizes the known structural
//! families, decides well-equi-huedness of cographs through their cotrees,
//! and runs exhaustive searches over small connected graphs.

pub mod atlas;
pub mod chroma;
pub mod cotree;
pub mod families;
pub mod graph;

pub use chroma::{hue_profile, HueProfile};
pub use graph::{Graph, GraphError, VertexSet};
