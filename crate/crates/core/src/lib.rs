//! Cyclically 5-connected cubic graphs: connectivity predicates, the
//! expansion operations that build them, topological containment search, and
//! exhaustive census tools that check the structure theory at small orders.

pub mod graph;

pub use graph::{CanonicalForm, CubicGraph, Edge, Graph, GraphError, SubcubicGraph};
pub mod connectivity;
pub mod families;
pub mod embedding;
pub mod expansions;
pub mod generator;
pub mod verify;
pub mod cli;
