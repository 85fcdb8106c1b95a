//! Construction of the bipartite Kneser B type-k graph `H_B(n,k)`, exact
//! closed-form invariants, and graph-algorithmic oracles that recompute each
//! invariant from the materialized graph.

pub mod decimal;
pub mod export;
pub mod formulas;
pub mod graph;
pub mod oracle;
pub mod report;

pub use graph::{
    build_graph, GraphBuilder, GraphError, GroundParams, KneserBGraph, Part, SignedVertex,
};
