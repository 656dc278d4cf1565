//! Approximate minimum rooted and global cuts in directed graphs.
//!
//! Edge-weighted and vertex-weighted variants are supported. Each driver
//! combines a randomized sparsification step with two search strategies:
//! a deterministic local flow search for cuts with small sink components,
//! and sampled exact `(r, t)` max-flow for large ones. Every returned cut
//! is re-evaluated exactly in the input graph, so randomness can only make
//! an answer suboptimal, never invalid.
//!
//! Exact reference algorithms live in [`oracle`].

pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod local;
pub mod maxflow;
pub mod oracle;
pub mod rational;
pub mod rng;
pub mod rooted;
pub mod sparsify;
pub mod stats;

pub use error::{Error, Result};
pub use graph::{
    contract_into_root, in_cut_weight, split_graph, vertex_in_cut, CutElements, CutOutcome,
    CutResult, Edge, EdgeId, SplitEdge, SplitMapping, VertexId, VertexWeightedDigraph,
    WeightedDigraph,
};
pub use io::{emit_edge_graph, emit_vertex_graph, parse_graph, ParsedGraph};
pub use local::{
    build_local_ec, build_local_vc, LocalConfig, LocalEcStructure, LocalQuery, LocalQueryAnswer,
    LocalStats, LocalVcStructure,
};
pub use maxflow::{max_flow, vertex_max_flow, FlowResult, VertexFlowResult};
pub use rational::Rational;
pub use rng::SeedStream;
pub use rooted::{
    approx_global_ec, approx_global_vc, approx_rooted_ec, approx_rooted_vc, ApproxCutReport,
    Branch, DriverConfig, GuessRecord,
};
pub use sparsify::{
    importance_round, sparsify_edge, sparsify_vertex, sparsify_vertex_deferred, Constants,
    SparsifiedGraph, SparsifiedVertexGraph, SparsifyParams, Tau, VertexSparsifierCore,
};
pub use stats::OpCounts;
