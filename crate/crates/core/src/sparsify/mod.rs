//! Randomized reductions to small integer weights and bounded in-degree.
//!
//! Both variants round weights to multiples of a unit `τ`, attach every
//! vertex to the root through a light auxiliary element, rescale to
//! integers, truncate heavy weights and finally neutralise vertices of
//! large in-degree.

mod edge;
mod params;
mod vertex;

pub use edge::{sparsify_edge, sparsify_edge_padded, SparsifiedGraph};
pub use params::{importance_round, Constants, Derived, SparsifyParams, Tau};
pub use vertex::{
    sparsify_vertex, sparsify_vertex_deferred, sparsify_vertex_padded, SparsifiedVertexGraph,
    VertexSparsifierCore,
};

pub(crate) use params::ln_floor1;
