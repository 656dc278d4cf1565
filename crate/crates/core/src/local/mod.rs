//! Local cut queries on sparsified graphs.
//!
//! A structure is built once per `(root, λ, k)` and answers `(r, t)`
//! queries by running Ford–Fulkerson from `t` towards the root in the
//! reversed sparsified graph. Every vertex can escape to the root through
//! its auxiliary element, so a search stops as soon as it meets a vertex
//! whose escape still has residual capacity; only saturated vertices are
//! ever expanded, which keeps the work independent of the graph size.

mod edge;
mod engine;
mod vertex;

use std::ops::AddAssign;

use crate::error::Result;
use crate::graph::VertexId;

pub use edge::{build_local_ec, LocalEcStructure};
pub use vertex::{build_local_vc, LocalVcStructure};
pub(crate) use vertex::from_sparse;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalConfig {
    /// Augment one unit at a time instead of by the path bottleneck.
    pub unit_augmentation: bool,
    /// Check the saturation bounds after every augmentation.
    pub audit: bool,
    /// Constant in the edge-variant search budget `c · k² ln n / ε²`.
    pub budget_factor: f64,
}

impl Default for LocalConfig {
    fn default() -> Self {
        LocalConfig { unit_augmentation: false, audit: cfg!(debug_assertions), budget_factor: 16.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalQueryAnswer {
    Found {
        /// Input vertex ids, sorted.
        sink_component: Vec<VertexId>,
        /// Cut weight in the sparsified graph, in units of `τ`.
        sparse_weight: u64,
    },
    AboveThreshold,
}

/// Counters from local queries. The `*_violations` fields count breaches
/// of bounds that hold by construction and should stay zero.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct LocalStats {
    pub queries: u64,
    pub searches: u64,
    pub augmentations: u64,
    pub scans: u64,
    pub residual_scans: u64,
    /// Largest residual-arc count of a single search.
    pub max_search: u64,
    pub budget_exceeded: u64,
    pub audit_checks: u64,
    /// Saturated vertices times the auxiliary weight exceeded the flow.
    pub saturation_violations: u64,
    /// Out-degrees of saturated in-vertices summed to more than the flow.
    pub in_vertex_violations: u64,
    /// A residual out-degree grew by more than one per augmentation.
    pub out_degree_violations: u64,
    pub max_saturated: u64,
}

impl LocalStats {
    pub fn violations(&self) -> u64 {
        self.budget_exceeded + self.saturation_violations + self.in_vertex_violations + self.out_degree_violations
    }

    pub fn fields(&self) -> [(&'static str, u64); 12] {
        [
            ("queries", self.queries),
            ("searches", self.searches),
            ("augmentations", self.augmentations),
            ("scans", self.scans),
            ("residual_scans", self.residual_scans),
            ("max_search", self.max_search),
            ("budget_exceeded", self.budget_exceeded),
            ("audit_checks", self.audit_checks),
            ("saturation_violations", self.saturation_violations),
            ("in_vertex_violations", self.in_vertex_violations),
            ("out_degree_violations", self.out_degree_violations),
            ("max_saturated", self.max_saturated),
        ]
    }
}

impl AddAssign for LocalStats {
    fn add_assign(&mut self, o: Self) {
        self.queries += o.queries;
        self.searches += o.searches;
        self.augmentations += o.augmentations;
        self.scans += o.scans;
        self.residual_scans += o.residual_scans;
        self.max_search = self.max_search.max(o.max_search);
        self.budget_exceeded += o.budget_exceeded;
        self.audit_checks += o.audit_checks;
        self.saturation_violations += o.saturation_violations;
        self.in_vertex_violations += o.in_vertex_violations;
        self.out_degree_violations += o.out_degree_violations;
        self.max_saturated = self.max_saturated.max(o.max_saturated);
    }
}

/// Common interface of the two local structures.
pub trait LocalQuery {
    /// Answers an `(r, t)` query for the input vertex `t`.
    fn query(&self, t: VertexId) -> Result<(LocalQueryAnswer, LocalStats)>;

    /// Per-search budget on residual arcs.
    fn budget(&self) -> u64;

    /// Largest flow for which a cut is still reported, in units of `τ`.
    fn flow_limit(&self) -> u64;
}
