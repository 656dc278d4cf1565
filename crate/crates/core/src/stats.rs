use std::ops::AddAssign;

/// Operation counters collected by the algorithms.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounts {
    /// Arcs examined by max-flow and local searches.
    pub edge_scans: u64,
    pub flow_calls: u64,
    pub local_builds: u64,
    pub local_queries: u64,
    pub local_searches: u64,
    pub sparsify_calls: u64,
    /// Vertices and edges touched while sparsifying.
    pub sparsify_work: u64,
    /// Root-specific work spent attaching a root to a shared sparsifier core.
    pub attach_work: u64,
}

impl AddAssign for OpCounts {
    fn add_assign(&mut self, rhs: Self) {
        self.edge_scans += rhs.edge_scans;
        self.flow_calls += rhs.flow_calls;
        self.local_builds += rhs.local_builds;
        self.local_queries += rhs.local_queries;
        self.local_searches += rhs.local_searches;
        self.sparsify_calls += rhs.sparsify_calls;
        self.sparsify_work += rhs.sparsify_work;
        self.attach_work += rhs.attach_work;
    }
}

impl OpCounts {
    pub fn fields(&self) -> [(&'static str, u64); 8] {
        [
            ("edge_scans", self.edge_scans),
            ("flow_calls", self.flow_calls),
            ("local_builds", self.local_builds),
            ("local_queries", self.local_queries),
            ("local_searches", self.local_searches),
            ("sparsify_calls", self.sparsify_calls),
            ("sparsify_work", self.sparsify_work),
            ("attach_work", self.attach_work),
        ]
    }
}
