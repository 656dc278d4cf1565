//! Exact maximum flow (Dinic) and the vertex-capacitated variant.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{split_graph, vertex_in_cut, EdgeId, SplitMapping, VertexId, VertexWeightedDigraph, WeightedDigraph};

/// Maximum flow value and the source-minimal minimum cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowResult {
    /// In units of the graph's denominator.
    pub value: u64,
    /// Vertices reachable from the source in the final residual graph, sorted.
    pub source_side: Vec<VertexId>,
    /// Edges leaving `source_side`, sorted.
    pub min_cut_edges: Vec<EdgeId>,
    pub edge_scans: u64,
}

/// Minimum vertex separator between two non-adjacent vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexFlowResult {
    pub value: u64,
    /// Separator vertices, sorted.
    pub separator: Vec<VertexId>,
    /// Vertices cut off from the source, sorted; always contains the sink.
    pub sink_component: Vec<VertexId>,
    pub edge_scans: u64,
}

/// Residual network with paired arcs (`2i` forward, `2i + 1` backward).
#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    n: usize,
    head: Vec<VertexId>,
    cap: Vec<u64>,
    start: Vec<usize>,
    order: Vec<usize>,
    pub(crate) scans: u64,
}

impl FlowNetwork {
    pub(crate) fn new(n: usize, arcs: &[(VertexId, VertexId, u64)]) -> Self {
        let mut head = Vec::with_capacity(2 * arcs.len());
        let mut cap = Vec::with_capacity(2 * arcs.len());
        let mut deg = vec![0usize; n + 1];
        for &(u, v, c) in arcs {
            head.push(v);
            cap.push(c);
            head.push(u);
            cap.push(0);
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut start = vec![0usize; n + 1];
        for v in 0..n {
            start[v + 1] = start[v] + deg[v];
        }
        let mut fill = start.clone();
        let mut order = vec![0usize; head.len()];
        for (i, &(u, v, _)) in arcs.iter().enumerate() {
            order[fill[u]] = 2 * i;
            fill[u] += 1;
            order[fill[v]] = 2 * i + 1;
            fill[v] += 1;
        }
        FlowNetwork { n, head, cap, start, order, scans: 0 }
    }

    fn tail(&self, arc: usize) -> VertexId {
        self.head[arc ^ 1]
    }

    fn levels(&mut self, s: VertexId) -> Vec<u32> {
        let mut level = vec![u32::MAX; self.n];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.order[self.start[u]..self.start[u + 1]] {
                self.scans += 1;
                let v = self.head[a];
                if self.cap[a] > 0 && level[v] == u32::MAX {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        level
    }

    /// Runs Dinic's algorithm and returns the flow value.
    pub(crate) fn run(&mut self, s: VertexId, t: VertexId) -> u64 {
        let mut total: u64 = 0;
        loop {
            let level = self.levels(s);
            if level[t] == u32::MAX {
                return total;
            }
            let mut next = self.start.clone();
            loop {
                let pushed = self.blocking_path(s, t, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total = total.saturating_add(pushed);
            }
        }
    }

    /// Finds one augmenting path in the level graph and pushes its bottleneck.
    fn blocking_path(&mut self, s: VertexId, t: VertexId, level: &[u32], next: &mut [usize]) -> u64 {
        let mut path: Vec<usize> = Vec::new();
        let mut u = s;
        loop {
            if u == t {
                let push = path.iter().map(|&a| self.cap[a]).min().unwrap_or(0);
                for &a in &path {
                    self.cap[a] -= push;
                    self.cap[a ^ 1] += push;
                }
                return push;
            }
            let end = self.start[u + 1];
            let mut advanced = false;
            while next[u] < end {
                let a = self.order[next[u]];
                self.scans += 1;
                let v = self.head[a];
                if self.cap[a] > 0 && level[v] == level[u] + 1 {
                    path.push(a);
                    u = v;
                    advanced = true;
                    break;
                }
                next[u] += 1;
            }
            if !advanced {
                // Dead end: retreat and skip the arc that led here.
                match path.pop() {
                    Some(a) => {
                        u = self.tail(a);
                        next[u] += 1;
                    }
                    None => return 0,
                }
            }
        }
    }

    /// Vertices reachable from `s` through arcs with residual capacity.
    pub(crate) fn residual_reachable(&mut self, s: VertexId) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &a in &self.order[self.start[u]..self.start[u + 1]] {
                self.scans += 1;
                let v = self.head[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

/// Exact `(s, t)` maximum flow; the cut returned is the set of vertices
/// reachable from `s` in the final residual graph.
pub fn max_flow(g: &WeightedDigraph, s: VertexId, t: VertexId) -> Result<FlowResult> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameTerminals(s));
    }
    let arcs: Vec<_> = g.edges().iter().map(|e| (e.tail, e.head, e.weight)).collect();
    let mut net = FlowNetwork::new(g.vertex_count(), &arcs);
    let value = net.run(s, t);
    let reach = net.residual_reachable(s);
    let min_cut_edges = g.in_cut_edges_mask(&reach.iter().map(|&b| !b).collect::<Vec<_>>());
    let cut_weight: u64 = min_cut_edges.iter().map(|&e| g.edge(e).weight).sum();
    debug_assert_eq!(value, cut_weight, "flow value differs from cut weight");
    Ok(FlowResult {
        value,
        source_side: (0..g.vertex_count()).filter(|&v| reach[v]).collect(),
        min_cut_edges,
        edge_scans: net.scans,
    })
}

/// Minimum weight `(s, t)` vertex separator via the split graph.
///
/// Arcs leaving `s⁺` are treated as uncapacitated: giving them the weight of
/// `s` would let a cut through them undercut every real separator.
pub fn vertex_max_flow(g: &VertexWeightedDigraph, s: VertexId, t: VertexId) -> Result<VertexFlowResult> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameTerminals(s));
    }
    if g.has_edge(s, t) {
        return Err(Error::AdjacentTerminals { from: s, to: t });
    }
    let (split, _) = split_graph(g);
    let infinite = g.total_weight().saturating_add(1);
    let source = SplitMapping::out_vertex(s);
    let mut arcs: Vec<_> = split
        .edges()
        .iter()
        .map(|e| (e.tail, e.head, if e.tail == source { infinite } else { e.weight }))
        .collect();
    // A zero-weight source has no split arcs of its own.
    if g.weight(s) == 0 {
        arcs.extend(g.out_neighbors(s).iter().map(|&v| (source, SplitMapping::in_vertex(v), infinite)));
    }
    let mut net = FlowNetwork::new(split.vertex_count(), &arcs);
    let value = net.run(source, SplitMapping::in_vertex(t));
    let reach = net.residual_reachable(source);
    let sink_component: Vec<VertexId> = (0..g.vertex_count())
        .filter(|&v| !reach[SplitMapping::in_vertex(v)] && !reach[SplitMapping::out_vertex(v)])
        .collect();
    let (separator, weight) =
        vertex_in_cut(g, s, &sink_component).expect("finite cut never isolates a root out-neighbour");
    debug_assert_eq!(value, weight, "vertex flow value differs from separator weight");
    Ok(VertexFlowResult { value, separator, sink_component, edge_scans: net.scans })
}
