//! Directed graph representations, transforms and exact cut evaluation.

use crate::error::{Error, Result};
use crate::rational::{common_denominator, from_units, to_units, Rational};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
    /// Weight in units of `1 / denominator`.
    pub weight: u64,
}

/// Directed graph with positive integer edge weights over a common denominator.
///
/// Parallel edges are kept distinct. Self-loops are dropped at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDigraph {
    n: usize,
    edges: Vec<Edge>,
    out_adj: Vec<Vec<EdgeId>>,
    in_adj: Vec<Vec<EdgeId>>,
    denominator: u64,
}

impl WeightedDigraph {
    /// Builds a graph whose weights are integers.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId, u64)>) -> Result<Self> {
        Self::with_denominator(n, edges, 1)
    }

    /// Builds a graph whose weights are `units / denominator`.
    pub fn with_denominator(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId, u64)>,
        denominator: u64,
    ) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::InvalidParameter("denominator must be positive".into()));
        }
        let mut g = WeightedDigraph {
            n,
            edges: Vec::new(),
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            denominator,
        };
        for (index, (tail, head, weight)) in edges.into_iter().enumerate() {
            check_vertex(tail, n)?;
            check_vertex(head, n)?;
            if weight == 0 {
                return Err(Error::NonPositiveEdgeWeight { index });
            }
            if tail != head {
                g.push_edge(tail, head, weight);
            }
        }
        Ok(g)
    }

    fn push_edge(&mut self, tail: VertexId, head: VertexId, weight: u64) -> EdgeId {
        let id = self.edges.len();
        self.edges.push(Edge { tail, head, weight });
        self.out_adj[tail].push(id);
        self.in_adj[head].push(id);
        id
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_adj[v]
    }

    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_adj[v]
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_adj[v].len()
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_adj[v].len()
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn weighted_in_degree(&self, v: VertexId) -> u64 {
        self.in_adj[v].iter().map(|&e| self.edges[e].weight).sum()
    }

    pub fn min_weight(&self) -> Option<u64> {
        self.edges.iter().map(|e| e.weight).min()
    }

    pub fn to_rational(&self, units: u64) -> Rational {
        from_units(units, self.denominator)
    }

    /// Every edge `(u, v, w)` becomes `(v, u, w)`; edge ids are preserved.
    pub fn reverse(&self) -> WeightedDigraph {
        WeightedDigraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| Edge { tail: e.head, head: e.tail, weight: e.weight })
                .collect(),
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
            denominator: self.denominator,
        }
    }

    /// Total weight of edges entering `mask` from outside it.
    pub fn in_cut_weight_mask(&self, mask: &[bool]) -> u64 {
        self.edges
            .iter()
            .filter(|e| !mask[e.tail] && mask[e.head])
            .map(|e| e.weight)
            .sum()
    }

    pub fn in_cut_edges_mask(&self, mask: &[bool]) -> Vec<EdgeId> {
        (0..self.edges.len())
            .filter(|&i| {
                let e = self.edges[i];
                !mask[e.tail] && mask[e.head]
            })
            .collect()
    }

    /// Vertices reachable from `source` along edges of positive weight.
    pub fn reachable_from(&self, source: VertexId) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![source];
        seen[source] = true;
        while let Some(u) = stack.pop() {
            for &e in &self.out_adj[u] {
                let h = self.edges[e].head;
                if !seen[h] {
                    seen[h] = true;
                    stack.push(h);
                }
            }
        }
        seen
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        check_vertex(v, self.n)
    }
}

/// Builds a graph from exact rational weights, choosing the least common
/// denominator as the unit.
pub fn build_graph(n: usize, edge_list: &[(VertexId, VertexId, Rational)]) -> Result<WeightedDigraph> {
    for (index, (_, _, w)) in edge_list.iter().enumerate() {
        if *w.numer() == 0 {
            return Err(Error::NonPositiveEdgeWeight { index });
        }
    }
    let den = common_denominator(edge_list.iter().map(|(_, _, w)| w))?;
    let edges = edge_list
        .iter()
        .map(|(u, v, w)| Ok((*u, *v, to_units(w, den)?)))
        .collect::<Result<Vec<_>>>()?;
    WeightedDigraph::with_denominator(n, edges, den)
}

fn check_vertex(v: VertexId, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { id: v, n })
    }
}

pub(crate) fn mask_of(n: usize, set: &[VertexId]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &v in set {
        mask[v] = true;
    }
    mask
}

/// Weight (in graph units) of the edges entering `s` from outside.
pub fn in_cut_weight(g: &WeightedDigraph, s: &[VertexId]) -> u64 {
    g.in_cut_weight_mask(&mask_of(g.vertex_count(), s))
}

/// Merges `absorbed` into `root`, dropping the self-loops this creates.
///
/// Surviving vertices are relabelled in increasing order of their original
/// id; the returned mapping sends every original id (absorbed ones included)
/// to its new id.
pub fn contract_into_root(
    g: &WeightedDigraph,
    root: VertexId,
    absorbed: &[VertexId],
) -> Result<(WeightedDigraph, Vec<VertexId>)> {
    let (h, map, _) = contract_with_edge_origin(g, root, absorbed)?;
    Ok((h, map))
}

/// As [`contract_into_root`], also returning the original id of every
/// surviving edge.
pub(crate) fn contract_with_edge_origin(
    g: &WeightedDigraph,
    root: VertexId,
    absorbed: &[VertexId],
) -> Result<(WeightedDigraph, Vec<VertexId>, Vec<EdgeId>)> {
    g.check_vertex(root)?;
    for &v in absorbed {
        g.check_vertex(v)?;
        if v == root {
            return Err(Error::RootAbsorbed(root));
        }
    }
    let gone = mask_of(g.vertex_count(), absorbed);
    let mut map = vec![0; g.vertex_count()];
    let mut next = 0;
    for v in 0..g.vertex_count() {
        if !gone[v] {
            map[v] = next;
            next += 1;
        }
    }
    for &v in absorbed {
        map[v] = map[root];
    }
    let mut h = WeightedDigraph::with_denominator(next, std::iter::empty(), g.denominator)?;
    let mut origin = Vec::new();
    for (id, e) in g.edges.iter().enumerate() {
        let (t, hd) = (map[e.tail], map[e.head]);
        if t != hd {
            h.push_edge(t, hd, e.weight);
            origin.push(id);
        }
    }
    Ok((h, map, origin))
}

/// Directed graph with vertex weights.
///
/// Weights are positive unless the graph was built with
/// [`VertexWeightedDigraph::allowing_zero`], which sparsified outputs use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexWeightedDigraph {
    edges: Vec<(VertexId, VertexId)>,
    weights: Vec<u64>,
    out_adj: Vec<Vec<VertexId>>,
    in_adj: Vec<Vec<VertexId>>,
    denominator: u64,
}

impl VertexWeightedDigraph {
    pub fn new(
        weights: Vec<u64>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        Self::with_denominator(weights, edges, 1)
    }

    pub fn with_denominator(
        weights: Vec<u64>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
        denominator: u64,
    ) -> Result<Self> {
        if let Some(v) = weights.iter().position(|&w| w == 0) {
            return Err(Error::NonPositiveVertexWeight { vertex: v });
        }
        Self::allowing_zero(weights, edges, denominator)
    }

    /// Like [`VertexWeightedDigraph::with_denominator`] but accepts zero weights.
    pub fn allowing_zero(
        weights: Vec<u64>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
        denominator: u64,
    ) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::InvalidParameter("denominator must be positive".into()));
        }
        let n = weights.len();
        let mut g = VertexWeightedDigraph {
            edges: Vec::new(),
            weights,
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            denominator,
        };
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u != v {
                g.edges.push((u, v));
                g.out_adj[u].push(v);
                g.in_adj[v].push(u);
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, v: VertexId) -> u64 {
        self.weights[v]
    }

    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.in_adj[v]
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn to_rational(&self, units: u64) -> Rational {
        from_units(units, self.denominator)
    }

    pub fn reverse(&self) -> VertexWeightedDigraph {
        VertexWeightedDigraph {
            edges: self.edges.iter().map(|&(u, v)| (v, u)).collect(),
            weights: self.weights.clone(),
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
            denominator: self.denominator,
        }
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.out_adj[u].contains(&v)
    }

    /// Legal sink vertices for `root`: everything except the root and its
    /// out-neighbours.
    pub fn eligible_sinks(&self, root: VertexId) -> Vec<VertexId> {
        let mut banned = vec![false; self.vertex_count()];
        banned[root] = true;
        for &v in &self.out_adj[root] {
            banned[v] = true;
        }
        (0..self.vertex_count()).filter(|&v| !banned[v]).collect()
    }

    pub fn reachable_from(&self, source: VertexId) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![source];
        seen[source] = true;
        while let Some(u) = stack.pop() {
            for &h in &self.out_adj[u] {
                if !seen[h] {
                    seen[h] = true;
                    stack.push(h);
                }
            }
        }
        seen
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        check_vertex(v, self.vertex_count())
    }
}

/// Separator of the vertex in-cut of `s`, or `None` when the cut is
/// undefined because `root` lies in `s` or has an edge into `s`.
///
/// The separator is `N⁻(s) \ s`, returned sorted, with its total weight.
pub fn vertex_in_cut(
    g: &VertexWeightedDigraph,
    root: VertexId,
    s: &[VertexId],
) -> Option<(Vec<VertexId>, u64)> {
    vertex_in_cut_mask(g, root, &mask_of(g.vertex_count(), s))
}

pub(crate) fn vertex_in_cut_mask(
    g: &VertexWeightedDigraph,
    root: VertexId,
    mask: &[bool],
) -> Option<(Vec<VertexId>, u64)> {
    if mask[root] {
        return None;
    }
    let mut in_sep = vec![false; g.vertex_count()];
    for v in (0..g.vertex_count()).filter(|&v| mask[v]) {
        for &u in g.in_neighbors(v) {
            if !mask[u] {
                if u == root {
                    return None;
                }
                in_sep[u] = true;
            }
        }
    }
    let sep: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| in_sep[v]).collect();
    let weight = sep.iter().map(|&v| g.weight(v)).sum();
    Some((sep, weight))
}

/// Where an edge of a split graph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitEdge {
    /// The `(v⁻, v⁺)` edge carrying the weight of `v`.
    Internal(VertexId),
    /// The image `(u⁺, v⁻)` of the original edge with this index.
    Original(usize),
}

/// Correspondence between a vertex-weighted graph and its split graph.
///
/// Vertex `v` becomes `v⁻ = 2v` and `v⁺ = 2v + 1`. Zero-capacity edges are
/// omitted, so a zero-weight vertex has no internal edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMapping {
    pub internal_edge: Vec<Option<EdgeId>>,
    pub origin: Vec<SplitEdge>,
}

impl SplitMapping {
    pub fn in_vertex(v: VertexId) -> VertexId {
        2 * v
    }

    pub fn out_vertex(v: VertexId) -> VertexId {
        2 * v + 1
    }

    pub fn original_vertex(split: VertexId) -> VertexId {
        split / 2
    }
}

/// Edge-capacitated encoding of vertex capacities.
///
/// Each vertex `v` yields `(v⁻, v⁺)` with capacity `w(v)`; each edge
/// `(u, v)` yields `(u⁺, v⁻)` with capacity `w(u)`.
pub fn split_graph(g: &VertexWeightedDigraph) -> (WeightedDigraph, SplitMapping) {
    let n = g.vertex_count();
    let mut h = WeightedDigraph::with_denominator(2 * n, std::iter::empty(), g.denominator)
        .expect("positive denominator");
    let mut internal_edge = vec![None; n];
    let mut origin = Vec::with_capacity(n + g.edge_count());
    for (v, slot) in internal_edge.iter_mut().enumerate() {
        let w = g.weight(v);
        if w > 0 {
            *slot = Some(h.push_edge(SplitMapping::in_vertex(v), SplitMapping::out_vertex(v), w));
            origin.push(SplitEdge::Internal(v));
        }
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let w = g.weight(u);
        if w > 0 {
            h.push_edge(SplitMapping::out_vertex(u), SplitMapping::in_vertex(v), w);
            origin.push(SplitEdge::Original(i));
        }
    }
    (h, SplitMapping { internal_edge, origin })
}

/// What a cut removes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutElements {
    /// Ids of the edges entering the sink component.
    Edges(Vec<EdgeId>),
    /// Non-root vertices outside the sink component with an edge into it.
    Vertices(Vec<VertexId>),
}

/// A rooted cut, described by its sink component and evaluated exactly in
/// the graph it was computed for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub root: VertexId,
    /// Sorted vertex ids cut off from the root.
    pub sink_component: Vec<VertexId>,
    pub elements: CutElements,
    /// Weight in units of `1 / denominator`.
    pub weight_units: u64,
    pub denominator: u64,
}

impl CutResult {
    /// Evaluates the edge cut whose sink component is `sink`.
    pub fn edge_cut(g: &WeightedDigraph, root: VertexId, sink: Vec<VertexId>) -> CutResult {
        let mut sink = sink;
        sink.sort_unstable();
        sink.dedup();
        debug_assert!(!sink.is_empty() && !sink.contains(&root));
        let mask = mask_of(g.vertex_count(), &sink);
        let edges = g.in_cut_edges_mask(&mask);
        let weight_units = edges.iter().map(|&e| g.edge(e).weight).sum();
        CutResult {
            root,
            sink_component: sink,
            elements: CutElements::Edges(edges),
            weight_units,
            denominator: g.denominator(),
        }
    }

    /// Evaluates the vertex cut whose sink component is `sink`; `None` if the
    /// root is adjacent to (or inside) the sink.
    pub fn vertex_cut(
        g: &VertexWeightedDigraph,
        root: VertexId,
        sink: Vec<VertexId>,
    ) -> Option<CutResult> {
        let mut sink = sink;
        sink.sort_unstable();
        sink.dedup();
        if sink.is_empty() {
            return None;
        }
        let (sep, weight_units) = vertex_in_cut(g, root, &sink)?;
        Some(CutResult {
            root,
            sink_component: sink,
            elements: CutElements::Vertices(sep),
            weight_units,
            denominator: g.denominator(),
        })
    }

    pub fn weight(&self) -> Rational {
        from_units(self.weight_units, self.denominator)
    }

    /// Ordering used to pick between candidates: lighter first, then the
    /// lexicographically smaller sink component.
    pub fn better_than(&self, other: &CutResult) -> bool {
        (self.weight_units, &self.sink_component) < (other.weight_units, &other.sink_component)
    }

    /// Checks the cut invariants against `g` (edge variant).
    pub fn is_valid_edge_cut(&self, g: &WeightedDigraph) -> bool {
        if self.sink_component.is_empty() || self.sink_component.contains(&self.root) {
            return false;
        }
        let expect = CutResult::edge_cut(g, self.root, self.sink_component.clone());
        expect == *self
    }

    /// Checks the cut invariants against `g` (vertex variant).
    pub fn is_valid_vertex_cut(&self, g: &VertexWeightedDigraph) -> bool {
        match CutResult::vertex_cut(g, self.root, self.sink_component.clone()) {
            Some(expect) => expect == *self,
            None => false,
        }
    }
}

/// Result of a search that may find no cut at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutOutcome {
    Cut(CutResult),
    /// No cut of the requested kind exists (for vertex cuts: the root, or
    /// every vertex, is adjacent to everything).
    NoCut,
}

impl CutOutcome {
    pub fn cut(&self) -> Option<&CutResult> {
        match self {
            CutOutcome::Cut(c) => Some(c),
            CutOutcome::NoCut => None,
        }
    }
}
