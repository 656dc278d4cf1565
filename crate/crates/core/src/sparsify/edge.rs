use crate::error::Result;
use crate::graph::{contract_with_edge_origin, EdgeId, VertexId, WeightedDigraph};

use super::params::{round_units, Derived, SparsifyParams, Tau};

/// Output of [`sparsify_edge`]. Weights are integers in units of `τ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsifiedGraph {
    pub graph: WeightedDigraph,
    pub tau: Tau,
    /// Root in sparsified ids.
    pub root: VertexId,
    /// The auxiliary `(root, v)` edge of every non-root vertex, by sparsified id.
    pub aux_edge: Vec<Option<EdgeId>>,
    /// Sparsified id to input id.
    pub to_original: Vec<VertexId>,
    /// Input id to sparsified id; `None` for vertices contracted into the root.
    pub from_original: Vec<Option<VertexId>>,
    pub derived: Derived,
}

impl SparsifiedGraph {
    /// True when every vertex was contracted, leaving no candidate sink.
    pub fn is_degenerate(&self) -> bool {
        self.graph.vertex_count() <= 1
    }

    pub fn original_set(&self, s: &[VertexId]) -> Vec<VertexId> {
        let mut out: Vec<_> = s.iter().map(|&v| self.to_original[v]).collect();
        out.sort_unstable();
        out
    }

    /// Lists violations of the deterministic structural guarantees.
    pub fn structural_violations(&self) -> Vec<String> {
        let g = &self.graph;
        let d = self.derived;
        let mut out = Vec::new();
        for (i, e) in g.edges().iter().enumerate() {
            if e.weight == 0 || e.weight > d.cap {
                out.push(format!("edge {i} has weight {} outside [1, {}]", e.weight, d.cap));
            }
        }
        for v in 0..g.vertex_count() {
            if g.in_degree(v) as u64 >= d.delta {
                out.push(format!("vertex {v} has in-degree {} >= {}", g.in_degree(v), d.delta));
            }
            if v == self.root {
                continue;
            }
            match self.aux_edge[v] {
                Some(id) => {
                    let e = g.edge(id);
                    if e.tail != self.root || e.head != v || e.weight < d.aux.min(d.cap) {
                        out.push(format!("auxiliary edge of {v} is malformed: {e:?}"));
                    }
                }
                None => out.push(format!("vertex {v} has no auxiliary edge")),
            }
        }
        out
    }
}

/// The graph after rounding and padding, before rescaled weights are
/// truncated and heavy vertices contracted. Vertex ids are unchanged.
pub fn sparsify_edge_padded(g: &WeightedDigraph, root: VertexId, p: &SparsifyParams) -> Result<(WeightedDigraph, Tau)> {
    let (h, _, _) = padded(g, root, p)?;
    Ok((h, p.tau(g.vertex_count(), g.denominator())))
}

/// Returns the padded graph, the auxiliary edge of each vertex, and derived constants.
fn padded(g: &WeightedDigraph, root: VertexId, p: &SparsifyParams) -> Result<(WeightedDigraph, Vec<Option<EdgeId>>, Derived)> {
    p.validate()?;
    g.check_vertex(root)?;
    let n = g.vertex_count();
    let d = p.derive(n);
    let mut rng = p.seed.rng();
    let mut rounded = Vec::with_capacity(g.edge_count() + n);
    let mut root_extra = vec![0u64; n];
    for e in g.edges() {
        // Edges into the root never cross an r-cut.
        if e.head == root {
            continue;
        }
        let w = round_units(e.weight, d.steps, p.lambda_units, &mut rng)?;
        if w == 0 {
            continue;
        }
        if e.tail == root {
            root_extra[e.head] += w;
        } else {
            rounded.push((e.tail, e.head, w));
        }
    }
    let first_aux = rounded.len();
    let mut aux_edge = vec![None; n];
    for v in (0..n).filter(|&v| v != root) {
        aux_edge[v] = Some(rounded.len());
        rounded.push((root, v, d.aux + root_extra[v]));
    }
    debug_assert!(rounded[first_aux..].iter().all(|e| e.0 == root));
    Ok((WeightedDigraph::new(n, rounded)?, aux_edge, d))
}

/// Sparsifies an edge-weighted graph for cuts rooted at `root`.
pub fn sparsify_edge(g: &WeightedDigraph, root: VertexId, p: &SparsifyParams) -> Result<SparsifiedGraph> {
    let (h, aux_edge, d) = padded(g, root, p)?;
    let n = g.vertex_count();
    let heavy: Vec<VertexId> = (0..n).filter(|&v| v != root && h.in_degree(v) as u64 >= d.delta).collect();
    let mut is_heavy = vec![false; n];
    for &v in &heavy {
        is_heavy[v] = true;
    }
    // Edges into contracted vertices would end at the root; they are dropped
    // like every other edge into the root.
    let kept: Vec<EdgeId> = (0..h.edge_count()).filter(|&i| !is_heavy[h.edge(i).head]).collect();
    let truncated = WeightedDigraph::new(
        n,
        kept.iter().map(|&i| {
            let e = h.edge(i);
            (e.tail, e.head, e.weight.min(d.cap))
        }),
    )?;
    let (graph, map, origin) = contract_with_edge_origin(&truncated, root, &heavy)?;
    let origin: Vec<EdgeId> = origin.into_iter().map(|i| kept[i]).collect();
    let new_root = map[root];
    let mut from_original: Vec<Option<VertexId>> = map.iter().map(|&v| Some(v)).collect();
    for &v in &heavy {
        from_original[v] = None;
    }
    let mut to_original = vec![0; graph.vertex_count()];
    for (v, slot) in from_original.iter().enumerate() {
        if let Some(s) = slot {
            to_original[*s] = v;
        }
    }
    let mut edge_map = vec![None; h.edge_count()];
    for (new_id, &old) in origin.iter().enumerate() {
        edge_map[old] = Some(new_id);
    }
    let mut new_aux = vec![None; graph.vertex_count()];
    for v in 0..n {
        if let (Some(s), Some(old)) = (from_original[v], aux_edge[v]) {
            new_aux[s] = edge_map[old];
        }
    }
    Ok(SparsifiedGraph {
        graph,
        tau: p.tau(n, g.denominator()),
        root: new_root,
        aux_edge: new_aux,
        to_original,
        from_original,
        derived: d,
    })
}
