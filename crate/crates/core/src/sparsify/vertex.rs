use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexWeightedDigraph};

use super::params::{round_units, Derived, SparsifyParams, Tau};

/// Output of [`sparsify_vertex`]. Weights are integers in units of `τ`.
///
/// Input vertices keep their ids; auxiliary vertices are appended after them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsifiedVertexGraph {
    pub graph: VertexWeightedDigraph,
    pub tau: Tau,
    pub root: VertexId,
    /// The auxiliary vertex `a_v` of every non-root input vertex.
    pub aux_vertex: Vec<Option<VertexId>>,
    /// Input vertices that are neither the root nor its out-neighbours.
    pub eligible_sinks: Vec<VertexId>,
    /// Vertices whose in-edges were replaced by a single edge from the root.
    pub rewired: Vec<VertexId>,
    pub original_count: usize,
    pub derived: Derived,
}

impl SparsifiedVertexGraph {
    pub fn is_aux(&self, v: VertexId) -> bool {
        v >= self.original_count
    }

    pub fn is_degenerate(&self) -> bool {
        self.eligible_sinks.is_empty()
    }

    /// Lists violations of the deterministic structural guarantees, using
    /// the input graph `g` for the sink-set comparison.
    pub fn structural_violations(&self, g: &VertexWeightedDigraph) -> Vec<String> {
        let h = &self.graph;
        let d = self.derived;
        let mut out = Vec::new();
        if self.root >= h.vertex_count() {
            out.push("root missing".to_string());
            return out;
        }
        for v in 0..h.vertex_count() {
            if h.weight(v) > d.cap {
                out.push(format!("vertex {v} weight {} exceeds {}", h.weight(v), d.cap));
            }
            if h.weight(v) == 0 && !h.out_neighbors(v).is_empty() {
                out.push(format!("zero-weight vertex {v} has out-edges"));
            }
            if h.in_neighbors(v).len() as u64 > d.delta {
                out.push(format!("vertex {v} has in-degree {} > {}", h.in_neighbors(v).len(), d.delta));
            }
        }
        for v in (0..self.original_count).filter(|&v| v != self.root) {
            let Some(a) = self.aux_vertex[v] else {
                out.push(format!("vertex {v} has no auxiliary vertex"));
                continue;
            };
            if h.weight(a) != d.aux.min(d.cap) || !h.has_edge(self.root, a) {
                out.push(format!("auxiliary vertex of {v} is malformed"));
            }
            if !self.rewired.contains(&v) && !h.has_edge(a, v) {
                out.push(format!("auxiliary vertex of {v} lost its edge"));
            }
        }
        let sparse_sinks: Vec<VertexId> =
            h.eligible_sinks(self.root).into_iter().filter(|&v| v < self.original_count).collect();
        if sparse_sinks != self.eligible_sinks {
            out.push("eligible sinks disagree with the sparsified graph".to_string());
        }
        let mut expected = g.eligible_sinks(self.root);
        expected.retain(|v| !self.rewired.contains(v));
        if expected != self.eligible_sinks {
            out.push("eligible sinks differ from the input's minus rewired vertices".to_string());
        }
        out
    }
}

fn aux_ids(n: usize, root: VertexId) -> Vec<Option<VertexId>> {
    let mut next = n;
    (0..n)
        .map(|v| {
            (v != root).then(|| {
                next += 1;
                next - 1
            })
        })
        .collect()
}

fn round_weights(g: &VertexWeightedDigraph, p: &SparsifyParams, d: &Derived) -> Result<Vec<u64>> {
    let mut rng = p.seed.rng();
    g.weights().iter().map(|&w| round_units(w, d.steps, p.lambda_units, &mut rng)).collect()
}

/// The graph after rounding weights and adding auxiliary vertices, before
/// zero-weight vertices are stripped, weights truncated and heavy vertices
/// rewired.
pub fn sparsify_vertex_padded(
    g: &VertexWeightedDigraph,
    root: VertexId,
    p: &SparsifyParams,
) -> Result<(VertexWeightedDigraph, Tau, Vec<Option<VertexId>>)> {
    p.validate()?;
    g.check_vertex(root)?;
    let n = g.vertex_count();
    let d = p.derive(n);
    let mut weights = round_weights(g, p, &d)?;
    let aux = aux_ids(n, root);
    weights.resize(2 * n - 1, d.aux);
    let mut edges: Vec<_> = g.edges().to_vec();
    for (v, a) in aux.iter().enumerate() {
        if let Some(a) = *a {
            edges.push((root, a));
            edges.push((a, v));
        }
    }
    let h = VertexWeightedDigraph::allowing_zero(weights, edges, 1)?;
    Ok((h, p.tau(n, g.denominator()), aux))
}

/// Sparsifies a vertex-weighted graph for vertex cuts rooted at `root`.
///
/// The root's weight is floored at one so that it keeps its out-edges;
/// it never belongs to a separator.
pub fn sparsify_vertex(g: &VertexWeightedDigraph, root: VertexId, p: &SparsifyParams) -> Result<SparsifiedVertexGraph> {
    p.validate()?;
    g.check_vertex(root)?;
    let n = g.vertex_count();
    let d = p.derive(n);
    let mut weights = round_weights(g, p, &d)?;
    weights[root] = weights[root].max(1);
    for w in &mut weights {
        *w = (*w).min(d.cap);
    }
    let kept: Vec<(VertexId, VertexId)> =
        g.edges().iter().copied().filter(|&(u, v)| v != root && weights[u] > 0).collect();
    let mut indeg = vec![0u64; n];
    for &(_, v) in &kept {
        indeg[v] += 1;
    }
    let rewire: Vec<bool> = (0..n).map(|v| v != root && indeg[v] + 1 >= d.delta).collect();
    Ok(assemble(n, root, weights, kept.into_iter(), &rewire, &d, p.tau(n, g.denominator())))
}

/// Builds the final graph from truncated weights and stripped edges.
fn assemble(
    n: usize,
    root: VertexId,
    mut weights: Vec<u64>,
    edges: impl Iterator<Item = (VertexId, VertexId)>,
    rewire: &[bool],
    d: &Derived,
    tau: Tau,
) -> SparsifiedVertexGraph {
    let aux = aux_ids(n, root);
    weights.resize(2 * n - 1, d.aux.min(d.cap));
    let mut out: Vec<(VertexId, VertexId)> = edges.filter(|&(_, v)| !rewire[v]).collect();
    for (v, a) in aux.iter().enumerate() {
        if let Some(a) = *a {
            out.push((root, a));
            if !rewire[v] {
                out.push((a, v));
            }
        }
    }
    let rewired: Vec<VertexId> = (0..n).filter(|&v| rewire[v]).collect();
    out.extend(rewired.iter().map(|&v| (root, v)));
    let graph = VertexWeightedDigraph::allowing_zero(weights, out, 1).expect("ids in range");
    let eligible_sinks = graph.eligible_sinks(root).into_iter().filter(|&v| v < n).collect();
    SparsifiedVertexGraph {
        graph,
        tau,
        root,
        aux_vertex: aux,
        eligible_sinks,
        rewired,
        original_count: n,
        derived: *d,
    }
}

/// Root-independent part of [`sparsify_vertex`], shared across roots.
#[derive(Debug, Clone)]
pub struct VertexSparsifierCore {
    n: usize,
    weights: Vec<u64>,
    edges: Vec<(VertexId, VertexId)>,
    heavy: Vec<bool>,
    /// Out-neighbours of vertices whose weight rounded to zero.
    stripped_out: Vec<Vec<VertexId>>,
    derived: Derived,
    tau: Tau,
    /// Vertices and edges touched while building the core.
    pub work: u64,
}

/// Rounds, strips and truncates once; [`VertexSparsifierCore::attach_root`]
/// then adds the root-specific auxiliary vertices.
pub fn sparsify_vertex_deferred(g: &VertexWeightedDigraph, p: &SparsifyParams) -> Result<VertexSparsifierCore> {
    p.validate()?;
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooSmall);
    }
    let d = p.derive(n);
    let mut weights = round_weights(g, p, &d)?;
    for w in &mut weights {
        *w = (*w).min(d.cap);
    }
    let mut stripped_out = vec![Vec::new(); n];
    let mut edges = Vec::with_capacity(g.edge_count());
    let mut indeg = vec![0u64; n];
    for &(u, v) in g.edges() {
        if weights[u] == 0 {
            stripped_out[u].push(v);
        } else {
            edges.push((u, v));
            indeg[v] += 1;
        }
    }
    // One slot for the auxiliary edge and one for a restored root edge.
    let heavy: Vec<bool> = indeg.iter().map(|&c| c + 2 >= d.delta).collect();
    edges.retain(|&(_, v)| !heavy[v]);
    Ok(VertexSparsifierCore {
        n,
        weights,
        edges,
        heavy,
        stripped_out,
        derived: d,
        tau: p.tau(n, g.denominator()),
        work: (n + g.edge_count()) as u64,
    })
}

impl VertexSparsifierCore {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Completes the sparsification for `root`. Also returns the
    /// root-specific work: auxiliary vertices, restored and dropped root
    /// edges, and rewired vertices.
    pub fn attach_root(&self, root: VertexId) -> Result<(SparsifiedVertexGraph, u64)> {
        if root >= self.n {
            return Err(Error::VertexOutOfRange { id: root, n: self.n });
        }
        let mut weights = self.weights.clone();
        weights[root] = weights[root].max(1);
        let mut rewire = self.heavy.clone();
        rewire[root] = false;
        let restored: &[VertexId] = if self.weights[root] == 0 { &self.stripped_out[root] } else { &[] };
        let mut work = 2 * self.n as u64 + restored.len() as u64;
        work += self.edges.iter().filter(|e| e.1 == root).count() as u64;
        work += rewire.iter().filter(|&&h| h).count() as u64;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(restored.iter().map(|&v| (root, v)))
            .filter(|&(_, v)| v != root);
        let s = assemble(self.n, root, weights, edges, &rewire, &self.derived, self.tau);
        Ok((s, work))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vertex_in_cut;
    use crate::rng::SeedStream;

    fn params(eps: f64, lambda: u64, k: usize) -> SparsifyParams {
        SparsifyParams::new(eps, lambda, k, SeedStream::new(5))
    }

    #[test]
    fn single_vertex_gets_aux_path() {
        let steps = params(0.5, 1, 1).derive(2).steps;
        let p = params(0.5, 3 * steps, 1);
        // τ = 3, so the weight 9 rescales to exactly 3.
        let g = VertexWeightedDigraph::new(vec![1, 9], []).unwrap();
        let s = sparsify_vertex(&g, 0, &p).unwrap();
        let a = s.aux_vertex[1].unwrap();
        assert_eq!(a, 2);
        assert!(s.graph.has_edge(0, a) && s.graph.has_edge(a, 1));
        assert_eq!(s.graph.weight(1), 3);
        assert_eq!(s.eligible_sinks, vec![1]);
        assert_eq!(vertex_in_cut(&s.graph, 0, &[1]), Some((vec![a], s.derived.aux)));
        assert!(s.structural_violations(&g).is_empty());
    }

    #[test]
    fn heavy_vertex_is_rewired() {
        let constants = crate::sparsify::Constants { c_delta: 1.0, ..Default::default() };
        let p = SparsifyParams { constants, ..params(0.5, 4, 1) };
        let n = 40;
        let d = p.derive(n);
        let fan = d.delta as usize + 3;
        let center = n - 1;
        let g = VertexWeightedDigraph::new(vec![4; n], (1..=fan).map(|u| (u, center))).unwrap();
        let s = sparsify_vertex(&g, 0, &p).unwrap();
        assert_eq!(s.rewired, vec![center]);
        assert_eq!(s.graph.in_neighbors(center), &[0]);
        assert!(!s.eligible_sinks.contains(&center));
        assert!(s.structural_violations(&g).is_empty());
    }

    #[test]
    fn deferred_core_matches_invariants_for_every_root() {
        let g = VertexWeightedDigraph::new(
            vec![3, 1, 4, 1, 5, 9, 2, 6, 5, 3],
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 0), (2, 7), (5, 1)],
        )
        .unwrap();
        let core = sparsify_vertex_deferred(&g, &params(0.4, 2, 2)).unwrap();
        for r in 0..10 {
            let (s, work) = core.attach_root(r).unwrap();
            assert!(s.structural_violations(&g).is_empty(), "root {r}");
            assert!(work <= 4 * 10 + 4);
        }
    }
}
