use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{vertex_in_cut, SplitMapping, VertexId, VertexWeightedDigraph};
use crate::sparsify::{sparsify_vertex, SparsifiedVertexGraph, SparsifyParams};

use super::engine::{drive, FlowEnd, Residual, Template};
use super::{LocalConfig, LocalQuery, LocalQueryAnswer, LocalStats};

/// Local `(r, t)` vertex-cut structure over the split graph of the reversed
/// sparsified graph.
///
/// Each auxiliary path `(v⁺, a_v⁻, a_v⁺, r⁻)` is collapsed into the escape
/// arc of `v⁺`, whose capacity is `w(a_v)` plus `w(v)` if the sparsified
/// graph has an edge `(r, v)`.
#[derive(Debug, Clone)]
pub struct LocalVcStructure {
    pub sparse: SparsifiedVertexGraph,
    template: Template,
    /// Part of each escape capacity that stands for a direct root edge.
    direct: Vec<u64>,
    eligible: Vec<bool>,
    initial_out_degree: Vec<usize>,
    flow_limit: u64,
    budget: u64,
    config: LocalConfig,
    pub build_work: u64,
}

/// Sparsifies `g` with accuracy `c_eps · p.eps` and builds the collapsed
/// split template.
pub fn build_local_vc(
    g: &VertexWeightedDigraph,
    root: VertexId,
    p: &SparsifyParams,
    config: &LocalConfig,
) -> Result<LocalVcStructure> {
    p.validate()?;
    let inner = SparsifyParams { eps: p.eps * p.constants.c_eps, ..*p };
    let sparse = sparsify_vertex(g, root, &inner)?;
    Ok(from_sparse(sparse, g.edge_count(), p.eps, config))
}

pub(crate) fn from_sparse(sparse: SparsifiedVertexGraph, input_edges: usize, eps: f64, config: &LocalConfig) -> LocalVcStructure {
    let h = &sparse.graph;
    let n = sparse.original_count;
    let r = sparse.root;
    let nodes = 2 * n;
    let mut escape = vec![0u64; nodes];
    let mut direct = vec![0u64; n];
    let mut arcs = Vec::with_capacity(h.edge_count() + n);
    for v in (0..n).filter(|&v| v != r) {
        arcs.push((SplitMapping::in_vertex(v), SplitMapping::out_vertex(v), h.weight(v)));
    }
    for &(u, v) in h.edges() {
        match (sparse.is_aux(u), sparse.is_aux(v)) {
            (true, false) => escape[SplitMapping::out_vertex(v)] += h.weight(u),
            (false, false) if u == r => {
                escape[SplitMapping::out_vertex(v)] += h.weight(v);
                direct[v] += h.weight(v);
            }
            (false, false) if v != r => {
                arcs.push((SplitMapping::out_vertex(v), SplitMapping::in_vertex(u), h.weight(v)));
            }
            _ => {}
        }
    }
    let mut template = Template::new(nodes, arcs, escape);
    for v in (0..n).filter(|&v| v != r) {
        let a = SplitMapping::in_vertex(v);
        template.via[a] = template.find_arc(a, SplitMapping::out_vertex(v));
    }
    let initial_out_degree = (0..nodes)
        .map(|x| template.out_arcs(x).filter(|&a| template.cap[a] > 0).count() + usize::from(template.escape[x] > 0))
        .collect();
    let mut eligible = vec![false; n];
    for &t in &sparse.eligible_sinks {
        eligible[t] = true;
    }
    let d = sparse.derived;
    let flow_limit = ((1.0 + eps / 2.0) * d.steps as f64).floor() as u64;
    // Saturated out-vertices are at most flow / aux. Each is expanded over at
    // most Δ arcs, its in-vertex over at most one arc per unit of flow, and the
    // saturated in-vertices over at most the flow in total.
    let saturated = flow_limit / d.aux;
    let budget = (saturated + 1) * d.delta + saturated * (flow_limit + 2) + flow_limit + 2;
    let build_work = (input_edges + h.edge_count() + h.vertex_count()) as u64;
    LocalVcStructure {
        sparse,
        template,
        direct,
        eligible,
        initial_out_degree,
        flow_limit,
        budget,
        config: *config,
        build_work,
    }
}

impl LocalVcStructure {
    fn audit(&self, res: &Residual<'_>, stats: &mut LocalStats) {
        stats.audit_checks += 1;
        let saturated_out: HashSet<usize> = res
            .escape_used()
            .filter(|&(x, used)| used > 0 && used == self.template.escape[x])
            .map(|(x, _)| x)
            .collect();
        let count = saturated_out.len() as u64;
        stats.max_saturated = stats.max_saturated.max(count);
        if count * self.sparse.derived.aux > res.value {
            stats.saturation_violations += 1;
        }
        let mut in_degrees = 0u64;
        for x in res.touched() {
            let degree = res.out_degree(x);
            if degree > self.initial_out_degree[x] + stats.augmentations as usize {
                stats.out_degree_violations += 1;
            }
            if x % 2 == 0 {
                let out = x + 1;
                let internal_saturated = self.template.via[x].map_or(false, |a| res.forward_residual(a) == 0);
                if internal_saturated && res.escape_residual(out) > 0 {
                    in_degrees += degree as u64;
                }
            }
        }
        if in_degrees > res.value {
            stats.in_vertex_violations += 1;
        }
    }

    /// Sink component from the residual-reachable nodes; vertices whose
    /// own out-arcs are cut are moved to the separator.
    fn sink_from_reach(&self, t: VertexId, reach: &HashSet<usize>) -> Vec<VertexId> {
        let mut sink = Vec::new();
        for v in 0..self.sparse.original_count {
            let out = SplitMapping::out_vertex(v);
            if !reach.contains(&out) {
                continue;
            }
            let cut_arc = self.template.out_arcs(out).any(|a| self.template.cap[a] > 0 && !reach.contains(&self.template.head[a]));
            if v == t || (self.direct[v] == 0 && !cut_arc) {
                sink.push(v);
            }
        }
        sink
    }
}

impl LocalQuery for LocalVcStructure {
    fn query(&self, t: VertexId) -> Result<(LocalQueryAnswer, LocalStats)> {
        if t >= self.sparse.original_count {
            return Err(Error::VertexOutOfRange { id: t, n: self.sparse.original_count });
        }
        if !self.eligible[t] {
            return Err(Error::IneligibleSink(t));
        }
        let mut stats = LocalStats { queries: 1, ..Default::default() };
        let source = SplitMapping::out_vertex(t);
        let mut res = Residual::new(&self.template, source, true);
        let audit = self.config.audit;
        let end = drive(&mut res, self.flow_limit, self.config.unit_augmentation, self.budget, &mut stats, |r, s| {
            if audit {
                self.audit(r, s)
            }
        });
        let FlowEnd::Cut(reach) = end else {
            return Ok((LocalQueryAnswer::AboveThreshold, stats));
        };
        let sink = self.sink_from_reach(t, &reach);
        let Some((_, weight)) = vertex_in_cut(&self.sparse.graph, self.sparse.root, &sink) else {
            return Ok((LocalQueryAnswer::AboveThreshold, stats));
        };
        debug_assert!(weight <= res.value, "separator {weight} heavier than flow {}", res.value);
        if weight > self.flow_limit {
            return Ok((LocalQueryAnswer::AboveThreshold, stats));
        }
        Ok((LocalQueryAnswer::Found { sink_component: sink, sparse_weight: weight }, stats))
    }

    fn budget(&self) -> u64 {
        self.budget
    }

    fn flow_limit(&self) -> u64 {
        self.flow_limit
    }
}

impl LocalVcStructure {
    /// Escape capacity of `v⁺` in the collapsed template.
    pub fn escape_capacity(&self, v: VertexId) -> u64 {
        self.template.escape[SplitMapping::out_vertex(v)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeedStream;

    fn structure(g: &VertexWeightedDigraph, kappa: u64, k: usize) -> LocalVcStructure {
        let p = SparsifyParams::new(0.5, kappa, k, SeedStream::new(2));
        let cfg = LocalConfig { audit: true, ..Default::default() };
        build_local_vc(g, 0, &p, &cfg).unwrap()
    }

    #[test]
    fn path_separator() {
        let g = VertexWeightedDigraph::new(vec![5, 1, 5], [(0, 1), (1, 2)]).unwrap();
        let s = structure(&g, 2, 1);
        let (answer, stats) = s.query(2).unwrap();
        assert_eq!(answer, LocalQueryAnswer::Found { sink_component: vec![2], sparse_weight: answer_weight(&s, &[2]) });
        assert_eq!(stats.violations(), 0);
        assert_eq!(s.query(1), Err(Error::IneligibleSink(1)));
    }

    fn answer_weight(s: &LocalVcStructure, sink: &[VertexId]) -> u64 {
        vertex_in_cut(&s.sparse.graph, s.sparse.root, sink).unwrap().1
    }

    #[test]
    fn heavy_guard_is_above_threshold() {
        let g = VertexWeightedDigraph::new(vec![5, 100, 5], [(0, 1), (1, 2)]).unwrap();
        let s = structure(&g, 2, 1);
        assert_eq!(s.query(2).unwrap().0, LocalQueryAnswer::AboveThreshold);
    }

    #[test]
    fn every_eligible_vertex_has_its_escape() {
        let g = VertexWeightedDigraph::new(vec![1, 2, 3, 4], [(0, 1), (1, 2), (2, 3), (3, 1)]).unwrap();
        let s = structure(&g, 4, 2);
        for &v in &s.sparse.eligible_sinks {
            assert_eq!(s.escape_capacity(v), s.sparse.derived.aux);
        }
    }
}
